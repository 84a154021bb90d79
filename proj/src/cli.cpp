#include "jones/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "jones/analysis.hpp"
#include "jones/bracket.hpp"
#include "jones/engine.hpp"
#include "jones/errors.hpp"
#include "jones/fixtures.hpp"

namespace jones::cli {

namespace {

using nlohmann::json;

constexpr const char* kBraidGrammar =
    "braid grammar: B<n>: x<i> x<i>^<e> ...   e.g. \"B3: x1^2 x2^-1 x1\"; families mark one slot x<i>^@";

struct Globals {
  long max_naive_crossings = 24;
  int max_strands = 12;
  std::uint64_t seed = 0;
  int jobs = 1;

  OracleLimits limits() const { return OracleLimits{max_naive_crossings, max_strands}; }
};

json poly_record(const std::string& input, const LaurentPoly& p) {
  json terms = json::object();
  for (const auto& [e, c] : p.terms()) terms[std::to_string(e)] = c.get_str();
  json rec;
  rec["input"] = input;
  rec["polynomial"] = std::move(terms);
  if (p.is_zero()) {
    rec["degree"] = nullptr;
    rec["order"] = nullptr;
    rec["leading"] = "0";
  } else {
    rec["degree"] = p.degree();
    rec["order"] = p.order();
    rec["leading"] = p.leading().get_str();
  }
  return rec;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range must look like a..b, got '" + text + "'");
  std::size_t used_a = 0;
  std::size_t used_b = 0;
  const std::string a = text.substr(0, dots);
  const std::string b = text.substr(dots + 2);
  int lo = 0;
  int hi = 0;
  try {
    lo = std::stoi(a, &used_a);
    hi = std::stoi(b, &used_b);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("range must look like a..b, got '" + text + "'");
  }
  if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("range must look like a..b, got '" + text + "'");
  if (lo > hi) throw std::invalid_argument("empty range " + text);
  return {lo, hi};
}

std::string bits_string(const std::vector<int>& bits) {
  std::string s;
  for (int b : bits) s += static_cast<char>('0' + b);
  return s;
}

std::string word_text(const BraidWord& w) {
  if (w.empty()) return "1";
  const std::string s = w.to_string();
  return s.substr(s.find(':') + 2);
}

std::string power_of_two(long exponent) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(exponent));
  return "2^" + std::to_string(exponent) + " = " + v.get_str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- commands --------------------------------------------------------------

int cmd_jones(const std::string& text, const std::string& engine, bool as_json, const Globals& g,
              std::ostream& out) {
  const BraidWord w = parse_braid(text);
  LaurentPoly v;
  if (engine == "recurrence") {
    v = jones(w);
  } else if (engine == "oracle") {
    v = jones_via_bracket(w, BracketMethod::TransferMatrix, g.limits());
  } else {
    v = jones_via_bracket(w, BracketMethod::StateSum, g.limits());
  }
  if (as_json) {
    out << poly_record(text, v).dump() << "\n";
  } else {
    out << v.to_string() << "\n";
  }
  return kOk;
}

int cmd_family(const std::string& text, const std::string& range, bool as_json, std::ostream& out) {
  const ExponentFamily f = parse_family(text);
  const auto [lo, hi] = parse_range(range);
  MemoTable memo;
  const auto values = jones_family(f, lo, hi, memo);
  for (int e = lo; e <= hi; ++e) {
    const LaurentPoly& v = values[static_cast<std::size_t>(e - lo)];
    if (as_json) {
      out << poly_record(f.at(e).to_string(), v).dump() << "\n";
    } else {
      out << v.to_string() << "\n";
    }
  }
  return kOk;
}

int cmd_genfun(const std::string& text, const std::vector<int>& coeff, bool as_json, std::ostream& out) {
  const BraidWord w = parse_braid(text);
  std::vector<int> indices;
  for (const auto& syl : w.syllables()) indices.push_back(syl.gen);
  MemoTable memo;
  const GenFun gf = genfun_build(w.strands(), indices, memo);
  if (coeff.empty()) {
    // Seeds, one per J*.
    for (std::size_t mask = 0; mask < gf.seeds.size(); ++mask) {
      std::vector<int> bits;
      for (std::size_t h = 0; h < indices.size(); ++h) bits.push_back(static_cast<int>((mask >> h) & 1U));
      if (as_json) {
        out << poly_record("J=" + bits_string(bits), gf.seeds[mask]).dump() << "\n";
      } else {
        out << "J=" << bits_string(bits) << "  " << gf.seeds[mask].to_string() << "\n";
      }
    }
    return kOk;
  }
  const LaurentPoly c = genfun_coeff(gf, coeff);
  std::vector<Syllable> syls;
  for (std::size_t h = 0; h < indices.size(); ++h) syls.push_back({indices[h], coeff[h]});
  const std::string input = BraidWord(w.strands(), std::move(syls)).to_string();
  if (as_json) {
    out << poly_record(input, c).dump() << "\n";
  } else {
    out << c.to_string() << "\n";
  }
  return kOk;
}

int cmd_classify(const std::string& text, int at, int steps, std::ostream& out) {
  const ExponentFamily f = parse_family(text);
  MemoTable memo;
  const auto v = jones_family(f, at, at + steps, memo);
  const PairClass cls = classify_pair(v[0], v[1]);
  out << "pair (" << at << ", " << at + 1 << "): " << to_string(cls.kind) << ", C = " << cls.C.get_str() << "\n";
  out << "deg V(" << at << ") = " << v[0].degree() << ", deg V(" << at + 1 << ") = " << v[1].degree() << "\n";
  std::optional<LaurentPoly> v2;
  if (steps >= 2) v2 = v[2];
  bool ok = true;
  for (int m = 1; m <= steps; ++m) {
    const DegreePrediction p = predict_degrees(cls, v[0], v[1], m, v2);
    const LaurentPoly& actual = v[static_cast<std::size_t>(m)];
    out << "m=" << m << "  deg " << actual.degree() << "  lead " << actual.leading().get_str();
    if (p.reclassify) {
      out << "  (critical chain continues; reclassify from e+1)\n";
      break;
    }
    const bool match = (!p.degree || *p.degree == actual.degree()) && (!p.leading || *p.leading == actual.leading());
    ok = ok && match;
    out << "  predicted";
    if (p.degree) out << " deg " << *p.degree;
    if (p.leading) out << " lead " << p.leading->get_str();
    out << " [" << p.rule << "]" << (match ? "" : "  MISMATCH") << "\n";
  }
  return ok ? kOk : kViolation;
}

int cmd_audit_family(const std::string& text, int from, int window, std::ostream& out) {
  const ExponentFamily f = parse_family(text);
  MemoTable memo;
  const PropagationReport r = propagation_audit(f, from, window, memo);
  out << "family " << f.to_string() << ", e in [" << from << ", " << from + window << "]\n";
  out << "pairs " << r.pairs_checked << " (stable " << r.stable << ", semistable " << r.semistable << ", critical "
      << r.critical << ")\n";
  out << "predictions checked " << r.predictions_checked << ", bounds checked " << r.order_bounds_checked << "\n";
  if (r.divergence_from) out << "degrees grow from e = " << *r.divergence_from << "\n";
  for (const auto& s : r.failures) out << "FAIL " << s << "\n";
  out << (r.ok() ? "ok" : "violations found") << "\n";
  return r.ok() ? kOk : kViolation;
}

int cmd_audit_degree(const std::vector<int>& exps, bool as_json, std::ostream& out) {
  MemoTable memo;
  const DegreeReport r = degree_audit(exps, memo);
  if (as_json) {
    json rec;
    rec["exponents"] = r.exponents;
    rec["D"] = r.D;
    rec["L"] = r.L;
    rec["Z"] = r.Z;
    rec["bound"] = r.bound;
    rec["positive_bound"] = r.positive_bound;
    rec["degree"] = r.degree;
    rec["leading"] = r.leading.get_str();
    rec["bound_met"] = r.bound_met;
    out << rec.dump() << "\n";
  } else {
    out << "D=" << r.D << " L=" << r.L << " Z=" << r.Z << " bound 3D-2L+2Z=" << r.bound << " degree " << r.degree
        << " leading " << r.leading.get_str() << (r.bound_met ? "" : "  BOUND VIOLATED") << "\n";
  }
  return r.bound_met ? kOk : kViolation;
}

int cmd_audit_delta(int k_max, std::ostream& out) {
  const RecurrenceCheck r = delta_recur_check(k_max);
  MemoTable memo;
  int mismatches = 0;
  for (int n = 0; n <= std::min(6 * k_max + 5, kDeltaClosedCheckedUpTo); ++n) {
    if (delta_closed(n) != jones(delta_word(n), memo)) {
      out << "FAIL closed form differs from the engine at n=" << n << "\n";
      ++mismatches;
    }
  }
  out << "relations checked " << r.relations_checked << "\n";
  for (const auto& s : r.failures) out << "FAIL " << s << "\n";
  const bool ok = r.ok() && mismatches == 0;
  out << (ok ? "ok" : "violations found") << "\n";
  return ok ? kOk : kViolation;
}

int cmd_audit_conjecture(int L, int sample, int max_exp, const Globals& g, std::ostream& out) {
  MemoTable memo;
  const ConjectureReport r = conjecture_scan(L, sample, max_exp, g.seed, memo);
  out << "L=" << L << " sampled " << r.checked << ", leading term differs from s^(3D-2L) in "
      << r.counterexamples.size() << "\n";
  for (const auto& c : r.counterexamples) {
    out << "  (";
    for (std::size_t i = 0; i < c.exponents.size(); ++i) out << (i ? "," : "") << c.exponents[i];
    out << ") degree " << c.degree << " leading " << c.leading.get_str() << " expected degree "
        << c.expected_degree << "\n";
  }
  // A conjecture: report only.
  return kOk;
}

int cmd_tables(int L, bool as_json, const Globals& g, std::ostream& out) {
  MemoTable memo;
  const auto rows = leading_tables(L, memo, g.jobs);
  long total = 0;
  if (!as_json) out << "delta  J*" << std::string(static_cast<std::size_t>(2 * L - 1), ' ') << "w  N  T  deg\n";
  for (const auto& r : rows) {
    total += r.N;
    const LaurentPoly T = LaurentPoly::monomial(r.T_coefficient, r.T_degree);
    if (as_json) {
      json rec;
      rec["delta"] = r.delta;
      rec["J"] = bits_string(r.bits);
      rec["w"] = word_text(r.w);
      rec["N"] = r.N;
      rec["T"] = T.to_string();
      rec["deg"] = r.deg;
      out << rec.dump() << "\n";
    } else {
      out << std::setw(5) << r.delta << "  " << bits_string(r.bits) << "  " << word_text(r.w) << "  " << r.N << "  "
          << T.to_string() << "  " << r.deg << "\n";
    }
  }
  const LeadingAssembly a = leading_assembly(rows);
  if (!as_json) {
    out << "total N " << total << ", top degree " << a.top_degree << ", leading coefficient " << a.coefficient.get_str()
        << "\n";
  }
  return kOk;
}

int cmd_units(const std::string& text, bool as_json, std::ostream& out) {
  const ExponentFamily f = parse_family(text);
  MemoTable memo;
  const UnitSearchResult r = unit_search(f, memo);
  const UnitWindow& w = r.window;
  if (as_json) {
    json rec;
    rec["input"] = f.to_string();
    rec["e_lo"] = w.e_lo;
    rec["e_hi"] = w.e_hi;
    rec["upper_certificate"] = {{"e", w.upper_e}, {"orders", {w.upper_orders[0], w.upper_orders[1]}}};
    rec["lower_certificate"] = {{"e", w.lower_e}, {"degrees", {w.lower_degrees[0], w.lower_degrees[1]}}};
    rec["hits"] = r.hits;
    out << rec.dump() << "\n";
    return kOk;
  }
  out << "window [" << w.e_lo << ", " << w.e_hi << "]\n";
  out << "  above: ord V(" << w.upper_e << ") = " << w.upper_orders[0] << ", ord V(" << w.upper_e + 1
      << ") = " << w.upper_orders[1] << "\n";
  out << "  below: deg V(" << w.lower_e << ") = " << w.lower_degrees[0] << ", deg V(" << w.lower_e - 1
      << ") = " << w.lower_degrees[1] << "\n";
  out << "hits:";
  if (r.hits.empty()) out << " none";
  for (int h : r.hits) out << " " << h;
  out << "\n";
  return kOk;
}

int cmd_bench(const std::string& text, const std::string& compare, const Globals& g, std::ostream& out) {
  const BraidWord w = parse_braid(text);
  out << "braid " << w.to_string() << "\n";

  const auto t0 = std::chrono::steady_clock::now();
  MemoTable memo;
  const LaurentPoly v = jones(w, memo);
  const double engine_time = seconds_since(t0);

  const auto t1 = std::chrono::steady_clock::now();
  MemoTable base_memo;
  const auto terms = expand(w);
  const LaurentPoly full = assemble_expansion(terms, w.size(), [&](const BraidWord& b) { return jones(b, base_memo); });
  const double expand_time = seconds_since(t1);

  out << std::fixed << std::setprecision(6);
  out << "engine:    " << engine_time << " s, memo " << memo.size() << " entries, " << memo.expansions.load()
      << " expansions\n";
  out << "expansion: " << expand_time << " s, terms " << power_of_two(static_cast<long>(w.size())) << " ("
      << terms.size() << " nonzero)\n";
  out << "result:    degree " << v.degree() << ", order " << v.order() << ", leading " << v.leading().get_str()
      << ", " << v.term_count() << " terms\n";
  if (full != v) {
    out << "MISMATCH between engine and full expansion\n";
    return kViolation;
  }
  out << "naive:     terms " << power_of_two(w.crossing_count()) << "\n";
  if (compare != "naive") return kOk;

  try {
    const auto t2 = std::chrono::steady_clock::now();
    const LaurentPoly naive = jones_via_bracket(w, BracketMethod::StateSum, g.limits());
    out << "naive:     " << seconds_since(t2) << " s, " << (naive == v ? "equal" : "MISMATCH") << "\n";
    return naive == v ? kOk : kViolation;
  } catch (const CapExceeded& e) {
    out << "naive:     CapExceeded at c = " << e.value() << " (cap " << e.cap()
        << "); raise --max-naive-crossings or use the expansion path\n";
  }
  return kOk;
}

int cmd_selftest(std::ostream& out) {
  MemoTable memo;
  int failed = 0;
  for (const auto& r : run_fixtures(memo)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.fixture->name << ": " << r.fixture->braid << " -> " << r.engine;
    if (!r.passed) out << " (expected " << r.fixture->expected << ", oracle " << r.oracle << ")";
    out << "\n";
    failed += !r.passed;
  }
  out << (failed == 0 ? "all fixtures pass" : std::to_string(failed) + " fixture(s) failed") << "\n";
  return failed == 0 ? kOk : kViolation;
}

// "--at -3" would be read as a flag; glue such values to their option.
std::vector<std::string> glue_values(const std::vector<std::string>& args) {
  static const std::vector<std::string> valued = {"--range", "--at", "--from", "--coeff", "--degree"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i + 1 < args.size() && std::find(valued.begin(), valued.end(), args[i]) != valued.end()) {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jones polynomials of closed braids"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--max-naive-crossings", g.max_naive_crossings, "crossing cap of the state-sum oracle")
      ->capture_default_str();
  app.add_option("--max-strands", g.max_strands, "strand cap of the transfer-matrix oracle")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  std::string braid;
  std::string family;
  bool as_json = false;

  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial of a closed braid");
  std::string engine = "recurrence";
  jones_cmd->add_option("braid", braid, "braid word")->required();
  jones_cmd->add_option("--engine", engine)->check(CLI::IsMember({"recurrence", "oracle", "naive"}))
      ->capture_default_str();
  jones_cmd->add_flag("--json", as_json);

  auto* family_cmd = app.add_subcommand("family", "family members V(e) over a range");
  std::string range;
  family_cmd->add_option("family", family, "braid with one slot x<i>^@")->required();
  family_cmd->add_option("--range", range, "a..b")->required();
  family_cmd->add_flag("--json", as_json);

  auto* genfun_cmd = app.add_subcommand("genfun", "generating-function seeds or one coefficient");
  std::vector<int> coeff;
  genfun_cmd->add_option("braid", braid, "generator pattern; exponents are ignored")->required();
  genfun_cmd->add_option("--coeff", coeff, "exponent tuple a1,a2,...")->delimiter(',');
  genfun_cmd->add_flag("--json", as_json);

  auto* classify_cmd = app.add_subcommand("classify", "class of the pair (V(e), V(e+1)) and its predictions");
  int at = 0;
  int steps = 6;
  classify_cmd->add_option("family", family)->required();
  classify_cmd->add_option("--at", at)->capture_default_str();
  classify_cmd->add_option("--steps", steps)->capture_default_str()->check(CLI::Range(1, 1000));

  auto* audit_cmd = app.add_subcommand("audit", "propagation, degree, recurrence or conjecture audit");
  int from = 0;
  int window = 10;
  std::vector<int> degree_exps;
  int delta_k = 0;
  int conj_L = 0;
  int sample = 100;
  int max_exp = 4;
  audit_cmd->add_option("family", family, "family for the propagation audit");
  audit_cmd->add_option("--from", from)->capture_default_str();
  audit_cmd->add_option("--window", window)->capture_default_str()->check(CLI::Range(2, 10000));
  auto* degree_opt = audit_cmd->add_option("--degree", degree_exps, "3-braid exponents a1,...,a2L")->delimiter(',');
  auto* delta_opt = audit_cmd->add_option("--delta", delta_k, "check the half-twist recurrences up to k")
                        ->check(CLI::PositiveNumber);
  auto* conj_opt = audit_cmd->add_option("--conjecture", conj_L, "sample exponents >= 2 with L syllable pairs")
                       ->check(CLI::PositiveNumber);
  audit_cmd->add_option("--sample", sample)->capture_default_str()->check(CLI::NonNegativeNumber);
  audit_cmd->add_option("--max-exp", max_exp)->capture_default_str()->check(CLI::Range(2, 1000));
  audit_cmd->add_flag("--json", as_json);

  auto* tables_cmd = app.add_subcommand("tables", "leading-term tables");
  int L = 2;
  tables_cmd->add_option("--L", L)->capture_default_str()->check(CLI::Range(1, 6));
  tables_cmd->add_flag("--json", as_json);

  auto* units_cmd = app.add_subcommand("units", "members of a family equal to 1");
  units_cmd->add_option("family", family)->required();
  units_cmd->add_flag("--json", as_json);

  auto* bench_cmd = app.add_subcommand("bench", "expansion path against the naive state sum");
  std::string compare;
  bench_cmd->add_option("--braid", braid)->required();
  bench_cmd->add_option("--compare", compare)->check(CLI::IsMember({"naive"}));

  auto* selftest_cmd = app.add_subcommand("selftest", "check the built-in reference values");

  const std::vector<std::string> args = glue_values(raw_args);
  std::vector<const char*> argv{"jones"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (jones_cmd->parsed()) return cmd_jones(braid, engine, as_json, g, out);
    if (family_cmd->parsed()) return cmd_family(family, range, as_json, out);
    if (genfun_cmd->parsed()) return cmd_genfun(braid, coeff, as_json, out);
    if (classify_cmd->parsed()) return cmd_classify(family, at, steps, out);
    if (audit_cmd->parsed()) {
      const int modes = (*degree_opt ? 1 : 0) + (*delta_opt ? 1 : 0) + (*conj_opt ? 1 : 0) + (family.empty() ? 0 : 1);
      if (modes != 1) {
        err << "audit: give exactly one of FAMILY, --degree, --delta, --conjecture\n";
        return kUsage;
      }
      if (*degree_opt) return cmd_audit_degree(degree_exps, as_json, out);
      if (*delta_opt) return cmd_audit_delta(delta_k, out);
      if (*conj_opt) return cmd_audit_conjecture(conj_L, sample, max_exp, g, out);
      return cmd_audit_family(family, from, window, out);
    }
    if (tables_cmd->parsed()) return cmd_tables(L, as_json, g, out);
    if (units_cmd->parsed()) return cmd_units(family, as_json, out);
    if (bench_cmd->parsed()) return cmd_bench(braid, compare, g, out);
    if (selftest_cmd->parsed()) return cmd_selftest(out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n" << kBraidGrammar << "\n";
    return kUsage;
  } catch (const BoundsError& e) {
    err << "error: " << e.what() << "\n" << kBraidGrammar << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (value " << e.value() << ", cap " << e.cap() << ")\n";
    if (e.cap() > 0) err << "use --engine recurrence, or raise the cap\n";
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kViolation;
  } catch (const NotDivisible& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kViolation;
  } catch (const ParityError& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace jones::cli
