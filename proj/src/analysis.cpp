#include "jones/analysis.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "jones/errors.hpp"

namespace jones {

std::string to_string(PairKind kind) {
  switch (kind) {
    case PairKind::Stable: return "stable";
    case PairKind::Semistable: return "semistable";
    case PairKind::Critical: return "critical";
  }
  return "?";
}

PairClass classify_pair(const LaurentPoly& v_e, const LaurentPoly& v_e1) {
  if (v_e.is_zero() || v_e1.is_zero()) throw ZeroPolynomial("classify_pair: zero polynomial");
  PairClass cls;
  const int d0 = v_e.degree();
  const int d1 = v_e1.degree();
  if (d1 > d0 + 1) {
    cls.kind = PairKind::Stable;
  } else if (d1 <= d0) {
    cls.kind = PairKind::Semistable;
  } else {
    cls.kind = PairKind::Critical;
  }
  cls.C = v_e.leading() + v_e1.leading();
  return cls;
}

DegreePrediction predict_degrees(const PairClass& cls, const LaurentPoly& v_e, const LaurentPoly& v_e1, int m,
                                 const std::optional<LaurentPoly>& v_e2) {
  if (m < 1) throw std::invalid_argument("predict_degrees: m must be >= 1");
  DegreePrediction p;
  if (m == 1) {
    p.degree = v_e1.degree();
    p.leading = v_e1.leading();
    p.rule = "given";
    return p;
  }
  switch (cls.kind) {
    case PairKind::Stable:
      p.degree = v_e1.degree() + 3 * (m - 1);
      p.leading = v_e1.leading();
      p.rule = "stable";
      return p;
    case PairKind::Semistable:
      p.degree = v_e.degree() + 3 * m - 2;
      p.leading = v_e.leading();
      p.rule = "semistable";
      return p;
    case PairKind::Critical:
      break;
  }
  if (cls.C != 0) {
    p.degree = v_e1.degree() + 3 * (m - 1);
    p.leading = cls.C;
    p.rule = "critical, C != 0";
    return p;
  }
  if (!v_e2) throw std::invalid_argument("predict_degrees: critical pair with C = 0 needs V(e+2)");
  const int d1 = v_e1.degree();
  const int d2 = v_e2->degree();
  if (d2 == d1 + 2) {
    // (e+1, e+2) is stable, so growth continues from V(e+2).
    p.degree = d1 + 3 * m - 4;
    p.leading = v_e2->leading();
    p.rule = "critical, C = 0, deg V(e+2) = deg V(e+1) + 2";
  } else if (d2 <= d1) {
    p.rule = "critical, C = 0, deg V(e+2) <= deg V(e+1)";
    if (m == 2) {
      p.degree = d2;
      p.leading = v_e2->leading();
    } else {
      p.degree = d1 + 3 * m - 5;
      p.leading = v_e1.leading();
    }
  } else {
    p.rule = "critical, C = 0, deg V(e+2) = deg V(e+1) + 1";
    if (m == 2) {
      p.degree = d2;
      p.leading = v_e2->leading();
    } else {
      p.reclassify = true;
    }
  }
  return p;
}

bool order_bound_check(const ExponentFamily& f, int e, int m, MemoTable& memo) {
  if (m < 2) throw std::invalid_argument("order_bound_check: m must be >= 2");
  const auto v = jones_family(f, e, e + m, memo);
  return v[static_cast<std::size_t>(m)].order() >= std::min(v[0].order(), v[1].order()) + (m - 1);
}

bool degree_bound_down_check(const ExponentFamily& f, int e, int m, MemoTable& memo) {
  if (m < 2) throw std::invalid_argument("degree_bound_down_check: m must be >= 2");
  const auto v = jones_family(f, e - m, e, memo);
  const std::size_t top = static_cast<std::size_t>(m);
  return v[0].degree() <= std::max(v[top - 1].degree(), v[top].degree()) - (m - 1);
}

namespace {

// Values V(e) for e in [lo, hi] with index helper.
struct Window {
  int lo;
  std::vector<LaurentPoly> values;
  const LaurentPoly& at(int e) const { return values[static_cast<std::size_t>(e - lo)]; }
  int hi() const { return lo + static_cast<int>(values.size()) - 1; }
};

std::string family_at(const ExponentFamily& f, int e) { return f.to_string() + " at e=" + std::to_string(e); }

}  // namespace

PropagationReport propagation_audit(const ExponentFamily& f, int e_start, int window, MemoTable& memo) {
  if (window < 2) throw std::invalid_argument("propagation_audit: window must be >= 2");
  PropagationReport rep;
  const Window w{e_start - window, jones_family(f, e_start - window, e_start + window, memo)};
  const int top = e_start + window;

  for (int e = e_start; e < top; ++e) {
    const auto cls = classify_pair(w.at(e), w.at(e + 1));
    ++rep.pairs_checked;
    if (cls.kind == PairKind::Stable) ++rep.stable;
    if (cls.kind == PairKind::Semistable) ++rep.semistable;
    if (cls.kind == PairKind::Critical) ++rep.critical;

    std::optional<LaurentPoly> v2;
    if (e + 2 <= top) v2 = w.at(e + 2);
    if (cls.kind == PairKind::Critical && cls.C == 0 && !v2) continue;

    // First index from which every later pair must be stable.
    std::optional<int> stable_from;
    if (cls.kind == PairKind::Stable) stable_from = e;
    if (cls.kind == PairKind::Semistable) stable_from = e + 1;
    if (cls.kind == PairKind::Critical) {
      if (cls.C != 0) {
        stable_from = e + 1;
      } else if (v2->degree() == w.at(e + 1).degree() + 2) {
        stable_from = e + 1;
      } else if (v2->degree() <= w.at(e + 1).degree()) {
        stable_from = e + 2;
      }
    }
    if (stable_from) {
      for (int j = *stable_from; j + 1 <= top; ++j) {
        if (classify_pair(w.at(j), w.at(j + 1)).kind != PairKind::Stable) {
          rep.failures.push_back(family_at(f, j) + ": pair not stable after a " + to_string(cls.kind) +
                                 " pair at e=" + std::to_string(e));
        }
      }
    }

    for (int m = 1; e + m <= top; ++m) {
      const auto p = predict_degrees(cls, w.at(e), w.at(e + 1), m, v2);
      if (p.reclassify) break;
      ++rep.predictions_checked;
      const LaurentPoly& actual = w.at(e + m);
      if (p.degree && *p.degree != actual.degree()) {
        rep.failures.push_back(family_at(f, e + m) + ": degree " + std::to_string(actual.degree()) +
                               " but " + p.rule + " rule predicts " + std::to_string(*p.degree));
      }
      if (p.leading && *p.leading != actual.leading()) {
        rep.failures.push_back(family_at(f, e + m) + ": leading coefficient " + actual.leading().get_str() +
                               " but " + p.rule + " rule predicts " + p.leading->get_str());
      }
    }
  }

  for (int e = w.lo; e <= top; ++e) {
    for (int m = 2; e + m <= top; ++m) {
      ++rep.order_bounds_checked;
      const int bound = std::min(w.at(e).order(), w.at(e + 1).order()) + (m - 1);
      if (w.at(e + m).order() < bound) {
        rep.failures.push_back(family_at(f, e + m) + ": order below " + std::to_string(bound));
      }
    }
    for (int m = 2; e - m >= w.lo; ++m) {
      ++rep.order_bounds_checked;
      const int bound = std::max(w.at(e - 1).degree(), w.at(e).degree()) - (m - 1);
      if (w.at(e - m).degree() > bound) {
        rep.failures.push_back(family_at(f, e - m) + ": degree above " + std::to_string(bound));
      }
    }
  }

  // Degree divergence: past the unit window every member is a polynomial in s;
  // the first stable pair from there starts strictly increasing degrees.
  const UnitWindow uw = unit_window(f, memo);
  constexpr int kSearch = 200;
  const Window far{uw.upper_e, jones_family(f, uw.upper_e, uw.upper_e + kSearch + window, memo)};
  for (int e = uw.upper_e; e < uw.upper_e + kSearch; ++e) {
    if (classify_pair(far.at(e), far.at(e + 1)).kind == PairKind::Stable) {
      rep.divergence_from = e;
      break;
    }
  }
  if (!rep.divergence_from) {
    rep.failures.push_back(f.to_string() + ": no stable pair within " + std::to_string(kSearch) +
                           " steps of the certified index");
  } else {
    for (int e = *rep.divergence_from + 1; e <= *rep.divergence_from + window; ++e) {
      if (far.at(e + 1).degree() != far.at(e).degree() + 3) {
        rep.failures.push_back(family_at(f, e + 1) + ": degree does not grow by 3 past the certified index");
      }
    }
  }
  return rep;
}

LaurentPoly v2_closed(int a) {
  const int n = a < 0 ? -a : a;
  if (n <= 3) {
    LaurentPoly prev = unlink_factor();  // V_2(0)
    LaurentPoly cur(1L);                 // V_2(1), and V_2(-1)
    if (a == 0) return prev;
    if (a > 0) {
      for (int e = 2; e <= a; ++e) {
        LaurentPoly next = recurrence_up(prev, cur);
        prev = std::move(cur);
        cur = std::move(next);
      }
      return cur;
    }
    // Descend: keep (V(e+1), V(e+2)) = (cur, prev).
    LaurentPoly hi = unlink_factor();
    LaurentPoly lo(1L);
    for (int e = -2; e >= a; --e) {
      LaurentPoly next = recurrence_down(lo, hi);
      hi = std::move(lo);
      lo = std::move(next);
    }
    return lo;
  }
  const long last_sign = (a + 1) % 2 == 0 ? 1 : -1;  // (-1)^{a+1}
  LaurentPoly out;
  for (int j = 0; j <= n - 2; ++j) {
    const long sign = j % 2 == 0 ? -1 : 1;  // (-1)^{j+1}
    const int e = a > 0 ? 3 * a - 1 - 2 * j : 3 * a + 1 + 2 * j;
    out += LaurentPoly::monomial(sign, e);
  }
  out += LaurentPoly::monomial(last_sign, a > 0 ? a - 1 : a + 1);
  return out;
}

LaurentPoly delta_closed(int n) {
  if (n < 0) throw std::invalid_argument("delta_closed: n must be >= 0");
  const int k = n / 6;
  switch (n % 6) {
    case 0:
      return LaurentPoly::monomial(2, 12 * k) + s_pow(6 * k + 2) + s_pow(6 * k - 2);
    case 1:
      return s_pow(12 * k + 3) - s_pow(12 * k + 1) - s_pow(6 * k + 3) - s_pow(6 * k - 1);
    case 2:
      return -s_pow(12 * k + 4) + s_pow(6 * k + 4) + s_pow(6 * k);
    case 3:
      return -s_pow(6 * k + 5) - s_pow(6 * k + 1);
    case 4:
      return -s_pow(12 * k + 8) + s_pow(6 * k + 6) + s_pow(6 * k + 2);
    default:
      return -s_pow(12 * k + 11) + s_pow(12 * k + 9) - s_pow(6 * k + 7) - s_pow(6 * k + 3);
  }
}

BraidWord delta_word(int n) {
  if (n < 0) throw std::invalid_argument("delta_word: n must be >= 0");
  std::vector<Syllable> syls;
  for (int i = 0; i < n; ++i) syls.push_back({i % 2 == 0 ? 1 : 2, 1});
  return BraidWord(3, std::move(syls));
}

LaurentPoly delta_value(int n, MemoTable& memo) {
  if (n <= kDeltaClosedCheckedUpTo) return delta_closed(n);
  return jones(delta_word(n), memo);
}

RecurrenceCheck delta_recur_check(int k_max) {
  if (k_max < 1) throw std::invalid_argument("delta_recur_check: k_max must be >= 1");
  const int top = 6 * k_max + 5;
  std::vector<LaurentPoly> v;
  for (int n = 0; n <= top; ++n) v.push_back(delta_closed(n));
  const LaurentPoly c1 = LaurentPoly::from_terms({{3, 1}, {1, -1}});
  const LaurentPoly c3 = LaurentPoly::from_terms({{7, 1}, {5, -1}});

  RecurrenceCheck out;
  auto check = [&](bool holds, const std::string& what) {
    ++out.relations_checked;
    if (!holds) out.failures.push_back(what);
  };
  for (int j = 1; 2 * j + 1 <= top; ++j) {
    check(v[2 * j + 1] == c1 * v[2 * j] + v[2 * j - 1].shifted(4), "odd step at n=" + std::to_string(2 * j + 1));
  }
  for (int k = 0; k <= k_max; ++k) {
    check(v[6 * k + 4] == c1 * v[6 * k + 3] + v[6 * k + 2].shifted(4), "6k+4 at k=" + std::to_string(k));
  }
  for (int k = 1; k <= k_max; ++k) {
    check(v[6 * k + 2] == c1 * v[6 * k + 1] + c3 * v[6 * k - 1] + v[6 * k - 2].shifted(8),
          "6k+2 at k=" + std::to_string(k));
    check(v[6 * k] == c1 * (v[6 * k - 1] + v[6 * k - 3].shifted(4) + v[6 * k - 5].shifted(8)) +
                          v[6 * k - 6].shifted(12),
          "6k at k=" + std::to_string(k));
  }
  return out;
}

BraidWord three_braid(std::span<const int> exponents) {
  std::vector<Syllable> syls;
  for (std::size_t i = 0; i < exponents.size(); ++i) syls.push_back({i % 2 == 0 ? 1 : 2, exponents[i]});
  return BraidWord(3, std::move(syls));
}

DegreeReport degree_audit(std::span<const int> exponents, MemoTable& memo) {
  if (exponents.empty() || exponents.size() % 2 != 0)
    throw std::invalid_argument("degree_audit: need a nonempty even number of exponents");
  DegreeReport r;
  r.exponents.assign(exponents.begin(), exponents.end());
  for (int a : exponents) {
    if (a < 0) throw std::invalid_argument("degree_audit: exponents must be nonnegative");
    r.D += a;
    r.Z += a == 0;
  }
  r.L = static_cast<int>(exponents.size() / 2);
  r.bound = 3 * r.D - 2 * r.L + 2 * r.Z;
  r.positive_bound = 3 * r.D - 2 * r.L;
  const LaurentPoly v = jones(three_braid(exponents), memo);
  r.degree = v.degree();
  r.leading = v.leading();
  r.bound_met = r.degree <= r.bound && (r.Z > 0 || r.degree <= r.positive_bound);
  return r;
}

namespace {

// Runs body(i) for i in [0, n) on up to `jobs` threads, striding by thread.
template <typename Body>
void parallel_for(std::size_t n, int jobs, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += workers) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

using Letters = std::vector<std::uint8_t>;  // 1 = x_1, 2 = x_2

Letters canonical_letters(const Letters& w) {
  Letters best = w;
  Letters flipped(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) flipped[i] = static_cast<std::uint8_t>(3 - w[i]);
  for (const Letters* src : {&w, static_cast<const Letters*>(&flipped)}) {
    Letters r = *src;
    for (std::size_t i = 0; i < r.size(); ++i) {
      best = std::min(best, r);
      std::rotate(r.begin(), r.begin() + 1, r.end());
    }
  }
  return best;
}

std::vector<int> x1_runs(const std::vector<int>& runs) {
  std::vector<int> out;
  for (std::size_t i = 0; i < runs.size(); i += 2) out.push_back(runs[i]);
  return out;
}

// Fewest syllables, then the most weight on x_1, then the largest tuple.
bool better_runs(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto xa = x1_runs(a);
  const auto xb = x1_runs(b);
  if (xa != xb) return xa > xb;
  return a > b;
}

// Cyclically merged exponent runs, in the best rotation.
std::vector<int> best_runs(const Letters& w) {
  if (w.empty()) return {};
  const std::size_t m = w.size();
  if (std::all_of(w.begin(), w.end(), [&](std::uint8_t c) { return c == w[0]; })) return {static_cast<int>(m)};
  std::size_t start = 0;
  while (w[start] == w[(start + m - 1) % m]) ++start;
  std::vector<int> runs;
  for (std::size_t i = 0; i < m;) {
    const std::uint8_t c = w[(start + i) % m];
    int len = 0;
    while (i < m && w[(start + i) % m] == c) {
      ++len;
      ++i;
    }
    runs.push_back(len);
  }
  std::vector<int> best;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    std::vector<int> rot(runs.begin() + static_cast<std::ptrdiff_t>(r), runs.end());
    rot.insert(rot.end(), runs.begin(), runs.begin() + static_cast<std::ptrdiff_t>(r));
    if (best.empty() || better_runs(rot, best)) best = rot;
  }
  return best;
}


std::vector<int> representative_runs(const BraidWord& w) {
  Letters start;
  for (const auto& syl : w.syllables()) {
    if (syl.exp < 0) throw std::invalid_argument("positive_representative: negative exponent");
    if (w.strands() != 3) throw std::invalid_argument("positive_representative: needs a 3-braid");
    start.insert(start.end(), static_cast<std::size_t>(syl.exp), static_cast<std::uint8_t>(syl.gen));
  }
  std::set<Letters> seen{canonical_letters(start)};
  std::deque<Letters> queue{*seen.begin()};
  std::vector<int> best = best_runs(*seen.begin());
  while (!queue.empty()) {
    const Letters cur = std::move(queue.front());
    queue.pop_front();
    const std::vector<int> runs = best_runs(cur);
    if (better_runs(runs, best)) best = runs;
    const std::size_t m = cur.size();
    if (m < 3) continue;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = (i + 1) % m;
      const std::size_t k = (i + 2) % m;
      if (cur[i] != cur[k] || cur[i] == cur[j]) continue;
      Letters next = cur;
      next[i] = cur[j];
      next[j] = cur[i];
      next[k] = cur[j];
      Letters key = canonical_letters(next);
      if (seen.insert(key).second) queue.push_back(std::move(key));
    }
  }
  return best;
}

BraidWord runs_to_word(const std::vector<int>& runs) { return three_braid(runs); }

}  // namespace

BraidWord positive_representative(const BraidWord& w) { return runs_to_word(representative_runs(w)); }

std::vector<TableRow> leading_tables(int L, MemoTable& memo, int jobs) {
  if (L < 1 || L > 10) throw std::invalid_argument("leading_tables: L must be in [1, 10]");
  const int len = 2 * L;
  struct Group {
    LaurentPoly value;
    std::vector<int> best_bits;
    std::vector<int> best_runs;
    bool have_runs = false;
    long count = 0;
    int ones = 0;
  };
  const unsigned count = 1U << len;
  auto bits_of = [len](unsigned mask) {
    std::vector<int> bits(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) bits[i] = static_cast<int>((mask >> (len - 1 - i)) & 1U);
    return bits;
  };
  std::vector<LaurentPoly> values(count);
  parallel_for(count, jobs, [&](std::size_t mask) {
    values[mask] = jones(three_braid(bits_of(static_cast<unsigned>(mask))), memo);
  });

  std::map<std::string, Group> groups;
  for (unsigned mask = 0; mask < count; ++mask) {
    const std::vector<int> bits = bits_of(mask);
    int ones = 0;
    for (int b : bits) ones += b;
    const BraidWord base = three_braid(bits);
    LaurentPoly v = std::move(values[mask]);
    Group& g = groups[v.to_string()];
    if (g.count == 0) {
      g.value = std::move(v);
      g.ones = ones;
    } else if (g.ones != ones) {
      throw InvariantViolation("leading_tables: one Jones polynomial for words of different length");
    }
    ++g.count;
    g.best_bits = std::max(g.best_bits, bits);
    const std::vector<int> runs = representative_runs(base);
    if (!g.have_runs || better_runs(runs, g.best_runs)) {
      g.best_runs = runs;
      g.have_runs = true;
    }
  }
  std::vector<TableRow> rows;
  for (auto& [key, g] : groups) {
    TableRow row;
    row.delta = len - g.ones;
    row.bits = g.best_bits;
    row.w = runs_to_word(g.best_runs);
    row.N = g.count;
    row.T_coefficient = g.value.leading();
    row.T_degree = g.value.degree();
    row.deg = row.delta + row.T_degree;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    if (a.delta != b.delta) return a.delta > b.delta;
    return a.bits > b.bits;
  });
  return rows;
}

LeadingAssembly leading_assembly(const std::vector<TableRow>& rows) {
  LeadingAssembly out;
  if (rows.empty()) return out;
  out.top_degree = kDegreeOfZero;
  for (const auto& r : rows) out.top_degree = std::max(out.top_degree, r.deg);
  for (const auto& r : rows) {
    if (r.deg == out.top_degree) out.coefficient += r.N * r.T_coefficient;
  }
  return out;
}

ConjectureReport conjecture_scan(int L, int sample, int max_exp, std::uint64_t seed, MemoTable& memo) {
  if (L < 1) throw std::invalid_argument("conjecture_scan: L must be >= 1");
  if (max_exp < 2) throw std::invalid_argument("conjecture_scan: exponents are drawn from [2, max_exp]");
  ConjectureReport rep;
  rep.L = L;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(2, max_exp);
  for (int i = 0; i < sample; ++i) {
    std::vector<int> a(static_cast<std::size_t>(2 * L));
    int D = 0;
    for (auto& x : a) {
      x = pick(rng);
      D += x;
    }
    const LaurentPoly v = jones(three_braid(a), memo);
    ++rep.checked;
    const int expected = 3 * D - 2 * L;
    if (v.degree() != expected || v.leading() != 1) {
      rep.counterexamples.push_back({a, v.degree(), v.leading(), expected});
    }
  }
  return rep;
}

UnitWindow unit_window(const ExponentFamily& f, MemoTable& memo, int max_steps) {
  UnitWindow uw;
  const LaurentPoly v0 = jones(f.at(0), memo);
  const LaurentPoly v1 = jones(f.at(1), memo);

  // Upward: (a, b) = (V(e), V(e+1)).
  LaurentPoly a = v0;
  LaurentPoly b = v1;
  int e = 0;
  for (int step = 0;; ++step, ++e) {
    if (a.order() >= 0 && b.order() >= 0) break;
    if (step >= max_steps) throw std::runtime_error("unit_window: upper certificate not found");
    LaurentPoly next = recurrence_up(a, b);
    a = std::move(b);
    b = std::move(next);
  }
  uw.upper_e = e;
  uw.upper_orders[0] = a.order();
  uw.upper_orders[1] = b.order();
  uw.e_hi = e + 1;

  // Downward: (lo, hi) = (V(e-1), V(e)).
  LaurentPoly lo = v0;
  LaurentPoly hi = v1;
  e = 1;
  for (int step = 0;; ++step, --e) {
    if (hi.degree() <= 0 && lo.degree() <= 0) break;
    if (step >= max_steps) throw std::runtime_error("unit_window: lower certificate not found");
    LaurentPoly next = recurrence_down(lo, hi);
    hi = std::move(lo);
    lo = std::move(next);
  }
  uw.lower_e = e;
  uw.lower_degrees[0] = hi.degree();
  uw.lower_degrees[1] = lo.degree();
  uw.e_lo = e - 1;
  return uw;
}

UnitSearchResult unit_search(const ExponentFamily& f, MemoTable& memo) {
  UnitSearchResult res;
  res.window = unit_window(f, memo);
  const auto values = jones_family(f, res.window.e_lo, res.window.e_hi, memo);
  const LaurentPoly one(1L);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == one) res.hits.push_back(res.window.e_lo + static_cast<int>(i));
  }
  if (res.hits.size() > 2) {
    throw InvariantViolation(f.to_string() + ": more than two members equal 1");
  }
  if (res.hits.size() == 2 && res.hits[1] - res.hits[0] != 2) {
    throw InvariantViolation(f.to_string() + ": two members equal 1 at distance " +
                             std::to_string(res.hits[1] - res.hits[0]));
  }
  return res;
}

LaurentPoly unit_q_form(const LaurentPoly& q1, int n) {
  const LaurentPoly s = s_pow(1);
  const LaurentPoly s3 = s_pow(3);
  const LaurentPoly minus_s_pow = LaurentPoly::monomial(n % 2 == 0 ? 1 : -1, n);
  const LaurentPoly num = (q1 + s) * s_pow(3 * n) + (s3 - q1) * minus_s_pow;
  return exact_div(num, s3 + s);
}

}  // namespace jones
