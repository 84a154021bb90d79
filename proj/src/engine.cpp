#include "jones/engine.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "jones/bracket.hpp"

namespace jones {

BasicPolyPair basic_polys(int a) {
  const long sign = a % 2 == 0 ? 1 : -1;
  return BasicPolyPair{
      LaurentPoly::monomial(1, 3 * a) + LaurentPoly::monomial(sign, a + 2),
      LaurentPoly::monomial(1, 3 * a - 1) + LaurentPoly::monomial(-sign, a - 1),
  };
}

const LaurentPoly& expansion_denominator() {
  static const LaurentPoly den = LaurentPoly::from_terms({{2, 1}, {0, 1}});
  return den;
}

namespace {

const LaurentPoly& up_linear() {
  static const LaurentPoly c = LaurentPoly::from_terms({{3, 1}, {1, -1}});
  return c;
}

const LaurentPoly& down_linear() {
  static const LaurentPoly c = LaurentPoly::from_terms({{-3, 1}, {-1, -1}});
  return c;
}

}  // namespace

LaurentPoly recurrence_up(const LaurentPoly& v_e, const LaurentPoly& v_e1) {
  return up_linear() * v_e1 + v_e.shifted(4);
}

LaurentPoly recurrence_down(const LaurentPoly& v_e1, const LaurentPoly& v_e2) {
  return down_linear() * v_e1 + v_e2.shifted(-4);
}

std::optional<LaurentPoly> MemoTable::find(const BraidWord& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void MemoTable::insert(const BraidWord& key, const LaurentPoly& value) {
  std::unique_lock lock(mutex_);
  table_.try_emplace(key, value);
}

std::size_t MemoTable::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void MemoTable::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
  hits = 0;
  misses = 0;
  expansions = 0;
  oracle_calls = 0;
}

LaurentPoly square_free_value(int strands, int generators) {
  if (generators < 0 || generators > strands - 1)
    throw std::invalid_argument("square_free_value: need 0 <= k <= n-1");
  return unlink_factor().pow(static_cast<unsigned>(strands - generators - 1));
}

namespace {

LaurentPoly expand_one_syllable(const BraidWord& w, std::size_t at, MemoTable& memo) {
  const int a = w.syllables()[at].exp;
  std::vector<Syllable> zero = w.syllables();
  std::vector<Syllable> one = w.syllables();
  zero[at].exp = 0;
  one[at].exp = 1;
  const auto [p0, p1] = basic_polys(a);
  const LaurentPoly sum = p0 * jones(BraidWord(w.strands(), std::move(zero)), memo) +
                          p1 * jones(BraidWord(w.strands(), std::move(one)), memo);
  return exact_div(sum, expansion_denominator());
}

LaurentPoly evaluate_canonical(const BraidWord& c, MemoTable& memo) {
  const int n = c.strands();
  if (c.empty()) return unlink_factor().pow(static_cast<unsigned>(n - 1));

  if (auto parts = split_absent(c)) {
    return jones(parts->first, memo) * jones(parts->second, memo) * unlink_factor();
  }
  if (auto smaller = destabilize(c)) return jones(*smaller, memo);
  if (auto smaller = destabilize(flip(c))) return jones(*smaller, memo);

  const auto& syls = c.syllables();
  auto non_unit = std::find_if(syls.begin(), syls.end(), [](const Syllable& s) { return s.exp != 1; });
  if (non_unit != syls.end()) {
    ++memo.expansions;
    return expand_one_syllable(c, static_cast<std::size_t>(non_unit - syls.begin()), memo);
  }

  if (is_markov_square_free(c)) return square_free_value(n, static_cast<int>(c.size()));

  ++memo.oracle_calls;
  OracleLimits unlimited;
  unlimited.max_strands = std::numeric_limits<int>::max();
  return jones_via_bracket(c, BracketMethod::TransferMatrix, unlimited);
}

}  // namespace

LaurentPoly jones(const BraidWord& w, MemoTable& memo) {
  const BraidWord c = normalize_cyclic(w);
  if (auto cached = memo.find(c)) {
    ++memo.hits;
    return std::move(*cached);
  }
  ++memo.misses;
  LaurentPoly value = evaluate_canonical(c, memo);
  memo.insert(c, value);
  return value;
}

LaurentPoly jones(const BraidWord& w) {
  MemoTable memo;
  return jones(w, memo);
}

std::vector<ExpansionTerm> expand(const BraidWord& w) {
  const std::size_t k = w.size();
  if (k >= 8 * sizeof(unsigned long long) - 1) throw std::length_error("expand: too many syllables");
  std::vector<BasicPolyPair> basics;
  basics.reserve(k);
  for (const auto& syl : w.syllables()) basics.push_back(basic_polys(syl.exp));

  std::vector<ExpansionTerm> terms;
  for (unsigned long long mask = 0; mask < (1ULL << k); ++mask) {
    LaurentPoly weight(1L);
    std::vector<int> bits(k);
    std::vector<Syllable> base(w.syllables());
    for (std::size_t h = 0; h < k && !weight.is_zero(); ++h) {
      bits[h] = static_cast<int>((mask >> h) & 1ULL);
      weight *= bits[h] ? basics[h].P1 : basics[h].P0;
      base[h].exp = bits[h];
    }
    if (weight.is_zero()) continue;
    terms.push_back({std::move(bits), std::move(weight), BraidWord(w.strands(), std::move(base))});
  }
  return terms;
}

std::vector<LaurentPoly> jones_family(const ExponentFamily& f, int e_from, int e_to, MemoTable& memo) {
  if (e_from > e_to) throw std::invalid_argument("jones_family: empty range");
  const int lo = std::min(e_from, 0);
  const int hi = std::max(e_to, 1);
  std::vector<LaurentPoly> values(static_cast<std::size_t>(hi - lo + 1));
  auto slot = [&](int e) -> LaurentPoly& { return values[static_cast<std::size_t>(e - lo)]; };
  slot(0) = jones(f.at(0), memo);
  slot(1) = jones(f.at(1), memo);
  for (int e = 2; e <= hi; ++e) slot(e) = recurrence_up(slot(e - 2), slot(e - 1));
  for (int e = -1; e >= lo; --e) slot(e) = recurrence_down(slot(e + 1), slot(e + 2));
  return {values.begin() + (e_from - lo), values.begin() + (e_to - lo + 1)};
}

std::vector<LaurentPoly> GenFun::denominator_factor() {
  return {LaurentPoly(1L), -up_linear(), -s_pow(4)};
}

std::vector<LaurentPoly> GenFun::numerator_q0() { return {LaurentPoly(1L), -up_linear()}; }

std::vector<LaurentPoly> GenFun::numerator_q1() { return {LaurentPoly(), LaurentPoly(1L)}; }

GenFun genfun_build(int strands, std::span<const int> indices, MemoTable& memo) {
  const std::size_t k = indices.size();
  if (k >= 8 * sizeof(unsigned long long) - 1) throw std::length_error("genfun_build: too many syllables");
  GenFun g;
  g.strands = strands;
  g.indices.assign(indices.begin(), indices.end());
  for (unsigned long long mask = 0; mask < (1ULL << k); ++mask) {
    std::vector<Syllable> syls;
    for (std::size_t h = 0; h < k; ++h) syls.push_back({indices[h], static_cast<int>((mask >> h) & 1ULL)});
    g.seeds.push_back(jones(BraidWord(strands, std::move(syls)), memo));
  }
  return g;
}

LaurentPoly genfun_coeff(const GenFun& g, std::span<const int> exponents) {
  if (exponents.size() != g.indices.size())
    throw std::invalid_argument("genfun_coeff: exponent tuple length differs from I*");
  int bound = 0;
  for (int a : exponents) bound = std::max(bound, a);
  return genfun_coeff(genfun_rows(jones_fib_spec(), bound), g.seeds, exponents);
}

}  // namespace jones
