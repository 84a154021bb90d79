#pragma once

#include <atomic>
#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <vector>

#include "jones/braid.hpp"
#include "jones/fibonacci.hpp"
#include "jones/laurent.hpp"

namespace jones {

/// P0^[a] = s^{3a} + (-1)^a s^{a+2},  P1^[a] = s^{3a-1} + (-1)^{a+1} s^{a-1}.
struct BasicPolyPair {
  LaurentPoly P0;
  LaurentPoly P1;
};
BasicPolyPair basic_polys(int a);

/// s^2 + 1, the per-syllable denominator of the expansion formula.
const LaurentPoly& expansion_denominator();

/// V(e+2) = (s^3 - s) V(e+1) + s^4 V(e).
LaurentPoly recurrence_up(const LaurentPoly& v_e, const LaurentPoly& v_e1);
/// V(e) = (s^-3 - s^-1) V(e+1) + s^-4 V(e+2); arguments are V(e+1), V(e+2).
LaurentPoly recurrence_down(const LaurentPoly& v_e1, const LaurentPoly& v_e2);

/// Values keyed by cyclically normalized words. Safe for concurrent use:
/// lookups share a lock and inserts keep the first value stored.
class MemoTable {
 public:
  std::optional<LaurentPoly> find(const BraidWord& key) const;
  void insert(const BraidWord& key, const LaurentPoly& value);
  std::size_t size() const;
  void clear();

  // Statistics, reset by clear().
  std::atomic<long> hits{0};
  std::atomic<long> misses{0};
  std::atomic<long> expansions{0};
  std::atomic<long> oracle_calls{0};

 private:
  mutable std::shared_mutex mutex_;
  std::map<BraidWord, LaurentPoly> table_;
};

/// Jones polynomial of the closure of w in s = q^{-1/2}, normalized so the
/// unknot is 1. Reduction order on the cyclic normal form: empty word, absent
/// generator split, destabilization (top strand, then bottom strand by the
/// half-twist flip), one-syllable expansion of an exponent other than 1,
/// Markov square-free words, and finally the transfer-matrix bracket.
LaurentPoly jones(const BraidWord& w, MemoTable& memo);
LaurentPoly jones(const BraidWord& w);

/// (-s - s^-1)^{n-k-1} for x_{i_1}...x_{i_k}, i_1 < ... < i_k, in B_n.
LaurentPoly square_free_value(int strands, int generators);

/// One term of the full expansion of a k-syllable word.
struct ExpansionTerm {
  std::vector<int> bits;  // J*
  LaurentPoly weight;     // P_{j1}^[a1] ... P_{jk}^[ak]
  BraidWord base;         // x_{i1}^{j1} ... x_{ik}^{jk}
};

/// The 2^k terms of the expansion formula for w as written. Terms whose
/// weight vanishes (a_i = 1 with j_i = 0) are omitted.
std::vector<ExpansionTerm> expand(const BraidWord& w);

/// (sum weight * value(base)) / (s^2 + 1)^k. Throws NotDivisible if the sum
/// is not divisible, which would contradict the expansion formula.
template <typename Evaluator>
LaurentPoly assemble_expansion(const std::vector<ExpansionTerm>& terms, std::size_t k, Evaluator&& value) {
  LaurentPoly sum;
  for (const auto& term : terms) sum += term.weight * value(term.base);
  return exact_div(sum, expansion_denominator().pow(static_cast<unsigned>(k)));
}

/// V(e) for e in [e_from, e_to], from the seeds V(0), V(1) and the recurrence.
std::vector<LaurentPoly> jones_family(const ExponentFamily& f, int e_from, int e_to, MemoTable& memo);

/// Generating function for the braids x_{i1}^{a1}...x_{ik}^{ak} in B_n.
struct GenFun {
  int strands = 1;
  std::vector<int> indices;  // I*
  Seeds seeds;               // V(x_{i1}^{j1}...x_{ik}^{jk}); bit h of the seed index is j_{h+1}

  // Symbolic pieces, as polynomials in t with coefficients in s (index = power of t).
  static std::vector<LaurentPoly> denominator_factor();  // q(t) = (1 - s^3 t)(1 + s t)
  static std::vector<LaurentPoly> numerator_q0();        // Q0(t) = 1 - (s^3 - s) t
  static std::vector<LaurentPoly> numerator_q1();        // Q1(t) = t
};

GenFun genfun_build(int strands, std::span<const int> indices, MemoTable& memo);
/// Coefficient of t^{A*}. Entries must be nonnegative.
LaurentPoly genfun_coeff(const GenFun& g, std::span<const int> exponents);

}  // namespace jones
