#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jones/braid.hpp"
#include "jones/engine.hpp"
#include "jones/laurent.hpp"

namespace jones {

// ---------------------------------------------------------------------------
// Stability of consecutive family members

enum class PairKind : std::uint8_t { Stable, Semistable, Critical };

std::string to_string(PairKind kind);

struct PairClass {
  PairKind kind = PairKind::Stable;
  Integer C = 0;  // sum of the two leading coefficients
};

/// Stable: deg V(e+1) > 1 + deg V(e). Semistable: deg V(e+1) <= deg V(e).
/// Critical: deg V(e+1) = 1 + deg V(e). Throws ZeroPolynomial on a zero input.
PairClass classify_pair(const LaurentPoly& v_e, const LaurentPoly& v_e1);

struct DegreePrediction {
  std::optional<int> degree;
  std::optional<Integer> leading;
  /// Critical pair with C = 0 followed by another critical pair: no closed
  /// prediction; classify (e+1, e+2) and continue from there.
  bool reclassify = false;
  std::string rule;
};

/// Predicted degree and leading coefficient of V(e+m), m >= 1, from the class
/// of (V(e), V(e+1)). Critical pairs with C = 0 need V(e+2) to pick the
/// sub-case and throw std::invalid_argument without it.
DegreePrediction predict_degrees(const PairClass& cls, const LaurentPoly& v_e, const LaurentPoly& v_e1, int m,
                                 const std::optional<LaurentPoly>& v_e2 = std::nullopt);

/// ord V(e+m) >= min(ord V(e), ord V(e+1)) + (m-1), m >= 2.
bool order_bound_check(const ExponentFamily& f, int e, int m, MemoTable& memo);
/// deg V(e-m) <= max(deg V(e-1), deg V(e)) - (m-1), m >= 2.
bool degree_bound_down_check(const ExponentFamily& f, int e, int m, MemoTable& memo);

/// Findings of a propagation audit over [e_start, e_start + window].
struct PropagationReport {
  int pairs_checked = 0;
  int stable = 0;
  int semistable = 0;
  int critical = 0;
  int predictions_checked = 0;
  int order_bounds_checked = 0;
  std::optional<int> divergence_from;  // first stable pair at or after the certified index
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks every degree/leading-coefficient prediction, both order bounds and
/// degree divergence past the unit window.
PropagationReport propagation_audit(const ExponentFamily& f, int e_start, int window, MemoTable& memo);

// ---------------------------------------------------------------------------
// Closed forms

/// V_2(x_1^a). |a| >= 4 uses the alternating-sum closed form, smaller |a| the
/// recurrence from V_2(0), V_2(1).
LaurentPoly v2_closed(int a);

/// V of the closure of x_1 x_2 x_1 x_2 ... (n factors) in B_3, by residue of n mod 6.
LaurentPoly delta_closed(int n);
/// Largest n for which delta_closed has been checked against the engine; beyond
/// it delta_value asks the engine.
inline constexpr int kDeltaClosedCheckedUpTo = 29;
LaurentPoly delta_value(int n, MemoTable& memo);
/// x_1 x_2 x_1 ... (n factors) in B_3.
BraidWord delta_word(int n);

struct RecurrenceCheck {
  int relations_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// The four recurrences linking V_Delta(6k..6k+5) to earlier values, checked
/// on delta_closed up to index 6 k_max + 5.
RecurrenceCheck delta_recur_check(int k_max);

// ---------------------------------------------------------------------------
// Positive 3-braids x_1^{a1} x_2^{a2} ... x_2^{a_{2L}}

BraidWord three_braid(std::span<const int> exponents);

struct DegreeReport {
  std::vector<int> exponents;
  int D = 0;  // total degree
  int L = 0;  // half the syllable count
  int Z = 0;  // zero exponents
  int bound = 0;           // 3D - 2L + 2Z
  int positive_bound = 0;  // 3D - 2L
  int degree = 0;
  Integer leading = 0;
  bool bound_met = true;
};
/// Computes V with the engine and compares against 3D - 2L + 2Z. Requires an
/// even number of nonnegative exponents.
DegreeReport degree_audit(std::span<const int> exponents, MemoTable& memo);

struct TableRow {
  int delta = 0;            // 2L minus the number of ones in J*
  std::vector<int> bits;    // a representative J*
  BraidWord w;              // representative word of the class
  long N = 0;               // number of J* in the class
  Integer T_coefficient = 0;
  int T_degree = 0;
  int deg = 0;              // delta + deg T
};

/// Groups the 2^{2L} base braids x_1^{j1} x_2^{j2} ... by their Jones
/// polynomial. Rows are sorted by delta, then J*, both descending. With
/// jobs > 1 the base braids are evaluated on that many threads sharing memo.
std::vector<TableRow> leading_tables(int L, MemoTable& memo, int jobs = 1);

struct LeadingAssembly {
  int top_degree = 0;
  Integer coefficient = 0;  // sum of N * coeff(T) over rows of top degree
};
LeadingAssembly leading_assembly(const std::vector<TableRow>& rows);

/// Word with the fewest syllables (then the largest exponent sequence) among
/// the positive 3-braids reachable from w by rotation, x_1 <-> x_2 and
/// x_1 x_2 x_1 <-> x_2 x_1 x_2. All exponents of w must be positive.
BraidWord positive_representative(const BraidWord& w);

struct ConjectureSample {
  std::vector<int> exponents;
  int degree = 0;
  Integer leading = 0;
  int expected_degree = 0;  // 3D - 2L
};
struct ConjectureReport {
  int L = 0;
  int checked = 0;
  std::vector<ConjectureSample> counterexamples;
};
/// Samples exponents uniformly from [2, max_exp] and records every word whose
/// leading term is not s^{3D-2L}. Reports only; the statement is unproven for L > 4.
ConjectureReport conjecture_scan(int L, int sample, int max_exp, std::uint64_t seed, MemoTable& memo);

// ---------------------------------------------------------------------------
// Unit polynomials

struct UnitWindow {
  int e_lo = 0;
  int e_hi = 0;
  // For e > e_hi: ord V(e) >= 1, since ord V(upper_e), ord V(upper_e + 1) >= 0.
  int upper_e = 0;
  int upper_orders[2] = {0, 0};
  // For e < e_lo: deg V(e) <= -1, since deg V(lower_e), deg V(lower_e - 1) <= 0.
  int lower_e = 0;
  int lower_degrees[2] = {0, 0};
};

/// Smallest window found by scanning outward from e = 0 outside of which no
/// member can equal 1. Throws std::runtime_error if max_steps is exhausted.
UnitWindow unit_window(const ExponentFamily& f, MemoTable& memo, int max_steps = 100000);

struct UnitSearchResult {
  UnitWindow window;
  std::vector<int> hits;
};

/// All e with V(e) = 1. Throws InvariantViolation for more than two hits or
/// two hits not two apart.
UnitSearchResult unit_search(const ExponentFamily& f, MemoTable& memo);

/// Q_n = ((Q_1 + s) s^{3n} + (s^3 - Q_1)(-s)^n) / (s^3 + s): the family
/// shifted so that Q_0 = 1, from its next member Q_1.
LaurentPoly unit_q_form(const LaurentPoly& q1, int n);

}  // namespace jones
