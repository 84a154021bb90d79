#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace jones {

using Integer = mpz_class;
using Rational = mpq_class;

// Sentinels reported for the zero polynomial.
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();
inline constexpr int kOrderOfZero = std::numeric_limits<int>::max();

struct Extremes {
  int degree = kDegreeOfZero;
  int order = kOrderOfZero;
  Integer leading = 0;
  Integer trailing = 0;
};

/// Laurent polynomial in one variable (written `s`) with arbitrary-precision
/// integer coefficients. Sparse: only nonzero coefficients are stored.
class LaurentPoly {
 public:
  using TermMap = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: implicit integer promotion is intended
  LaurentPoly(const Integer& constant);  // NOLINT

  /// c * s^e
  static LaurentPoly monomial(const Integer& c, int e);
  /// Pairs of (exponent, coefficient); repeated exponents accumulate.
  static LaurentPoly from_terms(std::initializer_list<std::pair<int, long>> terms);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coeff(int e) const;

  int degree() const noexcept;
  int order() const noexcept;
  Integer leading() const;
  Integer trailing() const;
  Extremes extremes() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiplication by s^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned k) const;
  /// p(s) -> p(s^-1).
  LaurentPoly inverted_variable() const;
  /// p(s) -> p(s^k) for nonzero k.
  LaurentPoly substituted_power(int k) const;

  /// True for ±s^e, the units of Z[s, s^-1].
  bool is_unit() const noexcept;
  std::optional<LaurentPoly> inverse() const;

  /// Exact value at s = x; throws std::domain_error for x = 0.
  Rational evaluate(const Rational& x) const;

  /// Canonical text: descending exponents, unit coefficients elided.
  std::string to_string(char variable = 's') const;
  static LaurentPoly parse(std::string_view text, char variable = 's');

 private:
  void add_term(int e, const Integer& c);

  TermMap terms_;
};

/// Returns q with q * den == num; throws NotDivisible otherwise and
/// std::domain_error for den == 0.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

// Frequently used constants of the Jones recurrence.
LaurentPoly s_pow(int e);
/// -s - s^-1, the value of the two-component unlink.
const LaurentPoly& unlink_factor();

}  // namespace jones
