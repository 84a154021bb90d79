#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jones/laurent.hpp"

namespace jones {

/// Characteristic roots of x_{k+2} = beta x_{k+1} + gamma x_k over Z[s, s^-1].
/// Integer instances use constant polynomials.
struct FibSpec {
  LaurentPoly r1;
  LaurentPoly r2;

  FibSpec(LaurentPoly root1, LaurentPoly root2);

  LaurentPoly beta() const { return r1 + r2; }
  LaurentPoly gamma() const { return -(r1 * r2); }
  /// r2 - r1; nonzero by construction.
  LaurentPoly D() const { return r2 - r1; }
};

/// The pair of roots r1 = -s, r2 = s^3 of the Jones recurrence.
FibSpec jones_fib_spec();

struct SBasis {
  LaurentPoly S0;  // r1^n r2 - r1 r2^n
  LaurentPoly S1;  // r2^n - r1^n
};

/// Throws NonInvertibleRoot for n < 0 unless both roots are units.
SBasis s_polys(const FibSpec& spec, int n);

/// Seeds of a p-fold sequence at the corners {0,1}^p. Bit h of the index
/// is the h-th coordinate.
using Seeds = std::vector<LaurentPoly>;

/// D^-p * sum_J S_{j1}^[n1] ... S_{jp}^[np] x_J, by exact division.
/// Throws NotDivisible when the seeds are inconsistent.
LaurentPoly general_term(const FibSpec& spec, const Seeds& seeds, std::span<const int> index);

/// Power-series coefficients of Q0(t)/q(t) and Q1(t)/q(t) up to t^bound, where
/// q(t) = (1 - r1 t)(1 - r2 t), Q0(t) = 1 - (r1 + r2) t and Q1(t) = t. Obtained by
/// unrolling the recurrence that 1/q(t) satisfies.
struct SeriesRows {
  std::vector<LaurentPoly> q0;
  std::vector<LaurentPoly> q1;
};
SeriesRows genfun_rows(const FibSpec& spec, int bound);

/// Dense table of generating-function coefficients for 0 <= n_i <= bound,
/// stored with coordinate 0 varying slowest.
class CoeffTable {
 public:
  CoeffTable(int dims, int bound, std::vector<LaurentPoly> values);
  int dims() const noexcept { return dims_; }
  int bound() const noexcept { return bound_; }
  const LaurentPoly& at(std::span<const int> index) const;
  const std::vector<LaurentPoly>& values() const noexcept { return values_; }

 private:
  int dims_;
  int bound_;
  std::vector<LaurentPoly> values_;
};

CoeffTable genfun_coeffs(const FibSpec& spec, const Seeds& seeds, int bound);

/// Coefficient of t_1^{n_1}...t_p^{n_p} in the rational generating function.
/// Entries must be nonnegative.
LaurentPoly genfun_coeff(const SeriesRows& rows, const Seeds& seeds, std::span<const int> index);

/// log2 of the seed count; throws std::invalid_argument if not a power of two.
int seed_dims(const Seeds& seeds);

}  // namespace jones
