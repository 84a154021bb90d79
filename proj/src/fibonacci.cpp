#include "jones/fibonacci.hpp"

#include <stdexcept>
#include <string>

#include "jones/errors.hpp"

namespace jones {

namespace {

LaurentPoly signed_pow(const LaurentPoly& r, int n) {
  if (n >= 0) return r.pow(static_cast<unsigned>(n));
  auto inv = r.inverse();
  if (!inv) throw NonInvertibleRoot("root " + r.to_string() + " is not a unit; negative index " +
                                    std::to_string(n) + " undefined");
  return inv->pow(static_cast<unsigned>(-n));
}

}  // namespace

FibSpec::FibSpec(LaurentPoly root1, LaurentPoly root2) : r1(std::move(root1)), r2(std::move(root2)) {
  if (r1 == r2) throw std::invalid_argument("FibSpec: repeated root is not supported");
}

FibSpec jones_fib_spec() { return FibSpec(-s_pow(1), s_pow(3)); }

SBasis s_polys(const FibSpec& spec, int n) {
  const LaurentPoly a = signed_pow(spec.r1, n);
  const LaurentPoly b = signed_pow(spec.r2, n);
  return SBasis{a * spec.r2 - spec.r1 * b, b - a};
}

int seed_dims(const Seeds& seeds) {
  int p = 0;
  while ((std::size_t{1} << p) < seeds.size()) ++p;
  if (seeds.empty() || (std::size_t{1} << p) != seeds.size())
    throw std::invalid_argument("seed count must be a power of two");
  return p;
}

LaurentPoly general_term(const FibSpec& spec, const Seeds& seeds, std::span<const int> index) {
  const int p = seed_dims(seeds);
  if (static_cast<std::size_t>(p) != index.size())
    throw std::invalid_argument("general_term: index length does not match seed dimension");

  std::vector<SBasis> basis;
  basis.reserve(index.size());
  for (int n : index) basis.push_back(s_polys(spec, n));

  LaurentPoly numerator;
  for (std::size_t mask = 0; mask < seeds.size(); ++mask) {
    if (seeds[mask].is_zero()) continue;
    LaurentPoly term = seeds[mask];
    for (int h = 0; h < p && !term.is_zero(); ++h) {
      term *= (mask >> h) & 1U ? basis[h].S1 : basis[h].S0;
    }
    numerator += term;
  }
  return exact_div(numerator, spec.D().pow(static_cast<unsigned>(p)));
}

SeriesRows genfun_rows(const FibSpec& spec, int bound) {
  if (bound < 0) throw std::invalid_argument("genfun_rows: negative bound");
  const LaurentPoly beta = spec.beta();
  const LaurentPoly gamma = spec.gamma();
  // 1/q(t) = sum c_m t^m with c_m = beta c_{m-1} + gamma c_{m-2}.
  std::vector<LaurentPoly> c(static_cast<std::size_t>(bound) + 1);
  c[0] = 1;
  if (bound >= 1) c[1] = beta;
  for (int m = 2; m <= bound; ++m) c[m] = beta * c[m - 1] + gamma * c[m - 2];

  SeriesRows rows;
  rows.q0.resize(c.size());
  rows.q1.resize(c.size());
  for (int m = 0; m <= bound; ++m) {
    rows.q0[m] = m == 0 ? c[0] : c[m] - beta * c[m - 1];
    rows.q1[m] = m == 0 ? LaurentPoly() : c[m - 1];
  }
  return rows;
}

LaurentPoly genfun_coeff(const SeriesRows& rows, const Seeds& seeds, std::span<const int> index) {
  const int p = seed_dims(seeds);
  if (static_cast<std::size_t>(p) != index.size())
    throw std::invalid_argument("genfun_coeff: index length does not match seed dimension");
  for (int n : index) {
    if (n < 0) throw std::out_of_range("genfun_coeff: negative exponents are outside the series");
    if (static_cast<std::size_t>(n) >= rows.q0.size())
      throw std::out_of_range("genfun_coeff: index beyond the expanded series");
  }
  LaurentPoly sum;
  for (std::size_t mask = 0; mask < seeds.size(); ++mask) {
    if (seeds[mask].is_zero()) continue;
    LaurentPoly term = seeds[mask];
    for (int h = 0; h < p && !term.is_zero(); ++h) {
      term *= (mask >> h) & 1U ? rows.q1[index[h]] : rows.q0[index[h]];
    }
    sum += term;
  }
  return sum;
}

CoeffTable::CoeffTable(int dims, int bound, std::vector<LaurentPoly> values)
    : dims_(dims), bound_(bound), values_(std::move(values)) {}

const LaurentPoly& CoeffTable::at(std::span<const int> index) const {
  if (index.size() != static_cast<std::size_t>(dims_))
    throw std::invalid_argument("CoeffTable::at: wrong index length");
  std::size_t flat = 0;
  for (int n : index) {
    if (n < 0 || n > bound_) throw std::out_of_range("CoeffTable::at: index outside the table");
    flat = flat * static_cast<std::size_t>(bound_ + 1) + static_cast<std::size_t>(n);
  }
  return values_[flat];
}

CoeffTable genfun_coeffs(const FibSpec& spec, const Seeds& seeds, int bound) {
  const int p = seed_dims(seeds);
  const SeriesRows rows = genfun_rows(spec, bound);
  std::size_t total = 1;
  for (int h = 0; h < p; ++h) total *= static_cast<std::size_t>(bound + 1);
  std::vector<LaurentPoly> values;
  values.reserve(total);
  std::vector<int> index(static_cast<std::size_t>(p), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (int h = p - 1; h >= 0; --h) {
      index[h] = static_cast<int>(rest % static_cast<std::size_t>(bound + 1));
      rest /= static_cast<std::size_t>(bound + 1);
    }
    values.push_back(genfun_coeff(rows, seeds, index));
  }
  return CoeffTable(p, bound, std::move(values));
}

}  // namespace jones
