#pragma once

#include <cstdint>

#include "jones/braid.hpp"
#include "jones/laurent.hpp"

namespace jones {

/// Kauffman bracket, a Laurent polynomial in A. Kept distinct from LaurentPoly
/// in s so the two variables cannot be mixed by accident.
struct BracketPoly {
  LaurentPoly poly;
  friend bool operator==(const BracketPoly&, const BracketPoly&) = default;
  std::string to_string() const { return poly.to_string('A'); }
};

struct OracleLimits {
  long max_naive_crossings = 24;
  int max_strands = 12;
};

/// Sum over all 2^c smoothings of A^{a-b} delta^{loops-1}, delta = -A^2 - A^-2.
/// Throws CapExceeded above limits.max_naive_crossings.
BracketPoly bracket_naive(const BraidWord& w, const OracleLimits& limits = {});

/// Same value by a transfer over Temperley-Lieb diagrams (noncrossing
/// matchings of 2n boundary points). Throws CapExceeded above limits.max_strands.
BracketPoly bracket_tl(const BraidWord& w, const OracleLimits& limits = {});

enum class BracketMethod : std::uint8_t { TransferMatrix, StateSum };

/// Writhe-normalized bracket with A^2 = s. Throws ParityError if an odd
/// power of A survives the normalization.
LaurentPoly jones_via_bracket(const BraidWord& w, BracketMethod method = BracketMethod::TransferMatrix,
                              const OracleLimits& limits = {});

/// Converts a bracket to the Jones polynomial of a closure with the given
/// exponent sum.
LaurentPoly normalize_bracket(const BracketPoly& bracket, long exponent_sum);

}  // namespace jones
