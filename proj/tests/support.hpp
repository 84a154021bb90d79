#pragma once

#include <doctest.h>

#include <random>
#include <sstream>
#include <string>

#include "jones/braid.hpp"
#include "jones/engine.hpp"
#include "jones/laurent.hpp"

namespace testing {

inline jones::LaurentPoly P(const std::string& text, char var = 's') { return jones::LaurentPoly::parse(text, var); }
inline jones::BraidWord W(const std::string& text) { return jones::parse_braid(text); }

inline jones::LaurentPoly V(const jones::BraidWord& w) {
  static jones::MemoTable memo;
  return jones::jones(w, memo);
}
inline jones::LaurentPoly V(const std::string& text) { return V(W(text)); }

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline jones::LaurentPoly random_poly(Rng& rng, int max_terms = 5, int span = 6, int coeff = 9) {
  jones::LaurentPoly p;
  const int terms = uniform(rng, 0, max_terms);
  for (int i = 0; i < terms; ++i) p += jones::LaurentPoly::monomial(uniform(rng, -coeff, coeff), uniform(rng, -span, span));
  return p;
}

inline jones::LaurentPoly random_nonzero_poly(Rng& rng) {
  for (;;) {
    auto p = random_poly(rng);
    if (!p.is_zero()) return p;
  }
}

// Random word with nonzero exponents in [-max_exp, max_exp].
inline jones::BraidWord random_word(Rng& rng, int strands, int syllables, int max_exp) {
  std::vector<jones::Syllable> syls;
  for (int i = 0; i < syllables; ++i) {
    int e = 0;
    while (e == 0) e = uniform(rng, -max_exp, max_exp);
    syls.push_back({uniform(rng, 1, strands - 1), e});
  }
  return jones::BraidWord(strands, std::move(syls));
}

inline std::string show(const jones::LaurentPoly& p) { return p.to_string(); }

}  // namespace testing

namespace doctest {
template <>
struct StringMaker<jones::LaurentPoly> {
  static String convert(const jones::LaurentPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<jones::BraidWord> {
  static String convert(const jones::BraidWord& w) { return w.to_string().c_str(); }
};
}  // namespace doctest
