#include "jones/bracket.hpp"

#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "jones/errors.hpp"

namespace jones {

namespace {

// Smoothing convention. For x_i with positive exponent the smoothing that
// joins strands i and i+1 (cup over cap) carries A and the vertical one
// carries A^-1; negative exponents swap the two. Together with A^2 = s this
// makes x_1^3 close to -s^8 + s^6 + s^2.
constexpr int kCupCapWeightPositive = +1;

struct Crossing {
  int left;  // 0-based position of the left strand
  int sign;  // +1 or -1
};

std::vector<Crossing> crossings_of(const BraidWord& w) {
  std::vector<Crossing> out;
  for (const auto& syl : w.syllables()) {
    const int sign = syl.exp > 0 ? 1 : -1;
    for (int r = 0, count = syl.exp * sign; r < count; ++r) out.push_back({syl.gen - 1, sign});
  }
  return out;
}

LaurentPoly delta() { return LaurentPoly::from_terms({{2, -1}, {-2, -1}}); }

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  void reset() { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t roots() {
    std::size_t count = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) count += find(i) == i;
    return count;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Sum over loop counts of weight * delta^(loops - 1).
LaurentPoly assemble(const std::map<std::pair<int, int>, long long>& counts) {
  std::map<int, LaurentPoly> by_loops;
  for (const auto& [key, count] : counts) {
    by_loops[key.second] += LaurentPoly::monomial(Integer(std::to_string(count)), key.first);
  }
  LaurentPoly total;
  const LaurentPoly d = delta();
  for (const auto& [loops, weight] : by_loops) total += weight * d.pow(static_cast<unsigned>(loops - 1));
  return total;
}

}  // namespace

BracketPoly bracket_naive(const BraidWord& w, const OracleLimits& limits) {
  const long c = w.crossing_count();
  if (c > limits.max_naive_crossings) {
    throw CapExceeded("bracket_naive: " + std::to_string(c) + " crossings exceed the cap of " +
                          std::to_string(limits.max_naive_crossings) + "; use the transfer-matrix oracle",
                      c, limits.max_naive_crossings);
  }
  const auto xs = crossings_of(w);
  const std::size_t n = static_cast<std::size_t>(w.strands());
  const std::size_t levels = xs.size();
  // Points at levels 0..levels-1; level `levels` is identified with level 0 by the closure.
  const std::size_t points = levels == 0 ? n : levels * n;
  auto id = [&](std::size_t level, std::size_t pos) { return (level % (levels == 0 ? 1 : levels)) * n + pos; };

  std::map<std::pair<int, int>, long long> counts;
  DisjointSets sets(points);
  const unsigned long long states = 1ULL << levels;
  for (unsigned long long state = 0; state < states; ++state) {
    sets.reset();
    int a_exponent = 0;
    for (std::size_t l = 0; l < levels; ++l) {
      const auto& x = xs[l];
      const bool cup_cap = (state >> l) & 1ULL;
      a_exponent += cup_cap ? x.sign * kCupCapWeightPositive : -x.sign * kCupCapWeightPositive;
      for (std::size_t p = 0; p < n; ++p) {
        if (p == static_cast<std::size_t>(x.left) || p == static_cast<std::size_t>(x.left + 1)) continue;
        sets.unite(id(l, p), id(l + 1, p));
      }
      const std::size_t i = static_cast<std::size_t>(x.left);
      if (cup_cap) {
        sets.unite(id(l, i), id(l, i + 1));
        sets.unite(id(l + 1, i), id(l + 1, i + 1));
      } else {
        sets.unite(id(l, i), id(l + 1, i));
        sets.unite(id(l, i + 1), id(l + 1, i + 1));
      }
    }
    ++counts[{a_exponent, static_cast<int>(sets.roots())}];
  }
  return BracketPoly{assemble(counts)};
}

BracketPoly bracket_tl(const BraidWord& w, const OracleLimits& limits) {
  const int n = w.strands();
  if (n > limits.max_strands) {
    throw CapExceeded("bracket_tl: " + std::to_string(n) + " strands exceed the cap of " +
                          std::to_string(limits.max_strands),
                      n, limits.max_strands);
  }
  using Matching = std::vector<std::uint8_t>;  // top points 0..n-1, bottom points n..2n-1
  Matching identity(static_cast<std::size_t>(2 * n));
  for (int p = 0; p < n; ++p) {
    identity[p] = static_cast<std::uint8_t>(n + p);
    identity[n + p] = static_cast<std::uint8_t>(p);
  }
  const LaurentPoly d = delta();
  std::map<Matching, LaurentPoly> states{{identity, LaurentPoly(1L)}};

  for (const auto& x : crossings_of(w)) {
    const int vertical_exp = -x.sign * kCupCapWeightPositive;
    const int cup_cap_exp = x.sign * kCupCapWeightPositive;
    const std::size_t b1 = static_cast<std::size_t>(n + x.left);
    const std::size_t b2 = b1 + 1;
    std::map<Matching, LaurentPoly> next;
    for (const auto& [m, weight] : states) {
      next[m] += weight.shifted(vertical_exp);
      Matching joined = m;
      LaurentPoly wj = weight.shifted(cup_cap_exp);
      if (m[b1] == b2) {
        wj *= d;
      } else {
        const std::uint8_t u = m[b1];
        const std::uint8_t v = m[b2];
        joined[u] = v;
        joined[v] = u;
        joined[b1] = static_cast<std::uint8_t>(b2);
        joined[b2] = static_cast<std::uint8_t>(b1);
      }
      next[joined] += wj;
    }
    states.clear();
    for (auto& [m, weight] : next) {
      if (!weight.is_zero()) states.emplace(m, std::move(weight));
    }
  }

  LaurentPoly total;
  for (const auto& [m, weight] : states) {
    // Close: top point p meets bottom point n+p. Count the resulting loops.
    std::vector<bool> seen(m.size(), false);
    int loops = 0;
    for (std::size_t start = 0; start < m.size(); ++start) {
      if (seen[start]) continue;
      ++loops;
      std::size_t p = start;
      while (!seen[p]) {
        seen[p] = true;
        const std::size_t q = m[p];
        seen[q] = true;
        p = q < static_cast<std::size_t>(n) ? q + n : q - n;
      }
    }
    total += weight * d.pow(static_cast<unsigned>(loops - 1));
  }
  return BracketPoly{total};
}

LaurentPoly normalize_bracket(const BracketPoly& bracket, long exponent_sum) {
  // (-A)^(3 * exponent_sum) * <w>. With this convention x_i is a negative
  // crossing of the oriented diagram, so the diagram writhe is -exponent_sum.
  const long shift = 3 * exponent_sum;
  LaurentPoly normalized = bracket.poly.shifted(static_cast<int>(shift));
  if (shift % 2 != 0) normalized = -normalized;
  LaurentPoly out;
  for (const auto& [e, c] : normalized.terms()) {
    if (e % 2 != 0) {
      throw ParityError("odd power A^" + std::to_string(e) + " after writhe normalization");
    }
    out += LaurentPoly::monomial(c, e / 2);
  }
  return out;
}

LaurentPoly jones_via_bracket(const BraidWord& w, BracketMethod method, const OracleLimits& limits) {
  const BracketPoly b = method == BracketMethod::StateSum ? bracket_naive(w, limits) : bracket_tl(w, limits);
  return normalize_bracket(b, writhe(w));
}

}  // namespace jones
