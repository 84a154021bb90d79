#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jones {

/// x_gen^exp. Generators are 1-based as in the Artin presentation.
struct Syllable {
  int gen = 1;
  int exp = 1;
  auto operator<=>(const Syllable&) const = default;
};

/// A word in the Artin generators x_1..x_{n-1} of the braid group on n strands.
/// Syllables act left to right.
class BraidWord {
 public:
  BraidWord() = default;
  /// Throws BoundsError if any generator is outside [1, strands-1].
  BraidWord(int strands, std::vector<Syllable> syllables);

  int strands() const noexcept { return strands_; }
  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  std::size_t size() const noexcept { return syllables_.size(); }
  bool empty() const noexcept { return syllables_.empty(); }

  /// Sum of |exp|, i.e. the number of crossings of the closed braid diagram.
  long crossing_count() const noexcept;

  /// "B3: x1^2 x2" form; parse_braid accepts it back.
  std::string to_string() const;

  auto operator<=>(const BraidWord&) const = default;

 private:
  int strands_ = 1;
  std::vector<Syllable> syllables_;
};

/// A braid word with one syllable whose exponent varies.
class ExponentFamily {
 public:
  ExponentFamily(BraidWord base, std::size_t slot);

  const BraidWord& base() const noexcept { return base_; }
  std::size_t slot() const noexcept { return slot_; }
  /// The braid beta(e): the base word with the slot's exponent replaced by e.
  BraidWord at(int e) const;
  /// Writes the slot as x<i>^@.
  std::string to_string() const;

 private:
  BraidWord base_;
  std::size_t slot_;
};

/// Grammar: `B<n>:` followed by whitespace-separated `x<i>` or `x<i>^<e>`.
/// The word is returned exactly as written.
BraidWord parse_braid(std::string_view text);
/// Same grammar with exactly one syllable written `x<i>^@`.
ExponentFamily parse_family(std::string_view text);

/// Merges cyclically adjacent syllables with equal generator, drops zero
/// exponents and rotates to the lexicographically least syllable sequence.
BraidWord normalize_cyclic(const BraidWord& w);

/// Image in S_n: perm[p] is the bottom position of the strand starting at top
/// position p (0-based). x_i swaps the strands at positions i-1 and i.
std::vector<int> permutation(const BraidWord& w);
/// Number of cycles of a permutation given in image form.
int cycle_count(const std::vector<int>& perm);
int closure_components(const BraidWord& w);
bool is_knot(const BraidWord& w);

/// Exponent sum.
long writhe(const BraidWord& w);

/// Removes x_{n-1}^{±1} when it is the only syllable using generator n-1,
/// dropping the top strand.
std::optional<BraidWord> destabilize(const BraidWord& w);

/// Conjugation by the half twist: x_i -> x_{n-i}. Preserves the closure.
BraidWord flip(const BraidWord& w);

/// If some generator g is unused, the words on strands {1..g} and {g+1..n}.
/// The closure of w is the distant union of their closures.
std::optional<std::pair<BraidWord, BraidWord>> split_absent(const BraidWord& w);

/// Generators strictly increasing with every exponent equal to 1.
bool is_markov_square_free(const BraidWord& w);

}  // namespace jones
