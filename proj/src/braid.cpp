#include "jones/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "jones/errors.hpp"

namespace jones {

BraidWord::BraidWord(int strands, std::vector<Syllable> syllables)
    : strands_(strands), syllables_(std::move(syllables)) {
  if (strands_ < 1) throw BoundsError("braid must have at least one strand");
  for (const auto& syl : syllables_) {
    if (syl.gen < 1 || syl.gen > strands_ - 1) {
      throw BoundsError("generator x" + std::to_string(syl.gen) + " out of range for B" +
                        std::to_string(strands_));
    }
  }
}

long BraidWord::crossing_count() const noexcept {
  long c = 0;
  for (const auto& syl : syllables_) c += syl.exp < 0 ? -static_cast<long>(syl.exp) : syl.exp;
  return c;
}

namespace {

std::string syllable_text(const Syllable& syl) {
  std::string out = "x" + std::to_string(syl.gen);
  if (syl.exp != 1) out += "^" + std::to_string(syl.exp);
  return out;
}

struct ParsedBraid {
  BraidWord word;
  std::optional<std::size_t> slot;
};

class BraidParser {
 public:
  BraidParser(std::string_view text, bool allow_slot) : text_(text), allow_slot_(allow_slot) {}

  ParsedBraid run() {
    skip_spaces();
    expect('B');
    const long strands = read_int("strand count");
    skip_spaces();
    expect(':');
    std::vector<Syllable> syllables;
    std::optional<std::size_t> slot;
    std::vector<std::size_t> gen_positions;
    while (true) {
      skip_spaces();
      if (at_end()) break;
      gen_positions.push_back(pos_);
      expect('x');
      const long gen = read_int("generator index");
      long exp = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        if (!at_end() && peek() == '@') {
          if (!allow_slot_) throw ParseError("variable exponent '@' not allowed here", pos_);
          if (slot) throw ParseError("more than one variable exponent", pos_);
          ++pos_;
          slot = syllables.size();
          exp = 0;
        } else {
          exp = read_signed_int("exponent");
        }
      }
      if (!at_end() && !std::isspace(static_cast<unsigned char>(peek())))
        throw ParseError("expected whitespace between syllables", pos_);
      syllables.push_back({static_cast<int>(gen), static_cast<int>(exp)});
    }
    if (allow_slot_ && !slot) throw ParseError("family needs one syllable written x<i>^@", pos_);
    if (strands < 1 || strands > 1'000'000) throw ParseError("invalid strand count", 1);
    for (std::size_t i = 0; i < syllables.size(); ++i) {
      if (syllables[i].gen < 1 || syllables[i].gen > strands - 1) {
        throw BoundsError("generator x" + std::to_string(syllables[i].gen) + " at position " +
                          std::to_string(gen_positions[i]) + " out of range for B" +
                          std::to_string(strands));
      }
    }
    return {BraidWord(static_cast<int>(strands), std::move(syllables)), slot};
  }

 private:
  void expect(char c) {
    if (at_end() || peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  long read_int(const char* what) {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start);
    if (pos_ - start > 9) throw ParseError(std::string(what) + " too large", start);
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  long read_signed_int(const char* what) {
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    const long v = read_int(what);
    return negative ? -v : v;
  }

  void skip_spaces() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  bool allow_slot_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string BraidWord::to_string() const {
  std::string out = "B" + std::to_string(strands_) + ":";
  for (const auto& syl : syllables_) out += " " + syllable_text(syl);
  return out;
}

ExponentFamily::ExponentFamily(BraidWord base, std::size_t slot) : base_(std::move(base)), slot_(slot) {
  if (slot_ >= base_.size()) throw std::out_of_range("family slot outside the syllable list");
}

BraidWord ExponentFamily::at(int e) const {
  std::vector<Syllable> syls = base_.syllables();
  syls[slot_].exp = e;
  return BraidWord(base_.strands(), std::move(syls));
}

std::string ExponentFamily::to_string() const {
  std::string out = "B" + std::to_string(base_.strands()) + ":";
  for (std::size_t i = 0; i < base_.size(); ++i) {
    const auto& syl = base_.syllables()[i];
    out += " ";
    out += i == slot_ ? "x" + std::to_string(syl.gen) + "^@" : syllable_text(syl);
  }
  return out;
}

BraidWord parse_braid(std::string_view text) { return BraidParser(text, false).run().word; }

ExponentFamily parse_family(std::string_view text) {
  auto parsed = BraidParser(text, true).run();
  return ExponentFamily(std::move(parsed.word), *parsed.slot);
}

BraidWord normalize_cyclic(const BraidWord& w) {
  std::vector<Syllable> out;
  out.reserve(w.size());
  for (const auto& syl : w.syllables()) {
    if (syl.exp == 0) continue;
    if (!out.empty() && out.back().gen == syl.gen) {
      out.back().exp += syl.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(syl);
    }
  }
  while (out.size() >= 2 && out.front().gen == out.back().gen) {
    out.front().exp += out.back().exp;
    out.pop_back();
    if (out.front().exp == 0) out.erase(out.begin());
  }

  // Least rotation, compared syllable by syllable.
  const std::size_t k = out.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < k; ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      const Syllable& a = out[(r + i) % k];
      const Syllable& b = out[(best + i) % k];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(best), out.end());
  return BraidWord(w.strands(), std::move(out));
}

std::vector<int> permutation(const BraidWord& w) {
  // occupant[q] = top position of the strand currently at position q.
  std::vector<int> occupant(static_cast<std::size_t>(w.strands()));
  std::iota(occupant.begin(), occupant.end(), 0);
  for (const auto& syl : w.syllables()) {
    if (syl.exp % 2 != 0) std::swap(occupant[syl.gen - 1], occupant[syl.gen]);
  }
  std::vector<int> perm(occupant.size());
  for (std::size_t q = 0; q < occupant.size(); ++q) perm[occupant[q]] = static_cast<int>(q);
  return perm;
}

int cycle_count(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t p = start; !seen[p]; p = static_cast<std::size_t>(perm[p])) seen[p] = true;
  }
  return cycles;
}

int closure_components(const BraidWord& w) { return cycle_count(permutation(w)); }

bool is_knot(const BraidWord& w) { return closure_components(w) == 1; }

long writhe(const BraidWord& w) {
  long sum = 0;
  for (const auto& syl : w.syllables()) sum += syl.exp;
  return sum;
}

std::optional<BraidWord> destabilize(const BraidWord& w) {
  const int top = w.strands() - 1;
  if (top < 1) return std::nullopt;
  std::optional<std::size_t> where;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.syllables()[i].gen != top) continue;
    if (where) return std::nullopt;
    where = i;
  }
  if (!where) return std::nullopt;
  const int e = w.syllables()[*where].exp;
  if (e != 1 && e != -1) return std::nullopt;
  std::vector<Syllable> syls = w.syllables();
  syls.erase(syls.begin() + static_cast<std::ptrdiff_t>(*where));
  return BraidWord(w.strands() - 1, std::move(syls));
}

BraidWord flip(const BraidWord& w) {
  std::vector<Syllable> syls = w.syllables();
  for (auto& syl : syls) syl.gen = w.strands() - syl.gen;
  return BraidWord(w.strands(), std::move(syls));
}

std::optional<std::pair<BraidWord, BraidWord>> split_absent(const BraidWord& w) {
  const int n = w.strands();
  std::vector<bool> used(static_cast<std::size_t>(n > 0 ? n : 1), false);
  for (const auto& syl : w.syllables()) used[syl.gen] = true;
  for (int g = 1; g <= n - 1; ++g) {
    if (used[g]) continue;
    std::vector<Syllable> left;
    std::vector<Syllable> right;
    for (const auto& syl : w.syllables()) {
      if (syl.gen < g) {
        left.push_back(syl);
      } else {
        right.push_back({syl.gen - g, syl.exp});
      }
    }
    return std::pair{BraidWord(g, std::move(left)), BraidWord(n - g, std::move(right))};
  }
  return std::nullopt;
}

bool is_markov_square_free(const BraidWord& w) {
  int last = 0;
  for (const auto& syl : w.syllables()) {
    if (syl.exp != 1 || syl.gen <= last) return false;
    last = syl.gen;
  }
  return true;
}

}  // namespace jones
