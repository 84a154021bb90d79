#include "jones/laurent.hpp"

#include <cctype>
#include <stdexcept>

#include "jones/errors.hpp"

namespace jones {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int e) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::initializer_list<std::pair<int, long>> terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, Integer(c));
  return p;
}

void LaurentPoly::add_term(int e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::degree() const noexcept {
  return terms_.empty() ? kDegreeOfZero : terms_.rbegin()->first;
}

int LaurentPoly::order() const noexcept {
  return terms_.empty() ? kOrderOfZero : terms_.begin()->first;
}

Integer LaurentPoly::leading() const {
  return terms_.empty() ? Integer(0) : terms_.rbegin()->second;
}

Integer LaurentPoly::trailing() const {
  return terms_.empty() ? Integer(0) : terms_.begin()->second;
}

Extremes LaurentPoly::extremes() const {
  return Extremes{degree(), order(), leading(), trailing()};
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  Integer product;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      product = ca * cb;
      out.add_term(ea + eb, product);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1L);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::inverted_variable() const { return substituted_power(-1); }

LaurentPoly LaurentPoly::substituted_power(int k) const {
  if (k == 0) throw std::invalid_argument("substituted_power: exponent must be nonzero");
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e * k, c);
  return p;
}

bool LaurentPoly::is_unit() const noexcept {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

std::optional<LaurentPoly> LaurentPoly::inverse() const {
  if (!is_unit()) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  return monomial(c, -e);
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (x == 0) throw std::domain_error("evaluate: Laurent polynomial evaluated at 0");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    const Rational base = e >= 0 ? x : Rational(1) / x;
    for (int i = 0, n = e >= 0 ? e : -e; i < n; ++i) term *= base;
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

std::string LaurentPoly::to_string(char variable) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Integer magnitude = abs(c);
    if (magnitude != 1 || e == 0) out += magnitude.get_str();
    if (e != 0) {
      out += variable;
      if (e != 1) out += '^' + std::to_string(e);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, char variable) : text_(text), var_(variable) {}

  LaurentPoly run() {
    LaurentPoly result;
    skip_spaces();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_spaces();
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      first = false;
      result += parse_term(sign);
      skip_spaces();
    }
    return result;
  }

 private:
  LaurentPoly parse_term(int sign) {
    const std::size_t start = pos_;
    Integer coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(read_digits());
      have_coeff = true;
      skip_spaces();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_spaces();
        if (at_end() || peek() != var_) throw ParseError("expected variable after '*'", pos_);
      }
    }
    int exponent = 0;
    if (!at_end() && peek() == var_) {
      ++pos_;
      exponent = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        bool negative = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
          negative = peek() == '-';
          ++pos_;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError("expected integer exponent", pos_);
        const std::string digits = read_digits();
        long value = 0;
        try {
          value = std::stol(digits);
        } catch (const std::out_of_range&) {
          throw ParseError("exponent out of range", pos_);
        }
        if (value > 1'000'000'000L) throw ParseError("exponent out of range", pos_);
        exponent = static_cast<int>(negative ? -value : value);
      }
    } else if (!have_coeff) {
      throw ParseError("expected coefficient or variable", start);
    }
    return LaurentPoly::monomial(sign * coeff, exponent);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_spaces() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, char variable) {
  return PolyParser(text, variable).run();
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("exact_div: division by the zero polynomial");
  if (num.is_zero()) return {};
  const int den_deg = den.degree();
  const Integer den_lead = den.leading();
  const int quotient_order = num.order() - den.order();

  LaurentPoly quotient;
  LaurentPoly rem = num;
  Integer q;
  while (!rem.is_zero()) {
    const int e = rem.degree() - den_deg;
    if (e < quotient_order) break;
    const Integer lead = rem.leading();
    if (!mpz_divisible_p(lead.get_mpz_t(), den_lead.get_mpz_t())) break;
    mpz_divexact(q.get_mpz_t(), lead.get_mpz_t(), den_lead.get_mpz_t());
    const LaurentPoly step = LaurentPoly::monomial(q, e);
    quotient += step;
    rem -= step * den;
  }
  if (!rem.is_zero()) {
    throw NotDivisible("exact_div: " + num.to_string() + " is not divisible by " + den.to_string());
  }
  return quotient;
}

LaurentPoly s_pow(int e) { return LaurentPoly::monomial(1, e); }

const LaurentPoly& unlink_factor() {
  static const LaurentPoly factor = LaurentPoly::from_terms({{1, -1}, {-1, -1}});
  return factor;
}

}  // namespace jones
