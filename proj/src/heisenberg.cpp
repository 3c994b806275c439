#include "vt3/heisenberg.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace vt3 {

bool LeibnizElement::is_zero() const {
  return sgn(alpha) == 0 && sgn(beta) == 0 && sgn(gamma) == 0 && f.is_zero();
}

LeibnizElement& LeibnizElement::operator+=(const LeibnizElement& other) {
  alpha += other.alpha;
  beta += other.beta;
  gamma += other.gamma;
  f += other.f;
  return *this;
}

LeibnizElement& LeibnizElement::operator-=(const LeibnizElement& other) {
  alpha -= other.alpha;
  beta -= other.beta;
  gamma -= other.gamma;
  f -= other.f;
  return *this;
}

LeibnizElement& LeibnizElement::operator*=(const Rat& scalar) {
  alpha *= scalar;
  beta *= scalar;
  gamma *= scalar;
  f *= scalar;
  return *this;
}

bool operator==(const LeibnizElement& lhs, const LeibnizElement& rhs) {
  return lhs.alpha == rhs.alpha && lhs.beta == rhs.beta && lhs.gamma == rhs.gamma &&
         lhs.f == rhs.f;
}

LeibnizElement multiply(const LeibnizElement& x, const LeibnizElement& y) {
  LeibnizElement result;
  result.gamma = x.beta * y.alpha - x.alpha * y.beta;
  if (!x.f.is_zero()) {
    if (sgn(y.alpha) != 0) result.f += x.f.derivative() * y.alpha;
    if (sgn(y.beta) != 0) result.f += x.f.shifted() * y.beta;
    if (sgn(y.gamma) != 0) result.f += x.f * y.gamma;
  }
  return result;
}

LeibnizElement left_normed_product(std::span<const LeibnizElement> factors) {
  if (factors.empty()) throw std::invalid_argument("left_normed_product of no factors");
  LeibnizElement acc = factors.front();
  for (size_t i = 1; i < factors.size(); ++i) acc = multiply(acc, factors[i]);
  return acc;
}

LeibnizElement right_power(LeibnizElement x, const LeibnizElement& y, unsigned m) {
  for (unsigned i = 0; i < m && !x.is_zero(); ++i) x = multiply(x, y);
  return x;
}

LeibnizElement leibniz_defect(const LeibnizElement& u, const LeibnizElement& v,
                              const LeibnizElement& w) {
  return multiply(multiply(u, v), w) - multiply(multiply(u, w), v) - multiply(u, multiply(v, w));
}

namespace {

void append_signed(std::ostringstream& out, bool& first, const Rat& coeff, char symbol) {
  if (sgn(coeff) == 0) return;
  Rat value = coeff;
  if (first) {
    if (sgn(value) < 0) {
      out << '-';
      value = -value;
    }
    first = false;
  } else if (sgn(value) < 0) {
    out << " - ";
    value = -value;
  } else {
    out << " + ";
  }
  if (value != 1) {
    if (value.get_den() != 1) {
      out << '(' << rat_str(value) << ')';
    } else {
      out << rat_str(value);
    }
  }
  out << symbol;
}

// Hand-rolled scanner for the element grammar; see LeibnizElement::parse.
class ElementParser {
 public:
  explicit ElementParser(const std::string& text) : text_(text) {}

  LeibnizElement parse() {
    LeibnizElement result;
    skip_ws();
    if (done()) fail("empty element");
    bool negative = take_sign();
    for (;;) {
      parse_term(result, negative);
      skip_ws();
      if (done()) break;
      char op = text_[pos_];
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-' before '") + op + "'");
      ++pos_;
      skip_ws();
      negative = op == '-';
    }
    return result;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw std::invalid_argument("element '" + text_ + "': " + message);
  }

  bool take_sign() {
    if (peek() == '-') {
      ++pos_;
      skip_ws();
      return true;
    }
    if (peek() == '+') {
      ++pos_;
      skip_ws();
    }
    return false;
  }

  Rat parse_fraction() {
    size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number at '" + text_.substr(start, 4) + "'");
    std::string body = text_.substr(start, pos_ - start);
    if (peek() == '/') {
      ++pos_;
      size_t den_start = pos_;
      while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == den_start) fail("expected a denominator");
      body += '/' + text_.substr(den_start, pos_ - den_start);
    }
    return parse_rational(body);
  }

  unsigned parse_exponent() {
    size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an exponent");
    return static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start)));
  }

  // coeff? (a|b|c|t[^k]) | coeff | (coeff) ... | [poly]
  void parse_term(LeibnizElement& result, bool negative) {
    if (peek() == '[') {
      ++pos_;
      Polynomial poly = parse_poly_until(']');
      if (peek() != ']') fail("unterminated '['");
      ++pos_;
      if (negative) poly = -poly;
      result.f += poly;
      return;
    }
    Rat coeff(1);
    bool have_coeff = false;
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      bool inner_negative = take_sign();
      coeff = parse_fraction();
      if (inner_negative) coeff = -coeff;
      skip_ws();
      if (peek() != ')') fail("unterminated '('");
      ++pos_;
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_fraction();
      have_coeff = true;
    }
    if (negative) coeff = -coeff;
    char symbol = peek();
    if (symbol == 'a' || symbol == 'b' || symbol == 'c') {
      ++pos_;
      if (symbol == 'a') result.alpha += coeff;
      if (symbol == 'b') result.beta += coeff;
      if (symbol == 'c') result.gamma += coeff;
      return;
    }
    if (symbol == 't') {
      ++pos_;
      unsigned deg = 1;
      if (peek() == '^') {
        ++pos_;
        deg = parse_exponent();
      }
      result.f += Polynomial::monomial(coeff, deg);
      return;
    }
    if (have_coeff) {
      result.f += Polynomial::constant(coeff);
      return;
    }
    fail(std::string("unexpected token '") + symbol + "'");
  }

  Polynomial parse_poly_until(char closer) {
    Polynomial poly;
    skip_ws();
    bool negative = take_sign();
    for (;;) {
      Rat coeff(1);
      bool have_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = parse_fraction();
        have_coeff = true;
      } else if (peek() == '(') {
        ++pos_;
        skip_ws();
        bool inner_negative = take_sign();
        coeff = parse_fraction();
        if (inner_negative) coeff = -coeff;
        skip_ws();
        if (peek() != ')') fail("unterminated '('");
        ++pos_;
        have_coeff = true;
      }
      if (negative) coeff = -coeff;
      if (peek() == 't') {
        ++pos_;
        unsigned deg = 1;
        if (peek() == '^') {
          ++pos_;
          deg = parse_exponent();
        }
        poly += Polynomial::monomial(coeff, deg);
      } else if (have_coeff) {
        poly += Polynomial::constant(coeff);
      } else {
        fail(std::string("unexpected token '") + peek() + "' in polynomial");
      }
      skip_ws();
      if (peek() == closer || done()) return poly;
      char op = peek();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-' before '") + op + "'");
      ++pos_;
      skip_ws();
      negative = op == '-';
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

std::string LeibnizElement::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  append_signed(out, first, alpha, 'a');
  append_signed(out, first, beta, 'b');
  append_signed(out, first, gamma, 'c');
  if (!f.is_zero()) {
    if (!first) out << " + ";
    out << '[' << f.str() << ']';
  }
  return out.str();
}

LeibnizElement LeibnizElement::parse(const std::string& text) {
  return ElementParser(text).parse();
}

}  // namespace vt3
