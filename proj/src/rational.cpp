#include "vt3/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace vt3 {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rational(const std::string& text) {
  std::string body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  size_t i = 0;
  if (i < body.size() && (body[i] == '+' || body[i] == '-')) ++i;
  size_t slash = body.find('/');
  bool ok = slash == std::string::npos
                ? all_digits(body, i, body.size())
                : all_digits(body, i, slash) && all_digits(body, slash + 1, body.size());
  if (!ok) throw std::invalid_argument("invalid rational '" + text + "'");
  Rat q;
  if (q.set_str(body, 10) != 0 || sgn(q.get_den()) == 0) {
    throw std::invalid_argument("invalid rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

Int factorial(unsigned n) {
  Int result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace vt3
