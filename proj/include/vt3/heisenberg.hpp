#pragma once

#include <span>
#include <string>

#include "vt3/polynomial.hpp"

namespace vt3 {

/// Element alpha*a + beta*b + gamma*c + f(t) of the algebra built from the
/// Heisenberg algebra H = <a, b, c> and the polynomial ring Q[t].
///
/// Multiplication rules: ba = -ab = c, every other product of basis elements
/// of H is zero; polynomials form a right H-module via
///   f.a = f',   f.b = t*f,   f.c = f,
/// and the full product is (x + f)(y + g) = xy + f.y. The right factor's
/// polynomial part never contributes.
struct LeibnizElement {
  Rat alpha{0};
  Rat beta{0};
  Rat gamma{0};
  Polynomial f;

  static LeibnizElement a() { return {1, 0, 0, {}}; }
  static LeibnizElement b() { return {0, 1, 0, {}}; }
  static LeibnizElement c() { return {0, 0, 1, {}}; }
  static LeibnizElement polynomial(Polynomial p) { return {0, 0, 0, std::move(p)}; }
  static LeibnizElement zero() { return {}; }

  bool is_zero() const;

  LeibnizElement& operator+=(const LeibnizElement& other);
  LeibnizElement& operator-=(const LeibnizElement& other);
  LeibnizElement& operator*=(const Rat& scalar);
  friend LeibnizElement operator+(LeibnizElement lhs, const LeibnizElement& rhs) { return lhs += rhs; }
  friend LeibnizElement operator-(LeibnizElement lhs, const LeibnizElement& rhs) { return lhs -= rhs; }
  friend LeibnizElement operator*(LeibnizElement lhs, const Rat& scalar) { return lhs *= scalar; }
  friend LeibnizElement operator*(const Rat& scalar, LeibnizElement rhs) { return rhs *= scalar; }

  friend bool operator==(const LeibnizElement& lhs, const LeibnizElement& rhs);
  friend bool operator!=(const LeibnizElement& lhs, const LeibnizElement& rhs) { return !(lhs == rhs); }

  /// "2a - b + (3/2)c + [1 + 2t^3]"; "0" for the zero element.
  std::string str() const;

  /// Inverse of str(); also accepts unbracketed polynomial terms like
  /// "b + t^2". Throws std::invalid_argument naming the offending token.
  static LeibnizElement parse(const std::string& text);
};

LeibnizElement multiply(const LeibnizElement& x, const LeibnizElement& y);

/// (((x1 x2) x3) ... xn). Requires at least one factor.
LeibnizElement left_normed_product(std::span<const LeibnizElement> factors);

/// x followed by m right multiplications by y; m = 0 returns x.
LeibnizElement right_power(LeibnizElement x, const LeibnizElement& y, unsigned m);

/// (uv)w - (uw)v - u(vw); identically zero here.
LeibnizElement leibniz_defect(const LeibnizElement& u, const LeibnizElement& v,
                              const LeibnizElement& w);

}  // namespace vt3
