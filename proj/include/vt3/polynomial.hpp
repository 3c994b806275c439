#pragma once

#include <map>
#include <optional>
#include <string>

#include "vt3/rational.hpp"

namespace vt3 {

/// Univariate polynomial over Q in the variable t. Sparse and normalized:
/// zero coefficients are never stored, so structural equality is semantic
/// equality.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(Rat value);
  static Polynomial monomial(Rat coeff, unsigned degree);
  static Polynomial variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  Rat coefficient(unsigned degree) const;
  const std::map<unsigned, Rat>& coefficients() const { return coeffs_; }

  /// d/dt.
  Polynomial derivative() const;
  /// Multiplication by t.
  Polynomial shifted() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rat& scalar);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rat& scalar) { return lhs *= scalar; }
  friend Polynomial operator*(const Rat& scalar, Polynomial rhs) { return rhs *= scalar; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator!=(const Polynomial& lhs, const Polynomial& rhs) { return !(lhs == rhs); }

  /// "1 + 2t^3", "-t", "(3/2)t^2"; "0" for the zero polynomial.
  std::string str() const;

 private:
  void add_term(unsigned degree, const Rat& coeff);

  std::map<unsigned, Rat> coeffs_;
};

}  // namespace vt3
