#include "vt3/polynomial.hpp"

#include <sstream>

namespace vt3 {

Polynomial Polynomial::constant(Rat value) { return monomial(std::move(value), 0); }

Polynomial Polynomial::monomial(Rat coeff, unsigned degree) {
  Polynomial p;
  if (sgn(coeff) != 0) p.coeffs_.emplace(degree, std::move(coeff));
  return p;
}

std::optional<unsigned> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

Rat Polynomial::coefficient(unsigned degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

Polynomial Polynomial::derivative() const {
  Polynomial result;
  for (const auto& [deg, coeff] : coeffs_) {
    if (deg == 0) continue;
    result.coeffs_.emplace(deg - 1, coeff * deg);
  }
  return result;
}

Polynomial Polynomial::shifted() const {
  Polynomial result;
  for (const auto& [deg, coeff] : coeffs_) result.coeffs_.emplace(deg + 1, coeff);
  return result;
}

void Polynomial::add_term(unsigned degree, const Rat& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(degree, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) coeffs_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [deg, coeff] : other.coeffs_) add_term(deg, coeff);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [deg, coeff] : other.coeffs_) add_term(deg, -coeff);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rat& scalar) {
  if (sgn(scalar) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [deg, coeff] : coeffs_) coeff *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial result = *this;
  for (auto& [deg, coeff] : result.coeffs_) coeff = -coeff;
  return result;
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.coeffs_.size() != rhs.coeffs_.size()) return false;
  auto it = rhs.coeffs_.begin();
  for (const auto& [deg, coeff] : lhs.coeffs_) {
    if (deg != it->first || coeff != it->second) return false;
    ++it;
  }
  return true;
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [deg, coeff] : coeffs_) {
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
    bool fraction = value.get_den() != 1;
    bool unit = value == 1;
    if (deg == 0) {
      out << rat_str(value);
    } else {
      if (!unit) {
        if (fraction) {
          out << '(' << rat_str(value) << ')';
        } else {
          out << rat_str(value);
        }
      }
      out << 't';
      if (deg > 1) out << '^' << deg;
    }
  }
  return out.str();
}

}  // namespace vt3
