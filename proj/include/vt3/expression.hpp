#pragma once

#include <compare>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "vt3/rational.hpp"

namespace vt3 {

/// A bracketed word over named generators: either a generator or a product
/// of two expressions. Left-normed words (every right child a generator) are
/// the common special case. Immutable and cheap to copy.
class Expression {
 public:
  static Expression generator(std::string name);
  static Expression product(Expression left, Expression right);
  /// Left-normed word (((x1 x2) x3) ... xn); requires at least one name.
  static Expression word(std::span<const std::string> names);

  bool is_generator() const { return node_->left == nullptr; }
  const std::string& name() const { return node_->name; }
  Expression left() const;
  Expression right() const;

  /// Number of generator occurrences.
  int length() const;
  bool is_left_normed() const;
  void count_generators(std::map<std::string, int>& counts) const;
  std::vector<std::string> generator_names() const;

  /// Left-normed juxtaposition with parentheses around compound right
  /// factors: "x0(x1y1)(x2y2)", "x1x2x3".
  std::string str() const;

  friend bool operator==(const Expression& lhs, const Expression& rhs);
  friend std::strong_ordering operator<=>(const Expression& lhs, const Expression& rhs);

 private:
  struct Node {
    std::string name;  // generator name; empty for products
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static std::strong_ordering compare(const Node& lhs, const Node& rhs);

  std::shared_ptr<const Node> node_;
};

/// Formal rational-linear combination of expressions, normalized: no zero
/// coefficients are stored.
class MultiElement {
 public:
  MultiElement() = default;
  static MultiElement term(Expression expr, Rat coeff = Rat(1));

  void add(const Expression& expr, const Rat& coeff);
  const std::map<Expression, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  MultiElement& operator+=(const MultiElement& other);
  MultiElement& operator-=(const MultiElement& other);
  MultiElement& operator*=(const Rat& scalar);
  friend MultiElement operator+(MultiElement lhs, const MultiElement& rhs) { return lhs += rhs; }
  friend MultiElement operator-(MultiElement lhs, const MultiElement& rhs) { return lhs -= rhs; }
  friend MultiElement operator*(MultiElement lhs, const Rat& scalar) { return lhs *= scalar; }
  friend MultiElement operator*(const Rat& scalar, MultiElement rhs) { return rhs *= scalar; }

  friend bool operator==(const MultiElement& lhs, const MultiElement& rhs);

  /// Distinct generator names across all terms, sorted.
  std::vector<std::string> generator_names() const;

  /// Canonically ordered: "x0(x1y)(x2y) + x0(x2y)(x1y)", coefficient 1
  /// elided, fractions parenthesized; "0" when empty.
  std::string str() const;

 private:
  std::map<Expression, Rat> terms_;
};

/// var -> var1 + ... + vard (d = multiplicity of var, which must be the same
/// in every term), expanded multilinearly, keeping exactly the terms that
/// contain each fresh variable once. Throws std::domain_error when var is
/// absent or has uneven multiplicity.
MultiElement linearize(const MultiElement& element, const std::string& var);

/// Linearizes every variable of multiplicity >= 2, in sorted name order.
MultiElement linearize_completely(const MultiElement& element);

}  // namespace vt3
