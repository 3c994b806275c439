#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vt3/alternating.hpp"
#include "vt3/expression.hpp"
#include "vt3/heisenberg.hpp"

namespace vt3 {

/// Assignment of generator names to algebra elements. Must cover every
/// generator of whatever it is applied to.
using Substitution = std::map<std::string, LeibnizElement>;

std::string substitution_str(const Substitution& subst);
/// "x1=a,x2=b+[t^2]".
Substitution parse_substitution(const std::string& text);

/// Evaluates with the algebra product, respecting brackets. Throws
/// std::domain_error on an unassigned generator.
LeibnizElement evaluate(const Expression& expr, const Substitution& subst);
LeibnizElement evaluate(const MultiElement& element, const Substitution& subst);

/// Same value as evaluate(t.expand(), subst) without materializing the
/// expansion; shares word prefixes across permutations and short-circuits
/// at zero.
LeibnizElement evaluate_template(const AlternatingTemplate& t, const Substitution& subst);

struct RatMatrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<Rat> data;  // row-major

  RatMatrix() = default;
  RatMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, Rat(0)) {}
  Rat& at(size_t r, size_t c) { return data[r * cols + c]; }
  const Rat& at(size_t r, size_t c) const { return data[r * cols + c]; }
};

/// One column per element, one row per (substitution, coordinate) pair.
/// Coordinates flatten a value as (alpha, beta, gamma, f_0, ..., f_D) where
/// D is the maximum polynomial degree observed across the whole batch.
RatMatrix evaluation_matrix(std::span<const MultiElement> elements,
                            std::span<const Substitution> substitutions);

struct RankResult {
  size_t rank = 0;
  /// A nonzero rational kernel vector when rank < cols.
  std::optional<std::vector<Rat>> null_vector;
};

/// Column rank by exact fraction-free (Bareiss) elimination.
RankResult column_rank(const RatMatrix& matrix);

struct IndependenceCertificate {
  bool independent = false;
  size_t rank = 0;
  std::vector<std::string> element_labels;
  std::vector<Substitution> substitutions;
  RatMatrix matrix;
  std::optional<std::vector<Rat>> null_vector;

  std::string to_json() const;
};

/// True result proves linear independence; false is inconclusive and carries
/// the surviving kernel vector.
IndependenceCertificate independence_certificate(std::span<const MultiElement> elements,
                                                 std::span<const Substitution> substitutions,
                                                 std::vector<std::string> labels = {});

/// Deterministic pool of candidate substitutions for the given generators:
/// basis assignments with one variable perturbed by t^d, d <= max_degree.
std::vector<Substitution> default_substitution_pool(std::span<const std::string> generators,
                                                    int max_degree);

/// Greedily grows a substitution subset from the pool until the evaluation
/// matrix reaches full column rank; returns the certificate built from the
/// chosen subset (independent == false if the pool is exhausted first).
IndependenceCertificate find_independence_certificate(std::span<const MultiElement> elements,
                                                      std::span<const Substitution> pool,
                                                      std::vector<std::string> labels = {});

}  // namespace vt3
