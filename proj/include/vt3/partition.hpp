#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vt3/rational.hpp"

namespace vt3 {

/// Integer partition lambda_1 >= lambda_2 >= ... >= lambda_k > 0, viewed as a
/// Young diagram with lambda_i cells in row i. The empty partition is the
/// unique partition of 0. Immutable after construction.
class Partition {
 public:
  Partition() = default;
  /// Validates that parts are weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  /// "3,2,1"; the empty string denotes the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return parts_[static_cast<size_t>(i)]; }

  std::string str() const;

  friend bool operator==(const Partition& lhs, const Partition& rhs) { return lhs.parts_ == rhs.parts_; }
  friend std::strong_ordering operator<=>(const Partition& lhs, const Partition& rhs) {
    return lhs.parts_ <=> rhs.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// The diagram shapes with nonzero multiplicity, plus Null for the rest.
/// Exactly one tag applies to any nonempty partition.
enum class ShapeTag {
  Row,             // (p)
  TwoEqual,        // (p,p)
  ThreeEqual,      // (p,p,p)
  FourRowTailOne,  // (p+q+r+1, p+q+1, p+1, 1), p,q,r >= 0
  TwoRowsDistinct, // (p+q, p), q >= 1
  Hook3Bottom,     // (p+q, p, p), q >= 1
  Hook3Top,        // (p+q, p+q, p), q >= 1
  ThreeDistinct,   // (p+q+r, p+q, p), q,r >= 1
  Null,
};

const char* shape_tag_name(ShapeTag tag);

struct ShapeClass {
  ShapeTag tag = ShapeTag::Null;
  int p = 0;
  int q = 0;
  int r = 0;

  /// Rebuilds the partition from (tag, p, q, r). Not defined for Null.
  Partition reassemble() const;
};

/// Classifies a nonempty partition into its unique shape. Partitions with
/// five or more rows, or four rows with lambda_4 >= 2, are Null.
ShapeClass classify(const Partition& lambda);

/// Number of corner cells (cells with nothing to the right or below), which
/// equals the number of distinct part values.
int corner_cells(const Partition& lambda);

/// #{i : lambda_i >= j} for j >= 1; zero beyond the first row's length.
int column_height(const Partition& lambda, int j);

/// Drops one cell from every row, discarding emptied rows.
Partition remove_first_column(const Partition& lambda);

/// Dimension of the irreducible S_n module for lambda, by the hook length
/// formula: n! / prod(hooks).
Int hook_dimension(const Partition& lambda);

/// Visits every partition of n (with at most max_rows parts when given) in
/// lexicographically decreasing order. The span is only valid during the
/// visit.
template <class Visitor>
void for_each_partition(int n, std::optional<int> max_rows, Visitor&& visit) {
  if (n < 0) return;
  std::vector<int> buf;
  buf.reserve(static_cast<size_t>(n) + 1);
  int rows_cap = max_rows ? *max_rows : n;
  auto rec = [&](auto&& self, int remaining, int max_part, int rows_left) -> void {
    if (remaining == 0) {
      visit(std::span<const int>(buf));
      return;
    }
    if (rows_left <= 0) return;
    int hi = std::min(remaining, max_part);
    int lo = (remaining + rows_left - 1) / rows_left;
    for (int part = hi; part >= lo; --part) {
      buf.push_back(part);
      self(self, remaining - part, part, rows_left - 1);
      buf.pop_back();
    }
  };
  rec(rec, n, n, n == 0 ? 1 : rows_cap);
}

/// Materialized enumeration, same order as for_each_partition.
std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_rows = std::nullopt);

}  // namespace vt3
