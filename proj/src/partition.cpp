#include "vt3/partition.hpp"

#include <sstream>
#include <stdexcept>

namespace vt3 {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  int prev = 0;
  for (size_t i = 0; i < parts_.size(); ++i) {
    int part = parts_[i];
    if (part <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && part > prev) throw std::invalid_argument("partition parts must be weakly decreasing");
    prev = part;
    n_ += part;
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid partition token '" + token + "'");
    }
    if (used != token.size() || value <= 0) {
      throw std::invalid_argument("invalid partition token '" + token + "'");
    }
    parts.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
    if (pos == text.size()) throw std::invalid_argument("trailing comma in partition");
  }
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out << ',';
    out << parts_[i];
  }
  return out.str();
}

const char* shape_tag_name(ShapeTag tag) {
  switch (tag) {
    case ShapeTag::Row: return "Row";
    case ShapeTag::TwoEqual: return "TwoEqual";
    case ShapeTag::ThreeEqual: return "ThreeEqual";
    case ShapeTag::FourRowTailOne: return "FourRowTailOne";
    case ShapeTag::TwoRowsDistinct: return "TwoRowsDistinct";
    case ShapeTag::Hook3Bottom: return "Hook3Bottom";
    case ShapeTag::Hook3Top: return "Hook3Top";
    case ShapeTag::ThreeDistinct: return "ThreeDistinct";
    case ShapeTag::Null: return "Null";
  }
  return "?";
}

Partition ShapeClass::reassemble() const {
  switch (tag) {
    case ShapeTag::Row: return Partition({p});
    case ShapeTag::TwoEqual: return Partition({p, p});
    case ShapeTag::ThreeEqual: return Partition({p, p, p});
    case ShapeTag::FourRowTailOne: return Partition({p + q + r + 1, p + q + 1, p + 1, 1});
    case ShapeTag::TwoRowsDistinct: return Partition({p + q, p});
    case ShapeTag::Hook3Bottom: return Partition({p + q, p, p});
    case ShapeTag::Hook3Top: return Partition({p + q, p + q, p});
    case ShapeTag::ThreeDistinct: return Partition({p + q + r, p + q, p});
    case ShapeTag::Null: break;
  }
  throw std::domain_error("no partition to reassemble for Null");
}

ShapeClass classify(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("classify of the empty partition");
  const auto& parts = lambda.parts();
  switch (lambda.rows()) {
    case 1:
      return {ShapeTag::Row, parts[0], 0, 0};
    case 2:
      if (parts[0] == parts[1]) return {ShapeTag::TwoEqual, parts[0], 0, 0};
      return {ShapeTag::TwoRowsDistinct, parts[1], parts[0] - parts[1], 0};
    case 3:
      if (parts[0] == parts[1] && parts[1] == parts[2]) return {ShapeTag::ThreeEqual, parts[0], 0, 0};
      if (parts[1] == parts[2]) return {ShapeTag::Hook3Bottom, parts[1], parts[0] - parts[1], 0};
      if (parts[0] == parts[1]) return {ShapeTag::Hook3Top, parts[2], parts[0] - parts[2], 0};
      return {ShapeTag::ThreeDistinct, parts[2], parts[1] - parts[2], parts[0] - parts[1]};
    case 4:
      if (parts[3] == 1) {
        return {ShapeTag::FourRowTailOne, parts[2] - 1, parts[1] - parts[2], parts[0] - parts[1]};
      }
      return {ShapeTag::Null, 0, 0, 0};
    default:
      return {ShapeTag::Null, 0, 0, 0};
  }
}

int corner_cells(const Partition& lambda) {
  if (lambda.empty()) throw std::domain_error("corner_cells of the empty partition");
  int corners = 1;
  const auto& parts = lambda.parts();
  for (size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] != parts[i - 1]) ++corners;
  }
  return corners;
}

int column_height(const Partition& lambda, int j) {
  if (j < 1) throw std::invalid_argument("column index must be >= 1");
  int height = 0;
  for (int part : lambda.parts()) {
    if (part >= j) ++height;
    else break;
  }
  return height;
}

Partition remove_first_column(const Partition& lambda) {
  if (lambda.empty()) return lambda;
  std::vector<int> parts;
  parts.reserve(lambda.parts().size());
  for (int part : lambda.parts()) {
    if (part >= 2) parts.push_back(part - 1);
  }
  return Partition(std::move(parts));
}

Int hook_dimension(const Partition& lambda) {
  if (lambda.empty()) throw std::domain_error("hook_dimension of the empty partition");
  const auto& parts = lambda.parts();
  Int hooks(1);
  for (size_t i = 0; i < parts.size(); ++i) {
    for (int j = 1; j <= parts[i]; ++j) {
      int arm = parts[i] - j;
      int leg = column_height(lambda, j) - static_cast<int>(i) - 1;
      hooks *= arm + leg + 1;
    }
  }
  Int result;
  Int numerator = factorial(static_cast<unsigned>(lambda.n()));
  mpz_divexact(result.get_mpz_t(), numerator.get_mpz_t(), hooks.get_mpz_t());
  return result;
}

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_rows) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative number");
  std::vector<Partition> result;
  for_each_partition(n, max_rows, [&](std::span<const int> parts) {
    result.push_back(Partition(std::vector<int>(parts.begin(), parts.end())));
  });
  return result;
}

}  // namespace vt3
