#include "vt3/invariants.hpp"

#include <sstream>
#include <stdexcept>

namespace vt3 {

namespace {

// Same rule as multiplicity(), on the raw enumeration buffer.
int multiplicity_of(std::span<const int> parts) {
  switch (parts.size()) {
    case 0: return 0;
    case 1: return 1;
    case 2: return parts[0] == parts[1] ? 1 : 2;
    case 3:
      if (parts[0] == parts[1] && parts[1] == parts[2]) return 1;
      if (parts[0] == parts[1] || parts[1] == parts[2]) return 2;
      return 3;
    case 4: return parts[3] == 1 ? 1 : 0;
    default: return 0;
  }
}

// Above this, colength_bruteforce caps the enumeration at five rows.
constexpr int kFullEnumerationLimit = 50;

}  // namespace

int multiplicity(const Partition& lambda) {
  switch (classify(lambda).tag) {
    case ShapeTag::Row:
    case ShapeTag::TwoEqual:
    case ShapeTag::ThreeEqual:
    case ShapeTag::FourRowTailOne:
      return 1;
    case ShapeTag::TwoRowsDistinct:
    case ShapeTag::Hook3Bottom:
    case ShapeTag::Hook3Top:
      return 2;
    case ShapeTag::ThreeDistinct:
      return 3;
    case ShapeTag::Null:
      return 0;
  }
  return 0;
}

int multiplicity_via_corners(const Partition& lambda) {
  if (lambda.rows() <= 3) return corner_cells(lambda);
  if (lambda.rows() == 4 && lambda.parts()[3] == 1) return 1;
  return 0;
}

int delta(long n) { return ((n % 3) + 3) % 3 == 1 ? 1 : 0; }

Int colength_exact(long n) {
  if (n < 1) throw std::domain_error("colength requires n >= 1");
  Int nn(static_cast<long>(n));
  return (nn * nn + nn + delta(n)) / 3;
}

Int colength_cases(long n) {
  if (n < 1) throw std::domain_error("colength requires n >= 1");
  long m = n / 6;
  Int mm(m);
  switch (n % 6) {
    case 0: return 12 * mm * mm + 2 * mm;
    case 1: return 12 * mm * mm + 6 * mm + 1;
    case 2: return 12 * mm * mm + 10 * mm + 2;
    case 3: return 12 * mm * mm + 14 * mm + 4;
    case 4: return 12 * mm * mm + 18 * mm + 7;
    default: return 12 * mm * mm + 22 * mm + 10;
  }
}

Int colength_bruteforce(int n) {
  if (n < 1) throw std::domain_error("colength requires n >= 1");
  std::optional<int> cap;
  if (n > kFullEnumerationLimit) cap = 5;
  long total = 0;
  for_each_partition(n, cap, [&](std::span<const int> parts) { total += multiplicity_of(parts); });
  return Int(total);
}

long a_count(long n) {
  if (n < 0) throw std::domain_error("a(n) requires n >= 0");
  return n / 2 + 1;
}

long a_count_brute(int n) {
  long count = 0;
  for_each_partition(n, 2, [&](std::span<const int>) { ++count; });
  return count;
}

long b_count(long n) {
  if (n < 0) throw std::domain_error("b(n) requires n >= 0");
  long m = n / 6;
  switch (n % 6) {
    case 0: return 3 * m * m;
    case 1: return 3 * m * m + m;
    case 2: return 3 * m * m + 2 * m;
    case 3: return 3 * m * m + 3 * m + 1;
    case 4: return 3 * m * m + 4 * m + 1;
    default: return 3 * m * m + 5 * m + 2;
  }
}

long b_count_brute(int n) {
  long count = 0;
  for_each_partition(n, 3, [&](std::span<const int> parts) {
    if (parts.size() == 3) ++count;
  });
  return count;
}

long c_count(long n) {
  if (n < 4) throw std::domain_error("c(n) requires n >= 4");
  long m = n / 6;
  switch (n % 6) {
    case 0: return 3 * m * m - m;
    case 1: return 3 * m * m;
    case 2: return 3 * m * m + m;
    case 3: return 3 * m * m + 2 * m;
    case 4: return 3 * m * m + 3 * m + 1;
    default: return 3 * m * m + 4 * m + 1;
  }
}

long c_count_brute(int n) {
  if (n < 4) throw std::domain_error("c(n) requires n >= 4");
  long count = 0;
  for_each_partition(n, 4, [&](std::span<const int> parts) {
    if (parts.size() == 4 && parts[3] == 1) ++count;
  });
  return count;
}

long l2(long n) {
  if (n < 1) throw std::domain_error("l2 requires n >= 1");
  return n;
}

long l2_brute(int n) {
  long total = 0;
  for_each_partition(n, 2, [&](std::span<const int> parts) { total += multiplicity_of(parts); });
  return total;
}

long l3(long n) {
  if (n < 1) throw std::domain_error("l3 requires n >= 1");
  if (n < 3) return 0;
  long m = n / 6;
  switch (n % 6) {
    case 0: return 9 * m * m - 3 * m;
    case 1: return 9 * m * m;
    case 2: return 9 * m * m + 3 * m;
    case 3: return 9 * m * m + 6 * m + 1;
    case 4: return 9 * m * m + 9 * m + 2;
    default: return 9 * m * m + 12 * m + 4;
  }
}

long l3_brute(int n) {
  long total = 0;
  for_each_partition(n, 3, [&](std::span<const int> parts) {
    if (parts.size() == 3) total += multiplicity_of(parts);
  });
  return total;
}

Rat asymptotic_deviation(long n) {
  Rat colength(colength_exact(n));
  Rat square = make_rat(n, 3) * Rat(static_cast<long>(n));
  return colength - square;
}

namespace {

Int codimension_sum(int n, int (*mult)(const Partition&)) {
  if (n < 1) throw std::domain_error("codimension requires n >= 1");
  Int total(0);
  for_each_partition(n, std::nullopt, [&](std::span<const int> parts) {
    if (parts.size() > 4) return;  // both multiplicity rules vanish beyond four rows
    Partition lambda(std::vector<int>(parts.begin(), parts.end()));
    int m = mult(lambda);
    if (m != 0) total += m * hook_dimension(lambda);
  });
  return total;
}

}  // namespace

Int codimension(int n) { return codimension_sum(n, &multiplicity); }

Int codimension_via_corners(int n) { return codimension_sum(n, &multiplicity_via_corners); }

InvariantReport make_report(std::string quantity, std::string input, Int formula, Int brute) {
  bool agrees = formula == brute;
  return {std::move(quantity), std::move(input), std::move(formula), std::move(brute), agrees};
}

namespace {

void append_json_int(std::ostream& out, const Int& value) {
  static const Int kMax = Int(1) << 53;
  if (value > -kMax && value < kMax) {
    out << value.get_str();
  } else {
    out << '"' << value.get_str() << '"';
  }
}

}  // namespace

std::string report_json_line(const InvariantReport& report) {
  std::ostringstream out;
  out << "{\"quantity\":\"" << report.quantity << "\",\"input\":\"" << report.input
      << "\",\"formula\":";
  append_json_int(out, report.formula);
  out << ",\"brute\":";
  append_json_int(out, report.brute);
  out << ",\"agree\":" << (report.agrees ? "true" : "false") << "}";
  return out.str();
}

std::string report_csv_line(const InvariantReport& report) {
  std::ostringstream out;
  out << report.quantity << ',' << '"' << report.input << '"' << ',' << report.formula.get_str()
      << ',' << report.brute.get_str() << ',' << (report.agrees ? "true" : "false");
  return out.str();
}

}  // namespace vt3
