#pragma once

#include <string>

#include "vt3/partition.hpp"

namespace vt3 {

/// Multiplicity of the irreducible module labelled by lambda, by the
/// piecewise shape rule: 1 for Row/TwoEqual/ThreeEqual/FourRowTailOne,
/// 2 for TwoRowsDistinct/Hook3Bottom/Hook3Top, 3 for ThreeDistinct, else 0.
int multiplicity(const Partition& lambda);

/// Independent restatement used as a cross-check: corner_cells for diagrams
/// of at most three rows, 1 for four rows ending in a single cell, else 0.
int multiplicity_via_corners(const Partition& lambda);

/// 1 iff n == 1 (mod 3).
int delta(long n);

/// Colength l_n = (n^2 + n + delta)/3, n >= 1.
Int colength_exact(long n);

/// Colength by the mod-6 case table; agrees with colength_exact everywhere.
Int colength_cases(long n);

/// Sum of multiplicity(lambda) over all partitions of n. Enumeration is
/// capped at five rows for large n; multiplicity vanishes beyond four rows,
/// so the cap does not change the sum.
Int colength_bruteforce(int n);

/// a(n) = floor(n/2) + 1: partitions with at most two rows (a(0) = 1).
long a_count(long n);
long a_count_brute(int n);

/// b(n): partitions with exactly three rows, by the mod-6 quadratics.
/// Satisfies b(n) = a(n-3) + b(n-3) for n >= 3.
long b_count(long n);
long b_count_brute(int n);

/// c(n): four-row partitions with lambda_4 = 1, n >= 4, by the mod-6 table.
/// Equals a(n-4) + b(n-4). Throws std::domain_error for n < 4.
long c_count(long n);
long c_count_brute(int n);

/// Multiplicity sum over partitions with at most two rows; equals n.
long l2(long n);
long l2_brute(int n);

/// Multiplicity sum over partitions with exactly three rows, by the mod-6
/// table; 0 for n < 3.
long l3(long n);
long l3_brute(int n);

/// l_n - n^2/3, exact. Equals (n + delta)/3, so 0 < value <= (n+1)/3.
Rat asymptotic_deviation(long n);

/// Codimension c_n = sum of multiplicity(lambda) * hook_dimension(lambda).
Int codimension(int n);

/// Same sum with multiplicity_via_corners, as an independent route.
Int codimension_via_corners(int n);

/// One formula-vs-bruteforce comparison row.
struct InvariantReport {
  std::string quantity;  // "m_lambda", "l_n", "a", "b", "c", "l2", "l3", "c_n"
  std::string input;     // n or the partition text
  Int formula{0};
  Int brute{0};
  bool agrees = false;
};

InvariantReport make_report(std::string quantity, std::string input, Int formula, Int brute);

/// {"quantity":...,"input":...,"formula":...,"brute":...,"agree":...}
/// Values outside the 53-bit range are emitted as decimal strings.
std::string report_json_line(const InvariantReport& report);
/// quantity,input,formula,brute,agree
std::string report_csv_line(const InvariantReport& report);
inline const char* report_csv_header() { return "quantity,input,formula,brute,agree"; }

}  // namespace vt3
