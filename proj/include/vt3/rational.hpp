#pragma once

#include <gmpxx.h>

#include <string>

namespace vt3 {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact rational, kept in canonical form by all operations here.
using Rat = mpq_class;

/// num/den with den > 0 and gcd cleared.
Rat make_rat(long num, long den = 1);

/// Parses "3", "-3", "3/2" or "(3/2)". Throws std::invalid_argument.
Rat parse_rational(const std::string& text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& q);

inline std::string int_str(const Int& z) { return z.get_str(); }

Int factorial(unsigned n);

}  // namespace vt3
