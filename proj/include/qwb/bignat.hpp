#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qwb {

// Arbitrary-precision natural number. All workbench quantities (Goedel
// numbers, evaluation values, fuel counters) are non-negative; cpp_int is
// signed, so construction sites must not produce negatives.
using BigNat = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigNat& n) { return n.str(); }

// Parses a decimal string of digits. Throws std::invalid_argument on
// anything else (sign characters included).
BigNat nat_from_decimal(const std::string& s);

// Cantor pairing pair(a, b) = (a + b)(a + b + 1)/2 + a and its inverse.
BigNat cantor_pair(const BigNat& a, const BigNat& b);
std::pair<BigNat, BigNat> cantor_unpair(const BigNat& c);

}  // namespace qwb
