#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace hierarch {

// All arithmetic in the library is exact; there are no tolerances anywhere.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Parses "p", "-p" or "p/q" (q > 0 after sign normalization).
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string to_string(const Rational& value);

}  // namespace hierarch
