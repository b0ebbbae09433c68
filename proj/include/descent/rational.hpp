#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>

namespace descent {

// Exact rational scalar. mpq keeps values in lowest terms with a positive
// denominator, so canonical form is automatic.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Parses "3/4", "-2", "0". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(const std::string& text);

// Formats as "n" or "n/d" with d > 0; inverse of parse_rational.
std::string format_rational(const Rational& value);

// Combined bit length of numerator and denominator; pivot-selection metric.
std::size_t rational_bits(const Rational& value);

}  // namespace descent
