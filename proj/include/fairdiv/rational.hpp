#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fairdiv {

// All verdict-relevant arithmetic is exact. Rationals are kept in lowest
// terms with a positive denominator by the backing type.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// Largest integer <= q.
BigInt floor_rational(const Rational& q);

/// Parses "p" or "p/q" (q > 0 after sign normalization, nonzero required).
Rational parse_rational(const std::string& text);

/// Canonical text: "p" when integral, otherwise "p/q" in lowest terms.
std::string format_rational(const Rational& q);

}  // namespace fairdiv
