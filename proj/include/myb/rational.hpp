#ifndef MYB_RATIONAL_HPP
#define MYB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace myb {

// Exact arbitrary-precision fraction; canonical (gcd-reduced, positive
// denominator) after every operation.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& r);

// Strict parse of "p" or "p/q" with an optional leading '-'.
// Rejects denominator 0, empty fields and any other malformed input.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace myb

#endif
