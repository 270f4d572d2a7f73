#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>
#include <string_view>

namespace kerrep {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, kept in lowest terms by boost::rational. All threshold
/// comparisons in this library are exact; there are no tolerances anywhere.
using Rational = boost::rational<BigInt>;

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

/// "p/q" in lowest terms; integral values still carry the "/1".
std::string to_string(const Rational& r);

/// Accepts "p" or "p/q", with an optional leading minus on p.
Rational parse_rational(std::string_view text);

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);

}  // namespace kerrep
