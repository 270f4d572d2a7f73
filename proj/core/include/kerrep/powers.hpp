#pragma once

#include "kerrep/rational.hpp"
#include "kerrep/word.hpp"

namespace kerrep {

/// Least p >= 1 with v[i] == v[i+p] wherever both sides exist.
/// Border-array construction, linear time. Requires a non-empty word.
std::size_t smallest_period(const Word& v);

/// |v| / smallest_period(v), exact and in lowest terms.
Rational exponent(const Word& v);

/// Whether v is at least an r-power, i.e. exponent(v) >= r. Requires r >= 1.
bool is_r_power(const Word& v, const Rational& r);

}  // namespace kerrep
