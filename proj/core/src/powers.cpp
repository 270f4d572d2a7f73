#include "kerrep/powers.hpp"

#include <stdexcept>
#include <vector>

namespace kerrep {

std::size_t smallest_period(const Word& v) {
  if (v.empty()) throw std::domain_error("smallest_period of the empty word");
  const std::size_t n = v.size();
  // border[i] = length of the longest proper border of v[0..i);
  // the smallest period is n - border[n].
  std::vector<std::size_t> border(n + 1, 0);
  for (std::size_t i = 2; i <= n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && v[i - 1] != v[k]) k = border[k];
    if (v[i - 1] == v[k]) ++k;
    border[i] = k;
  }
  return n - border[n];
}

Rational exponent(const Word& v) {
  return Rational(BigInt(v.size()), BigInt(smallest_period(v)));
}

bool is_r_power(const Word& v, const Rational& r) {
  if (r < Rational(1)) throw std::domain_error("r-power test needs r >= 1");
  return exponent(v) >= r;
}

}  // namespace kerrep
