#include "kerrep/rational.hpp"

#include <stdexcept>

namespace kerrep {

std::string to_string(const Rational& r) {
  return r.numerator().str() + "/" + r.denominator().str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)), BigInt(1));
    }
    const BigInt num{std::string(text.substr(0, slash))};
    const BigInt den{std::string(text.substr(slash + 1))};
    return Rational(num, den);  // throws on zero denominator
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid rational: " + std::string(text));
  }
}

BigInt floor_of(const Rational& r) {
  // boost::rational keeps the denominator positive.
  BigInt quotient = r.numerator() / r.denominator();
  if (r.numerator() < 0 && quotient * r.denominator() != r.numerator()) --quotient;
  return quotient;
}

BigInt ceil_of(const Rational& r) {
  BigInt quotient = r.numerator() / r.denominator();
  if (r.numerator() > 0 && quotient * r.denominator() != r.numerator()) ++quotient;
  return quotient;
}

}  // namespace kerrep
