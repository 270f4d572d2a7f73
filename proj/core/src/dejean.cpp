#include "kerrep/dejean.hpp"

namespace kerrep::dejean {

const Morphism& morphism() {
  static const Morphism f{{
      Word::parse("121"),
      Word::parse("123"),
      Word::parse("141"),
      Word::parse("142"),
  }};
  return f;
}

Word fixed_point(std::size_t length) { return fixed_point_prefix(morphism(), 1, length); }

const Word& cover_u0() {
  static const Word u0 = Word::parse("23141121142");
  return u0;
}

const Word& cover_u1() {
  static const Word u1 = Word::parse("11421231211231411");
  return u1;
}

VerifierConfig standard_config(int n) {
  VerifierConfig cfg;
  cfg.n = n;
  cfg.q_max = kQMax;
  cfg.r2_threshold = make_rational(35, 34);
  cfg.eq1_constant = make_rational(9, 2 * 1967);
  cfg.cover = cover_u1();
  cfg.depth = kDepth;
  return cfg;
}

}  // namespace kerrep::dejean
