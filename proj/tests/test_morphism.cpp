#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kerrep/dejean.hpp"
#include "kerrep/int_matrix.hpp"
#include "kerrep/morphism.hpp"
#include "oracles.hpp"

using namespace kerrep;

namespace {
const Morphism& f() { return dejean::morphism(); }
}  // namespace

TEST_CASE("images of the base morphism") {
  CHECK(apply(f(), Word::parse("1")).str() == "121");
  CHECK(apply(f(), Word::parse("")).empty());
  CHECK(apply(f(), Word::parse("12")).str() == "121123");
  CHECK(f().uniform_width() == std::size_t{3});
}

TEST_CASE("apply rejects letters outside the domain") {
  CHECK_THROWS_AS(apply(f(), Word::parse("15")), std::domain_error);
  CHECK_THROWS_AS(f().image(5), std::domain_error);
  CHECK_THROWS_AS(f().image(0), std::domain_error);
}

TEST_CASE("morphism is a monoid homomorphism") {
  std::mt19937 rng(101);
  for (int round = 0; round < 200; ++round) {
    const Word u = oracles::random_word(rng, round % 17, 4);
    const Word v = oracles::random_word(rng, round % 11, 4);
    Word uv = u;
    uv.append(v);
    Word img = apply(f(), u);
    img.append(apply(f(), v));
    CHECK(apply(f(), uv) == img);
  }
}

TEST_CASE("fixed point prefixes") {
  CHECK(fixed_point_prefix(f(), 1, 3).str() == "121");
  CHECK(fixed_point_prefix(f(), 1, 9).str() == "121123121");
  CHECK(fixed_point_prefix(f(), 1, 27).str() == "121123121121123141121123121");
  CHECK(fixed_point_prefix(f(), 1, 0).empty());
  CHECK(dejean::fixed_point(9).str() == "121123121");
}

TEST_CASE("fixed point prefixes are nested and stable under the morphism") {
  const Word big = fixed_point_prefix(f(), 1, 2000);
  for (std::size_t n : {0u, 1u, 2u, 3u, 10u, 81u, 100u, 729u, 1999u}) {
    const Word small = fixed_point_prefix(f(), 1, n);
    CHECK(big.prefix(n) == small);
    CHECK(apply(f(), small).prefix(n) == small);
  }
}

TEST_CASE("fixed point needs a prolongable seed") {
  // image of 1 does not start with 1
  const Morphism g({Word::parse("21"), Word::parse("11")});
  CHECK_FALSE(g.prolongable_on(1));
  CHECK_THROWS_AS(fixed_point_prefix(g, 1, 5), std::domain_error);
  // image too short to grow
  const Morphism h({Word::parse("1")});
  CHECK_THROWS_AS(fixed_point_prefix(h, 1, 5), std::domain_error);
  // seed outside the domain
  CHECK_THROWS_AS(fixed_point_prefix(f(), 7, 5), std::domain_error);
}

TEST_CASE("frequency matrix of the base morphism") {
  const IntMatrix freq = frequency_matrix(f());
  IntMatrix expected(4, 4);
  const long long rows[4][4] = {{2, 1, 0, 0}, {1, 1, 1, 0}, {2, 0, 0, 1}, {1, 1, 0, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) expected.at(i, j) = rows[i][j];
  CHECK(freq == expected);

  // uniform width 3: every row sums to 3
  for (int i = 0; i < 4; ++i) {
    long long sum = 0;
    for (int j = 0; j < 4; ++j) sum += freq.at(i, j);
    CHECK(sum == 3);
  }
  CHECK(determinant(freq) == 3);
}

TEST_CASE("frequency matrix of the identity morphism") {
  const Morphism id({Word::parse("1"), Word::parse("2"), Word::parse("3"), Word::parse("4")});
  CHECK(frequency_matrix(id) == IntMatrix::identity(4));
}

TEST_CASE("parikh vectors transform through the frequency matrix") {
  const IntMatrix freq = frequency_matrix(f());
  std::mt19937 rng(2024);
  for (int round = 0; round < 200; ++round) {
    const Word w = oracles::random_word(rng, 1 + round % 40, 4);
    const auto before = w.parikh(4);
    const auto after = apply(f(), w).parikh(4);
    CHECK(apply_row_vector(before, freq) == after);
  }
}

TEST_CASE("inverse modulo: existence and verification") {
  const IntMatrix freq = frequency_matrix(f());
  const auto inv = inverse_mod(freq, 4);
  REQUIRE(inv.has_value());
  CHECK(mod_reduce(multiply(freq, *inv), 4) == IntMatrix::identity(4));
  CHECK(mod_reduce(multiply(*inv, freq), 4) == IntMatrix::identity(4));

  CHECK(inverse_mod(IntMatrix::identity(3), 4) == IntMatrix::identity(3));

  IntMatrix two(1, 1);
  two.at(0, 0) = 2;  // 2 is not a unit modulo 4
  CHECK_FALSE(inverse_mod(two, 4).has_value());

  CHECK_THROWS_AS(inverse_mod(IntMatrix(2, 3), 4), std::domain_error);
  CHECK_THROWS_AS(inverse_mod(IntMatrix::identity(2), 1), std::domain_error);
}

TEST_CASE("inverse modulo on random matrices agrees with the determinant test") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long long> entry(0, 11);
  std::uniform_int_distribution<int> size(1, 4);
  for (long long modulus : {2, 3, 4, 5, 6, 12}) {
    for (int round = 0; round < 100; ++round) {
      const int n = size(rng);
      IntMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
      const auto inv = inverse_mod(m, modulus);
      const long long det = ((determinant(m) % modulus) + modulus) % modulus;
      bool det_is_unit = false;
      for (long long r = 0; r < modulus; ++r) det_is_unit = det_is_unit || det * r % modulus == 1;
      CHECK(inv.has_value() == det_is_unit);
      if (inv.has_value()) {
        CHECK(mod_reduce(multiply(m, *inv), modulus) == IntMatrix::identity(n));
        CHECK(mod_reduce(multiply(*inv, m), modulus) == IntMatrix::identity(n));
      }
    }
  }
}

TEST_CASE("morphism text format") {
  const std::string text = "1:121\n2:123\n3:141\n4:142\n";
  CHECK(Morphism::parse(text) == f());
  CHECK(f().str() == text);
  CHECK(Morphism::parse(f().str()) == f());

  CHECK_THROWS_AS(Morphism::parse("1-121"), std::invalid_argument);
  CHECK_THROWS_AS(Morphism::parse("1:"), std::invalid_argument);       // empty image
  CHECK_THROWS_AS(Morphism::parse("1:12\n3:11"), std::invalid_argument);  // gap at 2
  CHECK_THROWS_AS(Morphism::parse("1:12\n1:21"), std::invalid_argument);  // duplicate
}

TEST_CASE("non-uniform morphisms report no width") {
  const Morphism g({Word::parse("12"), Word::parse("1")});
  CHECK_FALSE(g.uniform_width().has_value());
  CHECK(apply(g, Word::parse("21")).str() == "112");
}
