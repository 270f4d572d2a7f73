#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kerrep/dejean.hpp"
#include "kerrep/reduction.hpp"
#include "oracles.hpp"

using namespace kerrep;

namespace {
const Morphism& f() { return dejean::morphism(); }
}  // namespace

TEST_CASE("decompositions against the image grid") {
  const Word pre = dejean::fixed_point(3);  // image = first 9 letters of the fixed point

  SUBCASE("whole images only") {
    const Decomposition d = decompose(f(), pre, 0, 9);
    CHECK(d.s.empty());
    CHECK(d.u_start == 0);
    CHECK(d.u_length == 3);
    CHECK(d.p.empty());
  }
  SUBCASE("tail of the first image") {
    const Decomposition d = decompose(f(), pre, 1, 8);
    CHECK(d.s.str() == "21");
    CHECK(d.u_start == 1);
    CHECK(d.u_length == 2);
    CHECK(d.p.empty());
  }
  SUBCASE("fragment inside one image") {
    const Decomposition d = decompose(f(), pre, 2, 1);
    CHECK(d.s.str() == "1");
    CHECK(d.u_length == 0);
    CHECK(d.p.empty());
  }
  SUBCASE("head of an image") {
    const Decomposition d = decompose(f(), pre, 3, 2);
    CHECK(d.s.empty());
    CHECK(d.u_length == 0);
    CHECK(d.p.str() == "12");
  }
  SUBCASE("empty window") {
    const Decomposition d = decompose(f(), pre, 4, 0);
    CHECK(d.s.empty());
    CHECK(d.u_length == 0);
    CHECK(d.p.empty());
  }
}

TEST_CASE("decompose validates its inputs") {
  const Word pre = dejean::fixed_point(3);
  CHECK_THROWS_AS(decompose(f(), pre, 8, 2), std::out_of_range);
  const Morphism lopsided({Word::parse("12"), Word::parse("1")});
  CHECK_THROWS_AS(decompose(lopsided, Word::parse("12"), 0, 1), std::domain_error);
}

TEST_CASE("every decomposition rebuilds its window exactly") {
  const Word pre2 = build_test_word(f(), dejean::cover_u1(), 1);
  const Word img2 = apply(f(), pre2);
  for (std::size_t pos = 0; pos <= img2.size(); ++pos) {
    for (std::size_t len = 0; pos + len <= img2.size(); ++len) {
      const Decomposition d = decompose(f(), pre2, pos, len);
      CHECK(d.s.size() < 3);
      CHECK(d.p.size() < 3);
      CHECK(reconstruct(f(), pre2, d) == img2.subword(pos, len));
    }
  }

  // sampled windows of a deeper iterate
  const Word pre5 = build_test_word(f(), dejean::cover_u1(), 5);
  const Word img5 = apply(f(), pre5);
  std::mt19937 rng(8);
  std::uniform_int_distribution<std::size_t> pick(0, img5.size());
  for (int round = 0; round < 500; ++round) {
    const std::size_t pos = pick(rng);
    std::uniform_int_distribution<std::size_t> pick_len(0, img5.size() - pos);
    const std::size_t len = pick_len(rng);
    const Decomposition d = decompose(f(), pre5, pos, len);
    CHECK(reconstruct(f(), pre5, d) == img5.subword(pos, len));
  }
}

TEST_CASE("predecessor sets over the fixed point") {
  const WordIndex idx(dejean::fixed_point(10000), 4);
  const auto preds = predecessor_sets(idx);
  CHECK(preds.size() == 13);

  // factors pinned to phase 1 sit right after an image boundary, and every
  // image starts with 1
  for (const auto& [factor, preceding] : preds) {
    if (idx.occurrence_residues(factor, 3) == std::set<std::size_t>{1}) {
      CHECK(preceding == std::set<Letter>{1});
    }
  }

  // a whole image can follow several different images
  CHECK(preds.at(Word::parse("121")).size() >= 2);
}

TEST_CASE("predecessor sets skip the occurrence at position 0") {
  const WordIndex idx(Word::parse("123123"), 4);
  const auto preds = predecessor_sets(idx);
  CHECK(preds.at(Word::parse("123")) == std::set<Letter>{3});
  CHECK(preds.at(Word::parse("231")) == std::set<Letter>{1});
}

TEST_CASE("kernel windows pull back through the morphism") {
  const Word pre = build_test_word(f(), dejean::cover_u1(), 3);
  const Word img = apply(f(), pre);
  const WordIndex pre_idx(pre, 4);
  const WordIndex img_idx(img, 4);

  CHECK(kernel_preimage_check(img_idx, pre_idx, {0, 0}));
  CHECK_THROWS_AS(kernel_preimage_check(img_idx, pre_idx, {1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(kernel_preimage_check(img_idx, pre_idx, {0, 4}), std::invalid_argument);

  for (std::size_t start = 0; start <= img.size(); start += 3) {
    for (std::size_t len = 0; start + len <= img.size(); len += 3) {
      CHECK(kernel_preimage_check(img_idx, pre_idx, {start, len}));
    }
  }
}

TEST_CASE("phase rigidity") {
  CHECK(phase_rigidity_check(WordIndex(dejean::fixed_point(10000), 4)));
  CHECK(phase_rigidity_check(WordIndex(Word::parse("1234"), 4)));  // no repeated factor
  CHECK(phase_rigidity_check(WordIndex(Word::parse("12"), 4)));    // too short to matter
  // "121" occurs at positions 0 and 2
  CHECK_FALSE(phase_rigidity_check(WordIndex(Word::parse("12121"), 4)));
}

TEST_CASE("structural checks pass on an honest iterate chain") {
  std::vector<Word> chain{dejean::cover_u1()};
  for (int k = 0; k < 5; ++k) chain.push_back(apply(f(), chain.back()));

  const AnalysisChecks checks = analyze_structure(f(), chain);
  CHECK(checks.phase_rigidity);
  CHECK(checks.predecessor_uniqueness);
  REQUIRE(checks.kernel_preimage_closure.has_value());
  CHECK(*checks.kernel_preimage_closure);
  CHECK(checks.closure_exhaustive_depth == 4);
  CHECK(checks.closure_exhaustive_windows == 106030);
  CHECK(checks.closure_sampled_windows == 10000);
  REQUIRE(checks.reconstruction.has_value());
  CHECK(*checks.reconstruction);
  CHECK(checks.all_pass());
}

TEST_CASE("structural checks notice a corrupted word") {
  std::vector<Word> chain{dejean::cover_u1()};
  for (int k = 0; k < 4; ++k) chain.push_back(apply(f(), chain.back()));

  Word& text = chain.back();
  const std::size_t flip = text.size() / 2;
  text.set(flip, text[flip] == 1 ? 2 : 1);

  const AnalysisChecks checks = analyze_structure(f(), chain);
  REQUIRE(checks.reconstruction.has_value());
  CHECK_FALSE(*checks.reconstruction);  // whole-word rebuild sees the flip
  CHECK_FALSE(checks.all_pass());
}

TEST_CASE("structural checks at full search depth") {
  std::vector<Word> chain{dejean::cover_u1()};
  for (int k = 0; k < 7; ++k) chain.push_back(apply(f(), chain.back()));
  REQUIRE(chain.back().size() == 37179);

  const AnalysisChecks checks = analyze_structure(f(), chain);
  CHECK(checks.all_pass());
  CHECK(checks.closure_sampled_windows == 10000);  // sampled on the depth-7 iterate
  CHECK(checks.closure_exhaustive_depth == 4);
}

TEST_CASE("depth-zero chains run the intrinsic checks only") {
  const std::vector<Word> chain{build_test_word(f(), dejean::cover_u1(), 3)};
  const AnalysisChecks checks = analyze_structure(f(), chain);
  CHECK(checks.phase_rigidity);
  CHECK(checks.predecessor_uniqueness);
  CHECK_FALSE(checks.kernel_preimage_closure.has_value());
  CHECK_FALSE(checks.reconstruction.has_value());
  CHECK(checks.all_pass());
}
