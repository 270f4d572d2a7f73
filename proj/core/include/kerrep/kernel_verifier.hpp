#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kerrep/morphism.hpp"
#include "kerrep/rational.hpp"
#include "kerrep/word.hpp"
#include "kerrep/word_index.hpp"

namespace kerrep {

enum class Rule { R1, R2, EQ1 };

std::string_view rule_name(Rule rule);

/// One offending window: the right-maximal factor starting at `start` with
/// kernel period `q` runs for `length` letters and meets the rule's
/// inequality. The length-q prefix of that window is always a kernel window.
struct Violation {
  std::size_t start = 0;
  std::size_t q = 0;
  std::size_t length = 0;
  Rule rule = Rule::R1;

  bool operator==(const Violation&) const = default;
};

/// Canonical report order: (start, q, rule).
bool violation_order(const Violation& a, const Violation& b) noexcept;

struct VerifierConfig {
  int n = 32;
  std::size_t q_max = 1966;
  Rational r2_threshold = make_rational(35, 34);
  Rational eq1_constant = make_rational(9, 2 * 1967);
  Word cover;  // seed of the test word; dejean::standard_config() fills it
  int depth = 7;
};

struct DerivedBounds {
  long long length_bound = 0;  // longest factor the finite search must cover
  int depth = 0;               // preimage steps from that length down to 2
  std::size_t test_word_length = 0;
};

struct VerificationReport {
  VerifierConfig config;
  int modulus = 4;
  std::size_t text_length = 0;
  std::uint64_t kernel_window_count = 0;
  std::vector<Violation> violations;  // sorted by violation_order
  DerivedBounds derived_bounds;

  bool passed() const noexcept { return violations.empty(); }
  std::size_t count(Rule rule) const noexcept;
};

/// Direct-definition test: v has period q, the length-q prefix of v has all
/// letter counts divisible by `modulus`, and (n-1)(|v|+1) >= nq - 3.
/// Exact integer arithmetic throughout. Requires 1 <= q <= |v|.
bool is_kernel_repetition(const Word& v, std::size_t q, int n, int modulus = 4);

/**
 * Scans the indexed text for kernel repetitions.
 *
 * Candidate kernel periods are the multiples of the index modulus (a kernel
 * prefix forces its length to be divisible by it). For every start position
 * whose length-q window is a kernel window, the right-maximal period-q
 * extension L is computed once; both inequalities are monotone in L, so any
 * offending factor is witnessed by the right-maximal one at the same
 * (start, q). For q <= q_max the scan records R1 when (n-1)(L+1) >= nq - 3
 * and R2 when L/q >= r2_threshold; for q > q_max it records EQ1 when
 * L/q >= r2_threshold + eq1_constant. Extensions truncated by the end of
 * the text are scanned as-is.
 *
 * The period loop is partitioned across threads (KERREP_THREADS overrides
 * the hardware default); the report is identical for any partitioning.
 */
VerificationReport scan(const WordIndex& idx, const VerifierConfig& cfg);

/// ceil((n q_max - 3)/(n - 1) - 1): every shortest counterexample with
/// kernel period <= q_max fits in this many letters.
long long search_length_bound(int n, long long q_max);

/// Least s with g^s(bound) < 3 for g(r) = floor((r+4)/3): preimage steps
/// that shrink a factor of that length to a length-2 window.
int preimage_depth(long long bound);

/// cover mapped through m `depth` times.
Word build_test_word(const Morphism& m, const Word& cover, int depth);

/// 35/34 + (3/1966) * sum_{j=0}^{s-1} 3^{-j}, exactly.
Rational kernel_ratio_bound(int s);

/// Supremum of kernel_ratio_bound over all s: 35/34 + 9/(2*1966).
Rational kernel_ratio_bound_limit();

/// Report as a JSON document; rationals as "p/q", positions 0-based,
/// violations in canonical order. Byte-stable for identical inputs.
std::string to_json_string(const VerificationReport& report, int indent = 2);

}  // namespace kerrep
