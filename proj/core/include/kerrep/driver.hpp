#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kerrep/dejean.hpp"
#include "kerrep/kernel_verifier.hpp"
#include "kerrep/morphism.hpp"
#include "kerrep/word.hpp"

/// In-process entry points behind the CLI subcommands, so the exact
/// documents and exit codes the tool produces are testable without
/// spawning a process.
namespace kerrep::driver {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct RunResult {
  int exit_code = kExitPass;
  std::string output;  // finished document, trailing newline included
};

struct VerifyRequest {
  std::vector<int> n_values{32};
  std::size_t q_max = dejean::kQMax;
  Rational r2_threshold = make_rational(35, 34);
  Rational eq1_constant = make_rational(9, 2 * 1967);
  Morphism morphism = dejean::morphism();
  Word cover = dejean::cover_u1();
  std::string cover_label = "u1";
  int depth = dejean::kDepth;
  bool with_analysis = true;
};

/// Builds the test word, scans it once per requested n, runs the
/// structural checks, and emits one deterministic JSON document.
/// Exit code 0 iff every scan is clean and every check passes.
RunResult run_verify(const VerifyRequest& request);

struct GenerateRequest {
  std::optional<std::size_t> length;  // fixed-point prefix of this length
  std::optional<int> depth;           // or: morphism iterated on cover
  Word cover = dejean::cover_u1();
  Letter seed = 1;
  Morphism morphism = dejean::morphism();
};

/// Exactly one of length/depth must be set.
RunResult run_generate(const GenerateRequest& request);

struct MatrixRequest {
  Morphism morphism = dejean::morphism();
  long long modulus = dejean::kModulus;
  bool json = false;
};

/// Frequency matrix, its determinant, and its inverse modulo the modulus
/// (verified two-sided before printing).
RunResult run_matrix(const MatrixRequest& request);

struct FactorsRequest {
  Word text;  // resolved by the caller (cover iterate or fixed-point prefix)
  std::size_t factor_length = 2;
  bool json = false;
};

/// Distinct factors of the given length, sorted, one per line (or a JSON array).
RunResult run_factors(const FactorsRequest& request);

struct AnalyzeRequest {
  Morphism morphism = dejean::morphism();
  Word cover = dejean::cover_u1();
  std::string cover_label = "u1";
  int depth = dejean::kDepth;
};

/// Structural checks only; exit code 0 iff all of them pass.
RunResult run_analyze(const AnalyzeRequest& request);

}  // namespace kerrep::driver
