// kerrep -- generate morphic words, scan them for kernel repetitions, and
// reproduce the finite search behind the repetition-threshold bound for
// 30..32-letter alphabets. Exit codes: 0 pass, 1 violation or failed check,
// 2 usage or input error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "kerrep/dejean.hpp"
#include "kerrep/driver.hpp"

namespace {

using namespace kerrep;

Word resolve_cover(const std::string& spec) {
  if (spec == "u0") return dejean::cover_u0();
  if (spec == "u1") return dejean::cover_u1();
  return read_word_file(spec);
}

Morphism resolve_morphism(const std::string& path) {
  if (path.empty()) return dejean::morphism();
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open morphism file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return Morphism::parse(text);
}

int emit(const driver::RunResult& result, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << result.output;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel-repetition verifier for morphic words"};
  app.require_subcommand(1);

  std::string cover_arg = "u1";
  std::string morphism_path;
  std::string out_path;
  bool as_json = false;

  auto* generate = app.add_subcommand(
      "generate", "write a fixed-point prefix or an iterated cover word");
  std::optional<std::size_t> gen_length;
  std::optional<int> gen_depth;
  unsigned gen_seed = 1;
  generate->add_option("--length", gen_length, "prefix length of the fixed point");
  generate->add_option("--depth", gen_depth, "apply the morphism this many times to the cover");
  generate->add_option("--cover", cover_arg, "cover word: u0, u1 or a word file");
  generate->add_option("--seed", gen_seed, "seed letter for the fixed point")
      ->check(CLI::Range(1u, 9u));
  generate->add_option("--morphism", morphism_path, "morphism file (lines i:image)");
  generate->add_option("--out", out_path, "output file (default stdout)");

  auto* matrix = app.add_subcommand(
      "matrix", "print the frequency matrix and its modular inverse");
  long long mat_mod = dejean::kModulus;
  matrix->add_option("--mod", mat_mod, "modulus")->check(CLI::PositiveNumber);
  matrix->add_option("--morphism", morphism_path, "morphism file (lines i:image)");
  matrix->add_flag("--json", as_json, "emit JSON instead of plain text");
  matrix->add_option("--out", out_path, "output file (default stdout)");

  auto* factors = app.add_subcommand(
      "factors", "list the distinct factors of a given length");
  std::size_t factor_length = 2;
  std::optional<std::size_t> factors_prefix;
  std::optional<int> factors_depth;
  factors->add_option("--length", factor_length, "factor length")->required();
  factors->add_option("--prefix", factors_prefix,
                      "take this prefix of the fixed point (default 10000)");
  factors->add_option("--cover", cover_arg, "cover word: u0, u1 or a word file");
  factors->add_option("--depth", factors_depth,
                      "iterate the morphism on the cover instead of a prefix");
  factors->add_option("--morphism", morphism_path, "morphism file (lines i:image)");
  factors->add_flag("--json", as_json, "emit JSON instead of one factor per line");
  factors->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand(
      "verify", "full search: build the test word, scan it, run structural checks");
  std::string n_arg = "32";
  std::size_t q_max = dejean::kQMax;
  int verify_depth = dejean::kDepth;
  bool no_analysis = false;
  verify->add_option("--n", n_arg, "alphabet size: 30, 31, 32 or all")
      ->check(CLI::IsMember({"30", "31", "32", "all"}));
  verify->add_option("--qmax", q_max, "largest kernel period of the direct scan")
      ->check(CLI::PositiveNumber);
  verify->add_option("--cover", cover_arg, "cover word: u0, u1 or a word file");
  verify->add_option("--depth", verify_depth, "morphism iterations applied to the cover")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--no-analysis", no_analysis, "skip the structural checks");
  verify->add_option("--out", out_path, "report file (default stdout)");

  auto* analyze = app.add_subcommand(
      "analyze", "structural checks only (phase rigidity, predecessors, preimages)");
  int analyze_depth = dejean::kDepth;
  analyze->add_option("--cover", cover_arg, "cover word: u0, u1 or a word file");
  analyze->add_option("--depth", analyze_depth, "morphism iterations applied to the cover")
      ->check(CLI::NonNegativeNumber);
  analyze->add_option("--out", out_path, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return driver::kExitUsage;
  }

  try {
    if (*generate) {
      if (gen_length.has_value() && generate->count("--cover") > 0) {
        throw std::invalid_argument("--cover applies to --depth, not --length");
      }
      driver::GenerateRequest request;
      request.length = gen_length;
      request.depth = gen_depth;
      request.seed = static_cast<Letter>(gen_seed);
      request.morphism = resolve_morphism(morphism_path);
      if (gen_depth.has_value()) request.cover = resolve_cover(cover_arg);
      return emit(driver::run_generate(request), out_path);
    }

    if (*matrix) {
      driver::MatrixRequest request;
      request.morphism = resolve_morphism(morphism_path);
      request.modulus = mat_mod;
      request.json = as_json;
      return emit(driver::run_matrix(request), out_path);
    }

    if (*factors) {
      const bool cover_given = factors->count("--cover") > 0 || factors_depth.has_value();
      if (factors_prefix.has_value() && cover_given) {
        throw std::invalid_argument("--prefix conflicts with --cover/--depth");
      }
      driver::FactorsRequest request;
      const Morphism m = resolve_morphism(morphism_path);
      if (cover_given) {
        request.text =
            build_test_word(m, resolve_cover(cover_arg), factors_depth.value_or(0));
      } else {
        request.text = fixed_point_prefix(m, 1, factors_prefix.value_or(10000));
      }
      request.factor_length = factor_length;
      request.json = as_json;
      return emit(driver::run_factors(request), out_path);
    }

    if (*verify) {
      driver::VerifyRequest request;
      if (n_arg == "all") {
        request.n_values = {30, 31, 32};
      } else {
        request.n_values = {std::stoi(n_arg)};
      }
      request.q_max = q_max;
      request.cover = resolve_cover(cover_arg);
      request.cover_label = cover_arg;
      request.depth = verify_depth;
      request.with_analysis = !no_analysis;
      return emit(driver::run_verify(request), out_path);
    }

    if (*analyze) {
      driver::AnalyzeRequest request;
      request.cover = resolve_cover(cover_arg);
      request.cover_label = cover_arg;
      request.depth = analyze_depth;
      return emit(driver::run_analyze(request), out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "kerrep: " << e.what() << "\n";
    return driver::kExitUsage;
  }
  return driver::kExitUsage;
}
