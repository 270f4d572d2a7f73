#include "kerrep/driver.hpp"

#include <sstream>
#include <stdexcept>

#include "json_support.hpp"
#include "kerrep/reduction.hpp"

namespace kerrep::driver {

namespace {

using nlohmann::json;

constexpr int kJsonIndent = 2;

std::string finish(const json& doc) { return doc.dump(kJsonIndent) + "\n"; }

std::vector<Word> iterate_chain(const Morphism& m, const Word& cover, int depth) {
  std::vector<Word> chain;
  chain.reserve(static_cast<std::size_t>(depth) + 1);
  chain.push_back(cover);
  for (int k = 0; k < depth; ++k) chain.push_back(apply(m, chain.back()));
  return chain;
}

}  // namespace

RunResult run_verify(const VerifyRequest& request) {
  if (request.n_values.empty()) throw std::invalid_argument("no n values requested");
  if (request.depth < 0) throw std::invalid_argument("negative depth");

  const std::vector<Word> chain =
      iterate_chain(request.morphism, request.cover, request.depth);
  const WordIndex idx(chain.back(), dejean::kModulus);

  std::vector<VerificationReport> reports;
  reports.reserve(request.n_values.size());
  for (int n : request.n_values) {
    VerifierConfig cfg;
    cfg.n = n;
    cfg.q_max = request.q_max;
    cfg.r2_threshold = request.r2_threshold;
    cfg.eq1_constant = request.eq1_constant;
    cfg.cover = request.cover;
    cfg.depth = request.depth;
    reports.push_back(scan(idx, cfg));
  }

  std::optional<AnalysisChecks> analysis;
  if (request.with_analysis) analysis = analyze_structure(request.morphism, chain);

  bool pass = true;
  for (const VerificationReport& report : reports) pass = pass && report.passed();
  if (analysis.has_value()) pass = pass && analysis->all_pass();

  json doc;
  if (reports.size() == 1) {
    doc = json_support::report_json(reports.front());
  } else {
    json runs = json::array();
    for (const VerificationReport& report : reports) {
      runs.push_back(json_support::report_json(report));
    }
    doc = json{{"runs", std::move(runs)}};
  }
  doc["coverLabel"] = request.cover_label;
  if (analysis.has_value()) doc["analysis"] = json_support::analysis_json(*analysis);

  return RunResult{pass ? kExitPass : kExitViolation, finish(doc)};
}

RunResult run_generate(const GenerateRequest& request) {
  if (request.length.has_value() == request.depth.has_value()) {
    throw std::invalid_argument("generate needs exactly one of length/depth");
  }
  Word out;
  if (request.length.has_value()) {
    out = fixed_point_prefix(request.morphism, request.seed, *request.length);
  } else {
    out = build_test_word(request.morphism, request.cover, *request.depth);
  }
  return RunResult{kExitPass, out.str() + "\n"};
}

RunResult run_matrix(const MatrixRequest& request) {
  const IntMatrix freq = frequency_matrix(request.morphism);
  const long long det = determinant(freq);
  const std::optional<IntMatrix> inverse = inverse_mod(freq, request.modulus);

  if (inverse.has_value()) {
    // refuse to print an unverified inverse
    const IntMatrix left = mod_reduce(multiply(freq, *inverse), request.modulus);
    const IntMatrix right = mod_reduce(multiply(*inverse, freq), request.modulus);
    if (left != IntMatrix::identity(freq.rows()) || right != IntMatrix::identity(freq.rows())) {
      throw std::logic_error("inverse verification failed");
    }
  }

  if (request.json) {
    auto rows = [](const IntMatrix& m) {
      json grid = json::array();
      for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        grid.push_back(std::move(row));
      }
      return grid;
    };
    json doc{
        {"matrix", rows(freq)},
        {"determinant", det},
        {"modulus", request.modulus},
        {"inverse", inverse.has_value() ? rows(*inverse) : json(nullptr)},
    };
    return RunResult{kExitPass, finish(doc)};
  }

  std::ostringstream out;
  out << "frequency matrix:\n" << to_string(freq);
  out << "determinant: " << det << "\n";
  if (inverse.has_value()) {
    out << "inverse modulo " << request.modulus << ":\n" << to_string(*inverse);
  } else {
    out << "no inverse modulo " << request.modulus << "\n";
  }
  return RunResult{kExitPass, out.str()};
}

RunResult run_factors(const FactorsRequest& request) {
  const WordIndex idx(request.text, dejean::kModulus);
  const std::set<Word> factors = idx.distinct_factors(request.factor_length);

  if (request.json) {
    json list = json::array();
    for (const Word& f : factors) list.push_back(f.str());
    json doc{
        {"length", request.factor_length},
        {"count", factors.size()},
        {"factors", std::move(list)},
    };
    return RunResult{kExitPass, finish(doc)};
  }

  std::string out;
  for (const Word& f : factors) {
    out += f.str();
    out += '\n';
  }
  return RunResult{kExitPass, out};
}

RunResult run_analyze(const AnalyzeRequest& request) {
  if (request.depth < 0) throw std::invalid_argument("negative depth");
  const std::vector<Word> chain =
      iterate_chain(request.morphism, request.cover, request.depth);
  const AnalysisChecks checks = analyze_structure(request.morphism, chain);

  json doc{
      {"coverLabel", request.cover_label},
      {"cover", request.cover.str()},
      {"depth", request.depth},
      {"textLength", chain.back().size()},
      {"analysis", json_support::analysis_json(checks)},
  };
  return RunResult{checks.all_pass() ? kExitPass : kExitViolation, finish(doc)};
}

}  // namespace kerrep::driver
