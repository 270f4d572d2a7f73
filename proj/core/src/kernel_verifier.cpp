#include "kerrep/kernel_verifier.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "json_support.hpp"

namespace kerrep {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::EQ1: return "EQ1";
  }
  return "?";
}

bool violation_order(const Violation& a, const Violation& b) noexcept {
  if (a.start != b.start) return a.start < b.start;
  if (a.q != b.q) return a.q < b.q;
  return static_cast<int>(a.rule) < static_cast<int>(b.rule);
}

std::size_t VerificationReport::count(Rule rule) const noexcept {
  std::size_t c = 0;
  for (const Violation& v : violations) c += v.rule == rule;
  return c;
}

bool is_kernel_repetition(const Word& v, std::size_t q, int n, int modulus) {
  if (q < 1 || q > v.size()) throw std::domain_error("kernel period outside 1..|v|");
  if (modulus < 2) throw std::domain_error("modulus must be at least 2");
  const auto a = v.letters();

  // (n-1)(|v|+1) >= nq - 3
  const long long lhs = static_cast<long long>(n - 1) * (static_cast<long long>(v.size()) + 1);
  const long long rhs = static_cast<long long>(n) * static_cast<long long>(q) - 3;
  if (lhs < rhs) return false;

  // length-q prefix lies in the kernel
  std::array<long long, kMaxLetter + 1> counts{};
  for (std::size_t i = 0; i < q; ++i) ++counts[a[i]];
  for (long long c : counts) {
    if (c % modulus != 0) return false;
  }

  // v has period q
  for (std::size_t i = q; i < a.size(); ++i) {
    if (a[i] != a[i - q]) return false;
  }
  return true;
}

namespace {

int scan_thread_count() {
  if (const char* env = std::getenv("KERREP_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 256) return static_cast<int>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(std::min(hc, 16u));
}

// Smallest admissible right-maximal length for a ratio rule at period q:
// least L with L/q >= threshold, clamped to [q, text_length + 1].
// text_length + 1 marks "unreachable".
std::size_t min_length_for_ratio(const Rational& threshold, std::size_t q,
                                 std::size_t text_length) {
  BigInt l = threshold.numerator() * q + threshold.denominator() - 1;
  l /= threshold.denominator();
  if (l < q) l = q;
  if (l > text_length) return text_length + 1;
  return l.convert_to<std::size_t>();
}

// Least L with (n-1)(L+1) >= nq - 3, same clamping.
std::size_t min_length_for_r1(int n, std::size_t q, std::size_t text_length) {
  const long long num = static_cast<long long>(n) * static_cast<long long>(q) - 3;
  const long long den = n - 1;
  long long l = q;
  if (num > 0) {
    l = (num + den - 1) / den - 1;  // ceil(num/den) - 1
    l = std::max<long long>(l, static_cast<long long>(q));
  }
  if (l > static_cast<long long>(text_length)) return text_length + 1;
  return static_cast<std::size_t>(l);
}

}  // namespace

VerificationReport scan(const WordIndex& idx, const VerifierConfig& cfg) {
  if (cfg.n < 2) throw std::domain_error("scan needs n >= 2");
  if (cfg.r2_threshold <= Rational(1) || cfg.r2_threshold + cfg.eq1_constant <= Rational(1)) {
    throw std::domain_error("ratio thresholds must exceed 1");
  }

  VerificationReport report;
  report.config = cfg;
  report.modulus = idx.modulus();
  report.text_length = idx.size();
  report.derived_bounds.length_bound =
      search_length_bound(cfg.n, static_cast<long long>(cfg.q_max));
  report.derived_bounds.depth = preimage_depth(report.derived_bounds.length_bound);
  report.derived_bounds.test_word_length = idx.size();

  const std::size_t n_text = idx.size();
  const std::size_t mu = static_cast<std::size_t>(idx.modulus());
  if (n_text < mu) return report;

  std::vector<std::size_t> periods;
  for (std::size_t q = mu; q <= n_text; q += mu) periods.push_back(q);

  const Rational eq1_threshold = cfg.r2_threshold + cfg.eq1_constant;
  const auto fp = idx.fingerprints();
  const auto text = idx.text().letters();

  auto scan_periods = [&](std::size_t first, std::size_t stride,
                          std::vector<Violation>& found, std::uint64_t& windows) {
    for (std::size_t k = first; k < periods.size(); k += stride) {
      const std::size_t q = periods[k];
      const bool in_search_range = q <= cfg.q_max;
      const std::size_t lmin_r1 =
          in_search_range ? min_length_for_r1(cfg.n, q, n_text) : 0;
      const std::size_t lmin_r2 =
          in_search_range ? min_length_for_ratio(cfg.r2_threshold, q, n_text) : 0;
      const std::size_t lmin_eq1 =
          in_search_range ? 0 : min_length_for_ratio(eq1_threshold, q, n_text);
      for (std::size_t i = 0; i + q <= n_text; ++i) {
        const bool kernel =
            fp.empty() ? idx.is_kernel_window({i, q}) : fp[i] == fp[i + q];
        if (!kernel) continue;
        ++windows;
        std::size_t j = i + q;
        while (j < n_text && text[j] == text[j - q]) ++j;
        const std::size_t len = j - i;
        if (in_search_range) {
          if (len >= lmin_r1) found.push_back({i, q, len, Rule::R1});
          if (len >= lmin_r2) found.push_back({i, q, len, Rule::R2});
        } else if (len >= lmin_eq1) {
          found.push_back({i, q, len, Rule::EQ1});
        }
      }
    }
  };

  const int threads =
      std::min<int>(scan_thread_count(), static_cast<int>(periods.size()));
  if (threads <= 1) {
    scan_periods(0, 1, report.violations, report.kernel_window_count);
  } else {
    std::vector<std::vector<Violation>> found(threads);
    std::vector<std::uint64_t> windows(threads, 0);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] { scan_periods(t, threads, found[t], windows[t]); });
    }
    for (std::thread& t : pool) t.join();
    for (int t = 0; t < threads; ++t) {
      report.kernel_window_count += windows[t];
      report.violations.insert(report.violations.end(), found[t].begin(), found[t].end());
    }
  }
  std::sort(report.violations.begin(), report.violations.end(), violation_order);
  return report;
}

long long search_length_bound(int n, long long q_max) {
  if (n < 2 || q_max < 1) throw std::domain_error("search_length_bound needs n >= 2, q_max >= 1");
  // ceil((n q_max - 3)/(n-1) - 1) = ceil((n q_max - n - 2)/(n - 1))
  const long long num = n * q_max - n - 2;
  const long long den = n - 1;
  if (num >= 0) return (num + den - 1) / den;
  return -((-num) / den);
}

int preimage_depth(long long bound) {
  if (bound < 0) throw std::domain_error("preimage_depth needs a non-negative bound");
  int steps = 0;
  while (bound >= 3) {
    bound = (bound + 4) / 3;
    ++steps;
  }
  return steps;
}

Word build_test_word(const Morphism& m, const Word& cover, int depth) {
  return apply_iterated(m, cover, depth);
}

Rational kernel_ratio_bound(int s) {
  if (s < 0) throw std::domain_error("kernel_ratio_bound needs s >= 0");
  // 3/1966 * sum_{j<s} 3^-j = 3/1966 * (3/2)(1 - 3^-s) = 9(3^s - 1) / (3932 * 3^s)
  const BigInt pow3 = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(s));
  return make_rational(35, 34) + Rational(BigInt(9) * (pow3 - 1), BigInt(3932) * pow3);
}

Rational kernel_ratio_bound_limit() { return make_rational(35, 34) + make_rational(9, 3932); }

std::string to_json_string(const VerificationReport& report, int indent) {
  return json_support::report_json(report).dump(indent);
}

}  // namespace kerrep
