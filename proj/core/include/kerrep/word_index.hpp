#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "kerrep/word.hpp"

namespace kerrep {

/// Half-open window [start, start + length) of an indexed text.
struct Window {
  std::size_t start = 0;
  std::size_t length = 0;
};

/**
 * Immutable index over a finite word.
 *
 * Stores exact prefix letter counts and, when they fit, one packed
 * "fingerprint" per prefix holding every letter count reduced modulo mu.
 * Two positions with equal fingerprints delimit a window whose letter
 * counts are all divisible by mu, so the kernel-window test is a single
 * integer compare. Queries are read-only and safe to run concurrently.
 */
class WordIndex {
 public:
  /// alphabet_size 0 deduces the largest letter present. Requires modulus >= 2.
  explicit WordIndex(Word text, int modulus = 4, int alphabet_size = 0);

  const Word& text() const noexcept { return text_; }
  std::size_t size() const noexcept { return text_.size(); }
  int modulus() const noexcept { return modulus_; }
  int alphabet_size() const noexcept { return m_; }

  /// Letter counts of the window, each reduced modulo the index modulus.
  /// Computed as a prefix-table difference.
  std::vector<int> parikh_window(Window win) const;

  /// True iff every letter count of the window is divisible by the modulus.
  bool is_kernel_window(Window win) const;

  /// Largest L with start + L <= size() such that text[start .. start+L)
  /// has period q. Always >= q; requires q >= 1 and start + q <= size().
  std::size_t max_period_extension(std::size_t start, std::size_t q) const;

  /// All distinct factors of the given length; empty set if none fit.
  std::set<Word> distinct_factors(std::size_t len) const;

  /// { p mod phase_modulus : t occurs at position p }. Requires |t| >= 1.
  std::set<std::size_t> occurrence_residues(const Word& t, std::size_t phase_modulus) const;

  /// Per-prefix packed residue vectors, or empty when the residues do not
  /// fit 64 bits. fingerprints()[i] == fingerprints()[j] iff the window
  /// between i and j is a kernel window.
  std::span<const std::uint64_t> fingerprints() const noexcept { return fingerprints_; }

 private:
  void check_window(Window win) const;

  Word text_;
  int modulus_ = 0;
  int m_ = 0;
  std::vector<std::uint32_t> prefix_counts_;  // (size+1) x m, flattened
  std::vector<std::uint64_t> fingerprints_;   // size+1 entries when available
};

}  // namespace kerrep
