#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>

#include "kerrep/morphism.hpp"
#include "kerrep/word.hpp"
#include "kerrep/word_index.hpp"

namespace kerrep {

/// Split of a factor of apply(m, t) against the image grid: a tail `s` of
/// one image, whole images of the preimage factor u = t[u_start, u_length),
/// and a head `p` of the following image. |s| and |p| stay below the
/// uniform width.
struct Decomposition {
  Word s;
  std::size_t u_start = 0;
  std::size_t u_length = 0;
  Word p;
};

/// Decomposes the window [position, position + length) of apply(m, preimage).
/// The alignment is known by construction, never inferred from the text.
/// Requires a uniform morphism and a window inside the image word.
Decomposition decompose(const Morphism& m, const Word& preimage,
                        std::size_t position, std::size_t length);

/// s . m(u) . p; equals the decomposed window letter for letter.
Word reconstruct(const Morphism& m, const Word& preimage, const Decomposition& d);

/// For every factor of the given length, the set of letters immediately
/// preceding its occurrences. The occurrence at position 0 has no
/// predecessor and contributes nothing.
std::map<Word, std::set<Letter>> predecessor_sets(const WordIndex& idx,
                                                  std::size_t factor_length = 3);

/// Tests one aligned window: if the image-side window is a kernel window,
/// its preimage window (coordinates divided by width) must be one too.
/// Both sides are evaluated outright. Requires start and length divisible
/// by width.
bool kernel_preimage_check(const WordIndex& image_idx, const WordIndex& preimage_idx,
                           Window aligned, std::size_t width = 3);

/// True iff every length-3 factor occurs at a single position residue mod 3.
bool phase_rigidity_check(const WordIndex& idx);

/// Structural checks bundled for reports. The optional entries need at
/// least one preimage level and stay unset without one.
struct AnalysisChecks {
  bool phase_rigidity = false;
  bool predecessor_uniqueness = false;
  std::optional<bool> kernel_preimage_closure;
  int closure_exhaustive_depth = 0;
  std::uint64_t closure_exhaustive_windows = 0;
  std::uint64_t closure_sampled_windows = 0;
  std::optional<bool> reconstruction;
  std::uint64_t reconstruction_windows = 0;

  bool all_pass() const noexcept;
};

/**
 * Runs the structural checks over an iterate chain, iterates[k] = m^k(cover);
 * the last entry is the word under test.
 *
 * Intrinsic checks (phase rigidity, predecessor uniqueness of factors that
 * occur only at phase 1) run on the last entry. Given at least two entries,
 * kernel-window closure under preimages is checked exhaustively over all
 * aligned windows at a small depth and on a fixed-seed sample at full
 * depth, and decompositions of sampled windows (plus the whole word) are
 * rebuilt and compared letter for letter. Deterministic across runs.
 */
AnalysisChecks analyze_structure(const Morphism& m, std::span<const Word> iterates,
                                 int modulus = 4);

}  // namespace kerrep
