#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kerrep/int_matrix.hpp"
#include "kerrep/word.hpp"

namespace kerrep {

/// Morphism on words, given by one non-empty image per letter 1..m.
class Morphism {
 public:
  Morphism() = default;

  /// images[i] is the image of letter i+1; every image must be non-empty.
  explicit Morphism(std::vector<Word> images);

  /// Parses the text format: one line "i:image" per letter, e.g. "1:121".
  /// Every letter of the (contiguous, 1-based) domain needs a line.
  static Morphism parse(std::string_view text);

  int alphabet_size() const noexcept { return static_cast<int>(images_.size()); }
  bool in_domain(Letter a) const noexcept { return a >= 1 && a <= images_.size(); }
  const Word& image(Letter a) const;

  /// Common image length when all images share one (3 for the width-3
  /// morphisms this library is about). Alignment-dependent operations
  /// require it.
  std::optional<std::size_t> uniform_width() const noexcept { return uniform_width_; }

  /// True when the image of seed starts with seed and has length >= 2, so
  /// iteration from seed converges to a unique infinite fixed point.
  bool prolongable_on(Letter seed) const noexcept;

  std::string str() const;

  bool operator==(const Morphism&) const = default;

 private:
  std::vector<Word> images_;
  std::optional<std::size_t> uniform_width_;
};

/// Image of w: concatenation of the letter images, in order.
Word apply(const Morphism& m, const Word& w);

/// m applied depth times to w.
Word apply_iterated(const Morphism& m, Word w, int depth);

/// Length-n prefix of the fixed point obtained by iterating m on seed.
/// Requires m prolongable on seed.
Word fixed_point_prefix(const Morphism& m, Letter seed, std::size_t n);

/// Entry (i,j) counts occurrences of letter j+1 in the image of letter i+1,
/// so row i sums to the image length of letter i+1.
IntMatrix frequency_matrix(const Morphism& m);

}  // namespace kerrep
