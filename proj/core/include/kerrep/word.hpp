#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kerrep {

/// A letter is a small positive integer; the text format covers 1..9.
using Letter = std::uint8_t;

inline constexpr Letter kMaxLetter = 9;

/// Finite word over {1..m}. Plain value type: all mutation happens while a
/// word is being built, everything downstream treats words as immutable.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<int> letters);

  /// Parses the one-word text format: ASCII digits '1'..'9', no separators.
  static Word parse(std::string_view digits);

  /// count copies of a single letter.
  static Word repeated(Letter a, std::size_t count);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  void reserve(std::size_t n) { letters_.reserve(n); }
  void push_back(Letter a);
  void append(const Word& w);

  /// Overwrites position i; bounds-checked. Used by mutation harnesses.
  void set(std::size_t i, Letter a);

  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const;

  /// Largest letter value present; 0 for the empty word.
  Letter max_letter() const noexcept;

  /// Exact occurrence counts, coordinate a-1 for letter a.
  /// alphabet_size 0 deduces max_letter().
  std::vector<long long> parikh(int alphabet_size = 0) const;

  std::string str() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Word file format: one word per line, ASCII digits, optional trailing
/// newline. These read/write the first line only.
Word read_word_file(const std::string& path);
void write_word_file(const std::string& path, const Word& w);

}  // namespace kerrep
