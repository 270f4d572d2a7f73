#include "kerrep/word.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace kerrep {

namespace {

Letter checked(int value) {
  if (value < 1 || value > kMaxLetter) {
    throw std::domain_error("letter out of range 1..9: " + std::to_string(value));
  }
  return static_cast<Letter>(value);
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter a : letters_) checked(a);
}

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int a : letters) letters_.push_back(checked(a));
}

Word Word::parse(std::string_view digits) {
  Word w;
  w.letters_.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9') {
      throw std::invalid_argument(std::string("invalid letter character '") + c +
                                  "' in word text");
    }
    w.letters_.push_back(static_cast<Letter>(c - '0'));
  }
  return w;
}

Word Word::repeated(Letter a, std::size_t count) {
  checked(a);
  Word w;
  w.letters_.assign(count, a);
  return w;
}

void Word::push_back(Letter a) { letters_.push_back(checked(a)); }

void Word::append(const Word& w) {
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

void Word::set(std::size_t i, Letter a) {
  if (i >= letters_.size()) throw std::out_of_range("Word::set past the end");
  letters_[i] = checked(a);
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) {
    throw std::out_of_range("Word::subword outside the word");
  }
  Word w;
  w.letters_.assign(letters_.begin() + pos, letters_.begin() + pos + len);
  return w;
}

Word Word::prefix(std::size_t len) const { return subword(0, std::min(len, size())); }

Letter Word::max_letter() const noexcept {
  Letter m = 0;
  for (Letter a : letters_) m = std::max(m, a);
  return m;
}

std::vector<long long> Word::parikh(int alphabet_size) const {
  const int m = alphabet_size > 0 ? alphabet_size : max_letter();
  std::vector<long long> counts(static_cast<std::size_t>(m), 0);
  for (Letter a : letters_) {
    if (a <= m) ++counts[a - 1];
  }
  return counts;
}

std::string Word::str() const {
  std::string s;
  s.reserve(size());
  for (Letter a : letters_) s.push_back(static_cast<char>('0' + a));
  return s;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

Word read_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open word file: " + path);
  std::string line;
  std::getline(in, line);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  return Word::parse(line);
}

void write_word_file(const std::string& path, const Word& w) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open word file for writing: " + path);
  out << w.str() << '\n';
}

}  // namespace kerrep
