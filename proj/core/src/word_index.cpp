#include "kerrep/word_index.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace kerrep {

WordIndex::WordIndex(Word text, int modulus, int alphabet_size)
    : text_(std::move(text)), modulus_(modulus) {
  if (modulus < 2) throw std::domain_error("index modulus must be at least 2");
  m_ = alphabet_size > 0 ? alphabet_size : std::max<int>(text_.max_letter(), 1);
  if (text_.max_letter() > m_) {
    throw std::domain_error("alphabet_size smaller than the largest letter present");
  }

  const std::size_t n = text_.size();
  prefix_counts_.assign((n + 1) * static_cast<std::size_t>(m_), 0);

  const unsigned bits = std::bit_width(static_cast<unsigned>(modulus_ - 1));
  const bool packable = bits * static_cast<unsigned>(m_) <= 64;
  if (packable) fingerprints_.assign(n + 1, 0);

  std::uint64_t fp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t* prev = &prefix_counts_[i * m_];
    std::uint32_t* cur = &prefix_counts_[(i + 1) * m_];
    std::copy(prev, prev + m_, cur);
    const int a = text_[i] - 1;
    ++cur[a];
    if (packable) {
      const unsigned shift = bits * static_cast<unsigned>(a);
      const std::uint64_t mask = ((std::uint64_t{1} << bits) - 1) << shift;
      fp = (fp & ~mask) |
           (static_cast<std::uint64_t>(cur[a] % modulus_) << shift);
      fingerprints_[i + 1] = fp;
    }
  }
}

void WordIndex::check_window(Window win) const {
  if (win.start > size() || win.length > size() - win.start) {
    throw std::out_of_range("window outside the indexed text");
  }
}

std::vector<int> WordIndex::parikh_window(Window win) const {
  check_window(win);
  std::vector<int> res(static_cast<std::size_t>(m_));
  const std::uint32_t* lo = &prefix_counts_[win.start * m_];
  const std::uint32_t* hi = &prefix_counts_[(win.start + win.length) * m_];
  for (int a = 0; a < m_; ++a) {
    res[a] = static_cast<int>((hi[a] - lo[a]) % static_cast<std::uint32_t>(modulus_));
  }
  return res;
}

bool WordIndex::is_kernel_window(Window win) const {
  check_window(win);
  if (!fingerprints_.empty()) {
    return fingerprints_[win.start] == fingerprints_[win.start + win.length];
  }
  const std::uint32_t* lo = &prefix_counts_[win.start * m_];
  const std::uint32_t* hi = &prefix_counts_[(win.start + win.length) * m_];
  for (int a = 0; a < m_; ++a) {
    if ((hi[a] - lo[a]) % static_cast<std::uint32_t>(modulus_) != 0) return false;
  }
  return true;
}

std::size_t WordIndex::max_period_extension(std::size_t start, std::size_t q) const {
  if (q == 0) throw std::domain_error("period must be at least 1");
  if (start > size() || q > size() - start) {
    throw std::out_of_range("period window outside the indexed text");
  }
  const auto a = text_.letters();
  std::size_t j = start + q;
  while (j < a.size() && a[j] == a[j - q]) ++j;
  return j - start;
}

std::set<Word> WordIndex::distinct_factors(std::size_t len) const {
  std::set<Word> out;
  if (len > size()) return out;
  for (std::size_t i = 0; i + len <= size(); ++i) out.insert(text_.subword(i, len));
  return out;
}

std::set<std::size_t> WordIndex::occurrence_residues(const Word& t,
                                                     std::size_t phase_modulus) const {
  if (t.empty()) throw std::domain_error("occurrence query needs a non-empty word");
  if (phase_modulus == 0) throw std::domain_error("phase modulus must be at least 1");
  std::set<std::size_t> out;
  const auto text = text_.letters();
  const auto pat = t.letters();
  if (pat.size() > text.size()) return out;
  for (std::size_t i = 0; i + pat.size() <= text.size(); ++i) {
    if (std::equal(pat.begin(), pat.end(), text.begin() + i)) out.insert(i % phase_modulus);
  }
  return out;
}

}  // namespace kerrep
