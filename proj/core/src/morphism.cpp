#include "kerrep/morphism.hpp"

#include <sstream>
#include <stdexcept>

namespace kerrep {

Morphism::Morphism(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.size() > kMaxLetter) {
    throw std::invalid_argument("morphism domain larger than the 9-letter text format");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].empty()) {
      throw std::invalid_argument("empty image for letter " + std::to_string(i + 1));
    }
  }
  if (!images_.empty()) {
    const std::size_t w = images_.front().size();
    bool uniform = true;
    for (const Word& img : images_) uniform = uniform && img.size() == w;
    if (uniform) uniform_width_ = w;
  }
}

Morphism Morphism::parse(std::string_view text) {
  std::vector<Word> images;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("morphism line without ':': " + line);
    }
    const Word lhs = Word::parse(line.substr(0, colon));
    if (lhs.size() != 1) {
      throw std::invalid_argument("morphism line needs a single source letter: " + line);
    }
    const std::size_t letter = lhs[0];
    if (images.size() < letter) images.resize(letter);
    if (!images[letter - 1].empty()) {
      throw std::invalid_argument("duplicate image for letter " + std::to_string(letter));
    }
    images[letter - 1] = Word::parse(line.substr(colon + 1));
  }
  return Morphism(std::move(images));
}

const Word& Morphism::image(Letter a) const {
  if (!in_domain(a)) {
    throw std::domain_error("letter " + std::to_string(a) + " outside the morphism domain");
  }
  return images_[a - 1];
}

bool Morphism::prolongable_on(Letter seed) const noexcept {
  if (!in_domain(seed)) return false;
  const Word& img = images_[seed - 1];
  return img.size() >= 2 && img[0] == seed;
}

std::string Morphism::str() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out += static_cast<char>('1' + i);
    out += ':';
    out += images_[i].str();
    out += '\n';
  }
  return out;
}

Word apply(const Morphism& m, const Word& w) {
  Word out;
  if (auto width = m.uniform_width()) out.reserve(w.size() * *width);
  for (Letter a : w) out.append(m.image(a));
  return out;
}

Word apply_iterated(const Morphism& m, Word w, int depth) {
  if (depth < 0) throw std::domain_error("negative iteration depth");
  for (int k = 0; k < depth; ++k) w = apply(m, w);
  return w;
}

Word fixed_point_prefix(const Morphism& m, Letter seed, std::size_t n) {
  if (!m.prolongable_on(seed)) {
    throw std::domain_error("morphism is not prolongable on letter " + std::to_string(seed));
  }
  Word cur{Word::repeated(seed, 1)};
  while (cur.size() < n) {
    // Each pass maps the current prefix forward and truncates; prefixes of
    // the fixed point stay prefixes, and the length grows every pass.
    Word next;
    next.reserve(n);
    for (Letter a : cur) {
      const Word& img = m.image(a);
      if (next.size() + img.size() <= n) {
        next.append(img);
      } else {
        for (std::size_t k = 0; next.size() < n; ++k) next.push_back(img[k]);
      }
      if (next.size() >= n) break;
    }
    cur = std::move(next);
  }
  return cur.prefix(n);
}

IntMatrix frequency_matrix(const Morphism& m) {
  const int s = m.alphabet_size();
  IntMatrix freq(s, s);
  for (int i = 1; i <= s; ++i) {
    for (Letter a : m.image(static_cast<Letter>(i))) {
      if (a > s) {
        throw std::domain_error("image letter " + std::to_string(a) +
                                " outside the morphism domain");
      }
      ++freq.at(i - 1, a - 1);
    }
  }
  return freq;
}

}  // namespace kerrep
