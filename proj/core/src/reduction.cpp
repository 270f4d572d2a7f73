#include "kerrep/reduction.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

namespace kerrep {

Decomposition decompose(const Morphism& m, const Word& preimage,
                        std::size_t position, std::size_t length) {
  const auto width_opt = m.uniform_width();
  if (!width_opt) throw std::domain_error("decompose requires a uniform morphism");
  const std::size_t width = *width_opt;
  const std::size_t total = width * preimage.size();
  if (position > total || length > total - position) {
    throw std::out_of_range("window outside the image word");
  }

  Decomposition d;
  std::size_t pos = position;
  const std::size_t end = position + length;

  // Tail of the image that `position` falls into, clipped to the window.
  if (pos % width != 0 && pos < end) {
    const std::size_t block = pos / width;
    const std::size_t block_end = std::min(end, (block + 1) * width);
    const Word& img = m.image(preimage[block]);
    for (std::size_t k = pos; k < block_end; ++k) d.s.push_back(img[k - block * width]);
    pos = block_end;
  }

  d.u_start = pos / width;
  d.u_length = (end - pos) / width;
  pos += d.u_length * width;

  // Head of the final, partially covered image.
  if (pos < end) {
    const Word& img = m.image(preimage[pos / width]);
    for (std::size_t k = 0; k < end - pos; ++k) d.p.push_back(img[k]);
  }
  return d;
}

Word reconstruct(const Morphism& m, const Word& preimage, const Decomposition& d) {
  Word out = d.s;
  out.append(apply(m, preimage.subword(d.u_start, d.u_length)));
  out.append(d.p);
  return out;
}

std::map<Word, std::set<Letter>> predecessor_sets(const WordIndex& idx,
                                                  std::size_t factor_length) {
  if (factor_length == 0) throw std::domain_error("factor length must be at least 1");
  std::map<Word, std::set<Letter>> out;
  const Word& text = idx.text();
  for (std::size_t i = 0; i + factor_length <= text.size(); ++i) {
    auto& preceding = out[text.subword(i, factor_length)];
    if (i >= 1) preceding.insert(text[i - 1]);
  }
  return out;
}

bool kernel_preimage_check(const WordIndex& image_idx, const WordIndex& preimage_idx,
                           Window aligned, std::size_t width) {
  if (width == 0) throw std::domain_error("width must be at least 1");
  if (aligned.start % width != 0 || aligned.length % width != 0) {
    throw std::invalid_argument("window not aligned to the image grid");
  }
  if (!image_idx.is_kernel_window(aligned)) return true;
  return preimage_idx.is_kernel_window({aligned.start / width, aligned.length / width});
}

bool phase_rigidity_check(const WordIndex& idx) {
  const auto text = idx.text().letters();
  if (text.size() < 3) return true;
  // Phase mask per packed length-3 factor; rigidity = every mask is a power of two.
  std::array<unsigned char, 1000> masks{};
  for (std::size_t i = 0; i + 3 <= text.size(); ++i) {
    const unsigned key = 100u * text[i] + 10u * text[i + 1] + text[i + 2];
    masks[key] |= static_cast<unsigned char>(1u << (i % 3));
  }
  for (unsigned char mask : masks) {
    if (mask & (mask - 1)) return false;
  }
  return true;
}

bool AnalysisChecks::all_pass() const noexcept {
  return phase_rigidity && predecessor_uniqueness &&
         kernel_preimage_closure.value_or(true) && reconstruction.value_or(true);
}

namespace {

constexpr std::uint32_t kClosureSeed = 0x636c6f73;  // fixed: reports are deterministic
constexpr std::uint32_t kRebuildSeed = 0x72656275;
constexpr std::size_t kClosureSamples = 10000;
constexpr std::size_t kRebuildSamples = 1000;
constexpr int kExhaustiveDepth = 4;  // iterate small enough for an all-windows pass

bool closure_exhaustive(const WordIndex& image_idx, const WordIndex& preimage_idx,
                        std::size_t width, std::uint64_t& windows) {
  bool ok = true;
  const std::size_t n = image_idx.size();
  for (std::size_t start = 0; start <= n; start += width) {
    for (std::size_t len = 0; start + len <= n; len += width) {
      ++windows;
      ok = kernel_preimage_check(image_idx, preimage_idx, {start, len}, width) && ok;
    }
  }
  return ok;
}

bool closure_sampled(const WordIndex& image_idx, const WordIndex& preimage_idx,
                     std::size_t width, std::size_t samples, std::uint64_t& windows) {
  bool ok = true;
  std::mt19937 rng(kClosureSeed);
  const std::size_t blocks = image_idx.size() / width;
  std::uniform_int_distribution<std::size_t> pick_start(0, blocks);
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t sb = pick_start(rng);
    std::uniform_int_distribution<std::size_t> pick_len(0, blocks - sb);
    const std::size_t lb = pick_len(rng);
    ++windows;
    ok = kernel_preimage_check(image_idx, preimage_idx, {sb * width, lb * width}, width) && ok;
  }
  return ok;
}

}  // namespace

AnalysisChecks analyze_structure(const Morphism& m, std::span<const Word> iterates,
                                 int modulus) {
  if (iterates.empty()) throw std::domain_error("analyze_structure needs at least one word");
  AnalysisChecks checks;
  const Word& text = iterates.back();
  const WordIndex idx(text, modulus);

  checks.phase_rigidity = phase_rigidity_check(idx);

  checks.predecessor_uniqueness = true;
  for (const auto& [factor, preceding] : predecessor_sets(idx, 3)) {
    const auto phases = idx.occurrence_residues(factor, 3);
    if (phases == std::set<std::size_t>{1} && preceding.size() != 1) {
      checks.predecessor_uniqueness = false;
    }
  }

  const int depth = static_cast<int>(iterates.size()) - 1;
  if (depth < 1) return checks;

  const auto width_opt = m.uniform_width();
  if (!width_opt) throw std::domain_error("analyze_structure requires a uniform morphism");
  const std::size_t width = *width_opt;

  {
    const int k = std::min(depth, kExhaustiveDepth);
    const WordIndex image_small(iterates[k], modulus);
    const WordIndex pre_small(iterates[k - 1], modulus);
    bool ok = closure_exhaustive(image_small, pre_small, width,
                                 checks.closure_exhaustive_windows);
    checks.closure_exhaustive_depth = k;
    if (depth > k) {
      const WordIndex pre_full(iterates[depth - 1], modulus);
      ok = closure_sampled(idx, pre_full, width, kClosureSamples,
                           checks.closure_sampled_windows) &&
           ok;
    }
    checks.kernel_preimage_closure = ok;
  }

  {
    const Word& preimage = iterates[depth - 1];
    bool ok = true;
    std::uint64_t windows = 0;

    auto rebuild_matches = [&](std::size_t pos, std::size_t len) {
      ++windows;
      const Decomposition d = decompose(m, preimage, pos, len);
      return d.s.size() < width && d.p.size() < width &&
             reconstruct(m, preimage, d) == text.subword(pos, len);
    };

    ok = rebuild_matches(0, text.size()) && ok;  // whole word, always
    std::mt19937 rng(kRebuildSeed);
    std::uniform_int_distribution<std::size_t> pick_pos(0, text.size());
    for (std::size_t k = 0; k < kRebuildSamples; ++k) {
      const std::size_t pos = pick_pos(rng);
      std::uniform_int_distribution<std::size_t> pick_len(0, text.size() - pos);
      ok = rebuild_matches(pos, pick_len(rng)) && ok;
    }
    checks.reconstruction = ok;
    checks.reconstruction_windows = windows;
  }
  return checks;
}

}  // namespace kerrep
