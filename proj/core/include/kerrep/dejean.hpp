#pragma once

#include "kerrep/kernel_verifier.hpp"
#include "kerrep/morphism.hpp"
#include "kerrep/word.hpp"

/// The concrete four-letter instance everything in tools/ verifies:
/// a uniform width-3 morphism whose fixed point avoids kernel repetitions,
/// which settles the repetition threshold for alphabets of 30..32 letters.
namespace kerrep::dejean {

/// 1 -> 121, 2 -> 123, 3 -> 141, 4 -> 142.
const Morphism& morphism();

/// Length-n prefix of the fixed point of morphism(), seeded at letter 1.
Word fixed_point(std::size_t length);

/// Short covers: u0 contains every length-2 factor of the fixed point,
/// u1 every length-3 factor. One high iterate of a cover therefore
/// contains every factor the finite search has to look at.
const Word& cover_u0();
const Word& cover_u1();

inline constexpr int kModulus = 4;
inline constexpr std::size_t kQMax = 1966;
inline constexpr int kDepth = 7;

/// The full search configuration: kernel periods up to 1966, ratio
/// threshold 35/34, tail constant 9/(2*1967), cover u1, depth 7.
VerifierConfig standard_config(int n = 32);

}  // namespace kerrep::dejean
