#pragma once

#include <cstdint>

// Stream identifiers for SampleRng, one per sampling site.
namespace flatcert::streams {

inline constexpr std::uint64_t kSecant = 1;
inline constexpr std::uint64_t kProbeShift = 2;
inline constexpr std::uint64_t kBall = 3;
inline constexpr std::uint64_t kAnnulusMin = 4;
inline constexpr std::uint64_t kSecantShift = 5;
// Exponent fits use kAnnulusBase + k for dyadic shell k.
inline constexpr std::uint64_t kAnnulusBase = 1000;

}  // namespace flatcert::streams
