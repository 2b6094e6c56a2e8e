#pragma once

#include <cstdint>

namespace msdb::limits {

// Default resource guards. Every guard is overridable per call; the CLI
// exposes them as flags. Exceeding a guard raises GuardError.

inline constexpr std::uint64_t kMaxSequenceSymbols = 100'000'000;
inline constexpr std::uint64_t kMaxExactDigits = 1'000'000;
inline constexpr std::uint64_t kMaxAutomatonStates = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kMaxGraphVertices = 4096;
inline constexpr std::uint64_t kMaxDeterminantVertices = 64;
inline constexpr std::uint64_t kMaxBruteForceArcs = 16;
inline constexpr std::uint64_t kMaxTallyWindows = std::uint64_t{1} << 28;
inline constexpr std::uint64_t kMaxFactorialBase = 10'000;
inline constexpr std::uint64_t kMaxEnumerationLength = 40;
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;
inline constexpr std::uint64_t kMaxTheoremWords = 4096;
inline constexpr std::uint64_t kMaxLongestWords = 4096;
inline constexpr std::uint64_t kSampleWordLimit = 1024;

} // namespace msdb::limits
