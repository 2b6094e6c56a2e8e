#pragma once

// Frobenius problem in a free monoid, for generator sets built from a
// multi-shift de Bruijn sequence tau: with S = (Sigma^m u Sigma^n) minus the
// length-n modulo-m windows of tau, the longest words outside S* have length
// g(m,l) = ml - m - l with l = m*a^(n-m) + n - m, and they are exactly the
// language (tau Sigma^m)^(m-2) tau.

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "msdb/bigcount.hpp"
#include "msdb/limits.hpp"
#include "msdb/word.hpp"

namespace msdb {

// g(m,l) = ml - m - l. Requires m,l >= 2 and gcd(m,l) = 1.
std::int64_t frobenius_number(std::uint64_t m, std::uint64_t l);

struct FrobeniusInstance {
    std::uint32_t alphabet = 2;
    std::uint32_t short_length = 2; // m, 0 < m < n
    std::uint32_t long_length = 3;  // n
    Word tau;                       // m-shift sequence of order n-m
    std::vector<Word> excluded;     // length-n modulo-m windows of tau, in order
    std::unordered_set<std::uint64_t> excluded_ranks;

    // l = m*a^(n-m) + n - m, the number of words in S.
    std::uint64_t generator_count() const;
};

// Requires 0 < m < n and gcd(m, n-m) = 1. When tau is omitted the Auto
// generator supplies it, making instances reproducible.
FrobeniusInstance build_instance(std::uint32_t alphabet, std::uint32_t short_length,
                                 std::uint32_t long_length,
                                 std::optional<Word> tau = std::nullopt);

// Membership in S*: dynamic program over prefix lengths, valid because S
// contains every word of length m.
bool is_representable(const Word& w, const FrobeniusInstance& instance);

struct LongestReport {
    bool finite = true;
    // -1 when every word is representable.
    std::int64_t max_length = -1;
    BigCount word_count = 0;
    // Present when finite and word_count <= 4096.
    std::optional<std::vector<Word>> words;
};

// Finite-state scan: a deterministic automaton over (last n-1 symbols,
// representability bits of the last n prefix lengths), followed by a
// longest-path search over the states that can still reach a rejecting one.
LongestReport longest_nonrepresentable(const FrobeniusInstance& instance,
                                       std::uint64_t max_states = limits::kMaxAutomatonStates);

// (tau Sigma^m)^(m-2) tau, enumerated. Requires m >= 2; guarded by the
// number of words a^(m(m-2)).
std::vector<Word> theorem_language(const FrobeniusInstance& instance,
                                   std::uint64_t max_words = limits::kMaxTheoremWords);

} // namespace msdb
