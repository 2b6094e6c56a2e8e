#pragma once

// Generators for m-shift de Bruijn sequences. Every generator verifies its
// own output before returning; a failed self-check is an InternalError.
// All outputs are deterministic functions of their arguments.

#include <cstdint>
#include <span>
#include <vector>

#include "msdb/limits.hpp"
#include "msdb/word.hpp"

namespace msdb {

enum class Algorithm { Block, Multiple, Interleave, Greedy, Auto };

enum class GreedyPreference { Largest, Smallest };

// Block construction for n <= m: u_1 0^(m-n) u_2 0^(m-n) ... u_l where
// u_1..u_l enumerate Sigma^n in the order given by the permutation.
Word gen_block(const DbParams& params, std::span<const std::uint64_t> permutation,
               std::uint64_t max_symbols = limits::kMaxSequenceSymbols);

// Identity permutation convenience overload.
Word gen_block(const DbParams& params,
               std::uint64_t max_symbols = limits::kMaxSequenceSymbols);

// Ordinary (1-shift) de Bruijn sequence of the given order starting with
// 0^order, produced by the greedy rule below with shift 1.
Word gen_ordinary(std::uint32_t alphabet, std::uint32_t order, GreedyPreference preference,
                  std::uint64_t max_symbols = limits::kMaxSequenceSymbols);

// m-shift sequence of order multiple*m: generate an ordinary sequence of
// order `multiple` over the alphabet of all length-m words, then spell each
// super-letter out as its length-m word.
Word gen_multiple(std::uint32_t alphabet, std::uint32_t shift, std::uint32_t multiple,
                  std::uint64_t max_symbols = limits::kMaxSequenceSymbols);

// Start from 0^n (Largest) or from the all-largest word (Smallest, the
// mirror image), repeatedly append the extreme length-m word whose new
// length-n suffix has not been seen at a modulo-m position, stop when stuck.
Word gen_greedy(const DbParams& params, GreedyPreference preference,
                std::uint64_t max_symbols = limits::kMaxSequenceSymbols);

// Interleaving construction for m < n with r = n mod m != 0, assembled from
// two sequences whose orders are multiples of their shifts.
Word gen_interleave(const DbParams& params,
                    std::uint64_t max_symbols = limits::kMaxSequenceSymbols);

// Intermediate products of gen_interleave, exposed for diagnostics.
struct InterleaveParts {
    Word word;
    Word w1; // tau(m1, n1) 0^m1 with m1 = r, n1 = (k+1)r
    Word w2; // tau(m2, n2) 0^m2 with m2 = m-r, n2 = k(m-r)
    std::vector<Word> u_blocks;
    std::vector<Word> v_blocks;
};

InterleaveParts interleave_parts(const DbParams& params,
                                 std::uint64_t max_symbols = limits::kMaxSequenceSymbols);

// Dispatcher. Auto picks Block if n <= m, Multiple if m divides n, Greedy
// otherwise; named algorithms insist on their preconditions.
Word generate(const DbParams& params, Algorithm algorithm,
              GreedyPreference preference = GreedyPreference::Largest,
              std::uint64_t max_symbols = limits::kMaxSequenceSymbols);

} // namespace msdb
