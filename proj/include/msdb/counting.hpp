#pragma once

// Exact and logarithmic evaluation of the number of m-shift de Bruijn
// sequences of order n, written #(m,n) below:
//   n <= m:  #(m,n) = a^n! * a^((m-n)(a^n - 1))
//   m <= n:  #(m,n) = (a^m!)^(a^(n-m))
// plus a recursion cross-check and a brute-force enumeration oracle.

#include <cstdint>
#include <optional>
#include <vector>

#include "msdb/bigcount.hpp"
#include "msdb/limits.hpp"
#include "msdb/word.hpp"

namespace msdb {

enum class CountBranch { OrderAtMostShift, ShiftAtMostOrder };

struct CountResult {
    // Present only while the estimated decimal size stays within the digit
    // guard; never an approximation.
    std::optional<BigCount> exact;
    double log10 = 0.0;
    std::uint64_t digits = 1; // decimal digits, estimated from log10
    CountBranch branch = CountBranch::ShiftAtMostOrder;
};

CountResult count_formula(const DbParams& params,
                          std::uint64_t max_digits = limits::kMaxExactDigits);

// Literal unrolling #(m,n) = (a^m!)^(a^(n-2m)(a^m-1)) #(m,n-m) down to the
// base case m <= n <= 2m, where #(m,n) = (a^m!)^(a^(n-m)). Requires m <= n.
BigCount count_recursion(const DbParams& params,
                         std::uint64_t max_digits = limits::kMaxExactDigits);

struct EnumerationResult {
    BigCount count;
    // All sequences, present when the count is at most 1024, in
    // lexicographic order.
    std::optional<std::vector<Word>> words;
};

// Depth-first search over window extensions; counts exactly the words
// accepted by is_multishift_db. Guarded by total length <= 40 and by cap.
EnumerationResult enumerate_all(const DbParams& params,
                                std::uint64_t cap = limits::kDefaultEnumerationCap);

} // namespace msdb
