#pragma once

// Decides whether a word is an m-shift de Bruijn sequence of order n:
// every word of length n must appear exactly once as a factor starting
// at a position im+1.

#include <cstdint>
#include <utility>
#include <vector>

#include "json.hpp"

#include "msdb/limits.hpp"
#include "msdb/word.hpp"

namespace msdb {

struct VerifyReport {
    bool ok = false;
    bool length_ok = false;
    std::uint64_t missing_count = 0;
    std::uint64_t duplicated_count = 0;
    // Diagnostics are truncated to the first 16 entries; counts are not.
    std::vector<Word> missing_sample;
    std::vector<std::pair<Word, std::uint64_t>> duplicated_sample;

    nlohmann::json to_json(std::uint32_t alphabet) const;
};

// Occurrence tally over all of Sigma^n, refused when a^n exceeds max_windows.
VerifyReport is_multishift_db(const Word& w, const DbParams& params,
                              std::uint64_t max_windows = limits::kMaxTallyWindows);

// Suffix of length n-m equals the prefix of length n-m. Requires n > m and
// |w| = m*a^n + n - m.
bool check_wrap(const Word& w, const DbParams& params);

} // namespace msdb
