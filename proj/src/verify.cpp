#include "msdb/verify.hpp"

#include <limits>

#include "msdb/errors.hpp"

namespace msdb {

namespace {

constexpr std::size_t kSampleCap = 16;

}

VerifyReport is_multishift_db(const Word& w, const DbParams& params,
                              std::uint64_t max_windows) {
    params.validate();
    for (Symbol s : w.symbols())
        if (s >= params.alphabet)
            throw DomainError("symbol outside alphabet");

    const auto window_count = checked_pow(params.alphabet, params.order, max_windows);
    if (!window_count)
        throw GuardError("occurrence tally of size alphabet^order exceeds the window guard");

    VerifyReport report;
    const auto expected = sequence_length(params, std::numeric_limits<std::uint64_t>::max() / 2);
    report.length_ok = expected && w.size() == *expected;

    const std::uint64_t a = params.alphabet;
    const std::uint32_t m = params.shift;
    const std::uint32_t n = params.order;
    std::vector<std::uint32_t> tally(*window_count, 0);

    if (w.size() >= n) {
        if (m < n) {
            // Rolling rank: drop the first m symbols, append the next m.
            const std::uint64_t chunk = *checked_pow(a, m, *window_count);
            const std::uint64_t keep = *window_count / chunk; // a^(n-m)
            std::uint64_t code = 0;
            for (std::uint32_t i = 0; i < n; ++i)
                code = code * a + w[i];
            ++tally[code];
            for (std::size_t pos = m; pos + n <= w.size(); pos += m) {
                code %= keep;
                for (std::size_t k = pos + n - m; k < pos + n; ++k)
                    code = code * a + w[k];
                ++tally[code];
            }
        } else {
            // Windows do not overlap; rank each one directly.
            for (std::size_t pos = 0; pos + n <= w.size(); pos += m) {
                std::uint64_t code = 0;
                for (std::size_t k = pos; k < pos + n; ++k)
                    code = code * a + w[k];
                ++tally[code];
            }
        }
    }

    for (std::uint64_t code = 0; code < *window_count; ++code) {
        if (tally[code] == 0) {
            ++report.missing_count;
            if (report.missing_sample.size() < kSampleCap)
                report.missing_sample.push_back(unrank(code, n, params.alphabet));
        } else if (tally[code] > 1) {
            ++report.duplicated_count;
            if (report.duplicated_sample.size() < kSampleCap)
                report.duplicated_sample.emplace_back(unrank(code, n, params.alphabet),
                                                      tally[code]);
        }
    }
    report.ok = report.length_ok && report.missing_count == 0 && report.duplicated_count == 0;
    return report;
}

bool check_wrap(const Word& w, const DbParams& params) {
    params.validate();
    if (params.order <= params.shift)
        throw DomainError("wrap property requires order > shift");
    const auto expected = sequence_length(params, std::numeric_limits<std::uint64_t>::max() / 2);
    if (!expected || w.size() != *expected)
        throw DomainError("word length must equal m*a^n + n - m");
    const std::size_t overlap = params.order - params.shift;
    return factor(w, w.size() - overlap + 1, w.size()) == factor(w, 1, overlap);
}

nlohmann::json VerifyReport::to_json(std::uint32_t alphabet) const {
    nlohmann::json j;
    j["ok"] = ok;
    j["length_ok"] = length_ok;
    j["missing_count"] = missing_count;
    j["duplicated_count"] = duplicated_count;
    auto missing = nlohmann::json::array();
    for (const Word& w : missing_sample)
        missing.push_back(to_string(w, alphabet));
    j["missing_sample"] = std::move(missing);
    auto duplicated = nlohmann::json::array();
    for (const auto& [w, count] : duplicated_sample)
        duplicated.push_back({{"word", to_string(w, alphabet)}, {"count", count}});
    j["duplicated_sample"] = std::move(duplicated);
    return j;
}

} // namespace msdb
