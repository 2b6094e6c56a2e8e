#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "msdb/errors.hpp"
#include "msdb/generate.hpp"
#include "msdb/verify.hpp"

using namespace msdb;

namespace {

Word bin(const std::string& text) { return parse_word(text, 2); }

// Textbook de Bruijn check: every length-n word appears exactly once as a
// factor, windows taken at every position.
bool sliding_window_db(const Word& w, std::uint32_t alphabet, std::uint32_t order) {
    const auto expected = sequence_length(DbParams{alphabet, 1, order}, 1u << 30);
    if (!expected || w.size() != *expected)
        return false;
    std::set<std::vector<Symbol>> seen;
    for (std::size_t start = 0; start + order <= w.size(); ++start) {
        std::vector<Symbol> window(w.symbols().begin() + start,
                                   w.symbols().begin() + start + order);
        if (!seen.insert(std::move(window)).second)
            return false;
    }
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < order; ++i)
        total *= alphabet;
    return seen.size() == total;
}

} // namespace

TEST_CASE("accepts the classic order-2 sequence") {
    const auto report = is_multishift_db(bin("00110"), {2, 1, 2});
    CHECK(report.ok);
    CHECK(report.length_ok);
    CHECK(report.missing_count == 0);
    CHECK(report.duplicated_count == 0);
}

TEST_CASE("accepts a reference 2-shift order-3 sequence") {
    CHECK(is_multishift_db(bin("00010011100110110"), {2, 2, 3}).ok);
}

TEST_CASE("rejects the constant word with diagnostics") {
    const auto report = is_multishift_db(bin("00000"), {2, 1, 2});
    CHECK_FALSE(report.ok);
    CHECK(report.length_ok);
    CHECK(report.duplicated_count == 1);
    REQUIRE(report.duplicated_sample.size() == 1);
    CHECK(report.duplicated_sample[0].first == bin("00"));
    CHECK(report.duplicated_sample[0].second == 4);
    CHECK(report.missing_count == 3);
    const std::vector<Word> expected = {bin("01"), bin("10"), bin("11")};
    CHECK(report.missing_sample == expected);
}

TEST_CASE("rejects words with symbols outside the alphabet") {
    CHECK_THROWS_AS(is_multishift_db(Word{{0, 2, 1}}, {2, 1, 1}), DomainError);
}

TEST_CASE("wrong length reported but windows still tallied") {
    const auto report = is_multishift_db(bin("0011"), {2, 1, 2});
    CHECK_FALSE(report.ok);
    CHECK_FALSE(report.length_ok);
    CHECK(report.missing_count == 1);
}

TEST_CASE("diagnostic samples truncate at sixteen entries") {
    const auto length = sequence_length(DbParams{2, 1, 5}, 1u << 20);
    const auto report = is_multishift_db(Word::zeros(*length), {2, 1, 5});
    CHECK(report.missing_count == 31);
    CHECK(report.missing_sample.size() == 16);
    CHECK(report.duplicated_count == 1);
}

TEST_CASE("tally guard refuses oversized orders") {
    CHECK_THROWS_AS(is_multishift_db(bin("0"), {2, 1, 29}), GuardError);
}

TEST_CASE("wrap property on reference sequences") {
    CHECK(check_wrap(bin("00010011100110110"), {2, 2, 3}));
    const Word greedy = gen_greedy({2, 2, 5}, GreedyPreference::Largest);
    CHECK(check_wrap(greedy, {2, 2, 5}));
}

TEST_CASE("wrap holds for words that fail verification") {
    CHECK(check_wrap(bin("00000"), {2, 1, 2}));
    CHECK_FALSE(is_multishift_db(bin("00000"), {2, 1, 2}).ok);
}

TEST_CASE("wrap preconditions") {
    CHECK_THROWS_AS(check_wrap(bin("0011"), {2, 2, 2}), DomainError);
    CHECK_THROWS_AS(check_wrap(bin("0011"), {2, 3, 2}), DomainError);
    CHECK_THROWS_AS(check_wrap(bin("00110"), {2, 2, 3}), DomainError);
}

TEST_CASE("shift-one verification agrees with a sliding-window check") {
    std::mt19937 rng(23);
    int checked = 0;
    while (checked < 20) {
        const std::uint32_t order = 2 + rng() % 3;
        const DbParams params{2, 1, order};
        Word candidate;
        if (checked % 2 == 0) {
            candidate = gen_greedy(params, rng() % 2 ? GreedyPreference::Largest
                                                     : GreedyPreference::Smallest);
            if (rng() % 2) {
                // Perturb one symbol to get a near-miss.
                auto symbols = candidate.symbols();
                symbols[rng() % symbols.size()] ^= 1u;
                candidate = Word(std::move(symbols));
            }
        } else {
            const auto length = sequence_length(params, 1u << 20);
            std::vector<Symbol> symbols(*length);
            for (auto& s : symbols)
                s = rng() % 2;
            candidate = Word(std::move(symbols));
        }
        CHECK(is_multishift_db(candidate, params).ok ==
              sliding_window_db(candidate, 2, order));
        ++checked;
    }
}

TEST_CASE("window tally count matches the window formula") {
    for (const DbParams params : {DbParams{2, 1, 3}, DbParams{2, 2, 3}, DbParams{3, 2, 2}}) {
        const Word w = generate(params, Algorithm::Auto);
        const auto windows = modulo_factors(w, params.shift, params.order);
        CHECK(windows.size() == (w.size() - params.order) / params.shift + 1);
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < params.order; ++i)
            total *= params.alphabet;
        CHECK(windows.size() == total);
    }
}

TEST_CASE("report serializes to stable json") {
    const auto report = is_multishift_db(bin("00000"), {2, 1, 2});
    const auto j = report.to_json(2);
    CHECK(j.at("ok") == false);
    CHECK(j.at("length_ok") == true);
    CHECK(j.at("missing_count") == 3);
    CHECK(j.at("duplicated_count") == 1);
    CHECK(j.at("missing_sample").size() == 3);
    CHECK(j.at("duplicated_sample")[0].at("word") == "00");
    CHECK(j.at("duplicated_sample")[0].at("count") == 4);
}
