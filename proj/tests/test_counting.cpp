#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "msdb/counting.hpp"
#include "msdb/errors.hpp"
#include "msdb/generate.hpp"
#include "msdb/verify.hpp"

using namespace msdb;

TEST_CASE("formula values at small parameters") {
    CHECK(count_formula({2, 1, 1}).exact == BigCount(2));
    CHECK(count_formula({2, 2, 3}).exact == BigCount(576));
    CHECK(count_formula({2, 2, 1}).exact == BigCount(4));
    CHECK(count_formula({2, 3, 1}).exact == BigCount(8));
    CHECK(count_formula({3, 1, 1}).exact == BigCount(6));
    CHECK(count_formula({1, 3, 5}).exact == BigCount(1));
}

TEST_CASE("shift-one counts specialize to the ordinary formula") {
    for (std::uint32_t order = 1; order <= 6; ++order) {
        const auto result = count_formula({2, 1, order});
        std::uint64_t exponent = 1;
        for (std::uint32_t i = 0; i + 1 < order; ++i)
            exponent *= 2;
        CHECK(result.exact == integer_pow(BigCount(2), exponent));
        CHECK(result.branch == CountBranch::ShiftAtMostOrder);
    }
}

TEST_CASE("branch selection and agreement at order == shift") {
    CHECK(count_formula({2, 3, 1}).branch == CountBranch::OrderAtMostShift);
    CHECK(count_formula({2, 1, 3}).branch == CountBranch::ShiftAtMostOrder);
    for (std::uint32_t a = 2; a <= 3; ++a)
        for (std::uint32_t j = 1; j <= 4; ++j) {
            const auto result = count_formula({a, j, j});
            std::uint64_t base = 1;
            for (std::uint32_t i = 0; i < j; ++i)
                base *= a;
            CHECK(result.exact == factorial(base));
        }
}

TEST_CASE("digit guard omits the exact value but keeps the magnitude") {
    const auto result = count_formula({2, 1, 24});
    // (2!)^(2^23) has about 2.5 million digits.
    CHECK_FALSE(result.exact.has_value());
    CHECK(result.digits > limits::kMaxExactDigits);
    CHECK(result.log10 == doctest::Approx(std::pow(2.0, 23) * std::log10(2.0)).epsilon(1e-9));
}

TEST_CASE("log10 agrees with the exact count") {
    for (std::uint32_t a = 2; a <= 3; ++a)
        for (std::uint32_t m = 1; m <= 6; ++m)
            for (std::uint32_t n = 1; n <= 6; ++n) {
                const auto result = count_formula({a, m, n});
                REQUIRE(result.exact);
                const double expected = log10_big(*result.exact);
                CHECK(std::abs(result.log10 - expected) <= 1e-6 * std::max(1.0, expected));
                CHECK(result.digits == static_cast<std::uint64_t>(result.exact->str().size()));
            }
}

TEST_CASE("recursion values") {
    CHECK(count_recursion({2, 1, 3}) == BigCount(16));
    CHECK(count_recursion({2, 2, 4}) == BigCount(331776));
    CHECK(count_recursion({2, 2, 5}) == integer_pow(factorial(4), 8));
}

TEST_CASE("recursion equals the closed form across the sweep") {
    for (std::uint32_t a = 2; a <= 3; ++a)
        for (std::uint32_t m = 1; m <= 8; ++m)
            for (std::uint32_t n = m; n <= 8; ++n) {
                const auto result = count_formula({a, m, n});
                if (!result.exact)
                    continue;
                CHECK(count_recursion({a, m, n}) == *result.exact);
            }
}

TEST_CASE("recursion preconditions and guards") {
    CHECK_THROWS_AS(count_recursion({2, 3, 2}), DomainError);
    CHECK_THROWS_AS(count_recursion({2, 1, 24}), GuardError);
}

TEST_CASE("enumeration matches the formula on oracle cases") {
    CHECK(enumerate_all({2, 1, 1}).count == 2);
    CHECK(enumerate_all({2, 1, 2}).count == 4);
    CHECK(enumerate_all({2, 2, 1}).count == 4);
    CHECK(enumerate_all({2, 3, 1}).count == 8);
    CHECK(enumerate_all({2, 2, 3}).count == 576);
    CHECK(enumerate_all({3, 1, 1}).count == 6);
}

TEST_CASE("enumeration returns the full word list when small") {
    const auto result = enumerate_all({2, 2, 3});
    REQUIRE(result.words);
    CHECK(result.words->size() == 576);
    std::set<Word> distinct(result.words->begin(), result.words->end());
    CHECK(distinct.size() == 576);
    for (const Word& w : *result.words) {
        CHECK(w.size() == 17);
    }
    // Spot check a handful for the defining property.
    for (std::size_t i = 0; i < result.words->size(); i += 97)
        CHECK(is_multishift_db((*result.words)[i], {2, 2, 3}).ok);
    // The greedy output is one of them.
    const Word greedy = gen_greedy({2, 2, 3}, GreedyPreference::Largest);
    CHECK(distinct.contains(greedy));
    // Words arrive in lexicographic order.
    CHECK(std::is_sorted(result.words->begin(), result.words->end()));
}

TEST_CASE("enumeration of free-filler instances") {
    // n <= m: positions between windows are unconstrained.
    const auto result = enumerate_all({2, 3, 1});
    REQUIRE(result.words);
    for (const Word& w : *result.words)
        CHECK(is_multishift_db(w, {2, 3, 1}).ok);
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(enumerate_all({2, 3, 8}), GuardError);      // length over 40
    CHECK_THROWS_AS(enumerate_all({2, 2, 3}, 100), GuardError); // cap exceeded
}
