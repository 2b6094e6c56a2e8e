#include "msdb/counting.hpp"

#include <cmath>
#include <limits>

#include "msdb/errors.hpp"

namespace msdb {

namespace {

// log10 of the count; never materializes the number.
double formula_log10(const DbParams& params, CountBranch branch) {
    const long double a = params.alphabet;
    if (branch == CountBranch::OrderAtMostShift) {
        const long double an = powl(a, params.order);
        const long double fact = an <= 1e18L
                                     ? log10_factorial(static_cast<std::uint64_t>(an))
                                     : static_cast<double>(lgammal(an + 1.0L) / std::log(10.0L));
        return static_cast<double>(fact + static_cast<long double>(params.shift - params.order) *
                                              (an - 1.0L) * std::log10(a));
    }
    const long double exponent = powl(a, params.order - params.shift);
    const long double am = powl(a, params.shift);
    const long double fact = am <= 1e18L
                                 ? log10_factorial(static_cast<std::uint64_t>(am))
                                 : static_cast<double>(lgammal(am + 1.0L) / std::log(10.0L));
    return static_cast<double>(exponent * fact);
}

std::uint64_t digits_from_log10(double log10_value) {
    if (!std::isfinite(log10_value) || log10_value < 0)
        return 1;
    if (log10_value > 1e18)
        return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(std::floor(log10_value)) + 1;
}

std::uint64_t pow_or_guard(std::uint64_t base, std::uint64_t exponent) {
    const auto value =
        checked_pow(base, exponent, std::numeric_limits<std::uint64_t>::max() / 2);
    if (!value)
        throw GuardError("exact evaluation overflows 64-bit intermediates");
    return *value;
}

BigCount formula_exact(const DbParams& params, CountBranch branch) {
    if (branch == CountBranch::OrderAtMostShift) {
        const std::uint64_t an = pow_or_guard(params.alphabet, params.order);
        const std::uint64_t exponent =
            static_cast<std::uint64_t>(params.shift - params.order) * (an - 1);
        return factorial(an) * integer_pow(BigCount(params.alphabet), exponent);
    }
    const std::uint64_t am = pow_or_guard(params.alphabet, params.shift);
    const std::uint64_t exponent = pow_or_guard(params.alphabet, params.order - params.shift);
    return integer_pow(factorial(am), exponent);
}

} // namespace

CountResult count_formula(const DbParams& params, std::uint64_t max_digits) {
    params.validate();
    CountResult result;
    result.branch = params.order <= params.shift && params.order != params.shift
                        ? CountBranch::OrderAtMostShift
                        : CountBranch::ShiftAtMostOrder;
    result.log10 = formula_log10(params, result.branch);
    result.digits = digits_from_log10(result.log10);
    if (result.digits <= max_digits) {
        result.exact = formula_exact(params, result.branch);
        // Both branches apply at n = m and must produce a^n! either way.
        if (params.order == params.shift &&
            *result.exact != formula_exact(params, CountBranch::OrderAtMostShift))
            throw InternalError("count branches disagree at order == shift");
    }
    return result;
}

BigCount count_recursion(const DbParams& params, std::uint64_t max_digits) {
    params.validate();
    if (params.shift > params.order)
        throw DomainError("recursion applies to shift <= order");
    const CountResult estimate = count_formula(params, 0); // log10 only
    if (estimate.digits > max_digits)
        throw GuardError("exact count exceeds the digit guard");

    const std::uint64_t base = pow_or_guard(params.alphabet, params.shift);
    std::uint64_t exponent = 0;
    std::uint64_t n = params.order;
    const std::uint64_t m = params.shift;
    while (n > 2 * m) {
        exponent += pow_or_guard(params.alphabet, n - 2 * m) * (base - 1);
        n -= m;
    }
    exponent += pow_or_guard(params.alphabet, n - m);
    return integer_pow(factorial(base), exponent);
}

EnumerationResult enumerate_all(const DbParams& params, std::uint64_t cap) {
    params.validate();
    const auto length = sequence_length(params, limits::kMaxEnumerationLength);
    if (!length)
        throw GuardError("enumeration is limited to sequences of at most 40 symbols");
    const std::uint64_t windows = *checked_pow(params.alphabet, params.order, *length);
    const std::uint64_t chunks =
        *checked_pow(params.alphabet, params.shift, std::uint64_t{1} << 62);
    const std::uint64_t keep =
        params.shift < params.order ? windows / chunks : 0; // a^(n-m) when windows overlap

    std::uint64_t count = 0;
    std::vector<Word> sample;
    bool collecting = true;
    std::vector<Symbol> current;
    current.reserve(*length);

    auto record = [&] {
        if (++count > cap)
            throw GuardError("enumeration cap exceeded");
        if (collecting) {
            if (sample.size() < limits::kSampleWordLimit) {
                sample.emplace_back(current);
            } else {
                collecting = false;
                sample.clear();
            }
        }
    };

    auto extend = [&](auto&& self, std::uint64_t window, std::uint64_t seen_mask,
                      std::uint64_t placed) -> void {
        if (placed == windows) {
            record();
            return;
        }
        for (std::uint64_t chunk = 0; chunk < chunks; ++chunk) {
            const std::uint64_t next = params.shift < params.order
                                           ? (window % keep) * chunks + chunk
                                           : chunk % windows;
            if (seen_mask & (std::uint64_t{1} << next))
                continue;
            const std::size_t mark = current.size();
            std::uint64_t value = chunk;
            current.resize(mark + params.shift);
            for (std::size_t index = current.size(); index-- > mark;) {
                current[index] = static_cast<Symbol>(value % params.alphabet);
                value /= params.alphabet;
            }
            self(self, next, seen_mask | (std::uint64_t{1} << next), placed + 1);
            current.resize(mark);
        }
    };

    for (std::uint64_t start = 0; start < windows; ++start) {
        const Word prefix = unrank(start, params.order, params.alphabet);
        current.assign(prefix.symbols().begin(), prefix.symbols().end());
        extend(extend, start, std::uint64_t{1} << start, 1);
    }

    EnumerationResult result;
    result.count = count;
    if (collecting)
        result.words = std::move(sample);
    return result;
}

} // namespace msdb
