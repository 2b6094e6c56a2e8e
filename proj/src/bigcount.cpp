#include "msdb/bigcount.hpp"

#include <cmath>

namespace msdb {

namespace {

// Product of [lo, hi], split recursively to keep operand sizes balanced.
BigCount range_product(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi)
        return 1;
    if (hi - lo < 8) {
        BigCount result = lo;
        for (std::uint64_t k = lo + 1; k <= hi; ++k)
            result *= k;
        return result;
    }
    const std::uint64_t mid = lo + (hi - lo) / 2;
    return range_product(lo, mid) * range_product(mid + 1, hi);
}

} // namespace

BigCount factorial(std::uint64_t value) {
    if (value < 2)
        return 1;
    return range_product(2, value);
}

BigCount integer_pow(BigCount base, std::uint64_t exponent) {
    BigCount result = 1;
    while (exponent != 0) {
        if (exponent & 1)
            result *= base;
        exponent >>= 1;
        if (exponent != 0)
            base *= base;
    }
    return result;
}

double log10_factorial(std::uint64_t value) {
    if (value < 2)
        return 0.0;
    if (value <= 1'000'000) {
        long double sum = 0.0L;
        for (std::uint64_t k = 2; k <= value; ++k)
            sum += std::log10(static_cast<long double>(k));
        return static_cast<double>(sum);
    }
    return static_cast<double>(lgammal(static_cast<long double>(value) + 1.0L) /
                               std::log(10.0L));
}

double log10_big(const BigCount& value) {
    if (value <= 0)
        throw std::domain_error("log10_big needs a positive value");
    const std::size_t bits = boost::multiprecision::msb(value) + 1;
    if (bits <= 52)
        return std::log10(value.convert_to<double>());
    const std::size_t drop = bits - 52;
    const double head = BigCount(value >> drop).convert_to<double>();
    return std::log10(head) + static_cast<double>(drop) * std::log10(2.0);
}

} // namespace msdb
