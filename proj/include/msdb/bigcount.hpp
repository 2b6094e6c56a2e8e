#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace msdb {

// Exact non-negative counts. Values like (a^m!)^(a^(n-m)) overflow any
// fixed-width type almost immediately.
using BigCount = boost::multiprecision::cpp_int;

BigCount factorial(std::uint64_t value);
BigCount integer_pow(BigCount base, std::uint64_t exponent);

// log10(value!). Direct summation of logarithms up to 10^6, lgamma beyond.
double log10_factorial(std::uint64_t value);

// log10 of a positive BigCount without converting the whole number.
double log10_big(const BigCount& value);

} // namespace msdb
