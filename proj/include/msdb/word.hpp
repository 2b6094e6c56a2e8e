#pragma once

// Words over the integer alphabet {0,...,a-1} and the (a, m, n) parameter
// triple shared by every other module. Factor extraction is 1-based and
// inclusive on both ends; j = i-1 denotes the empty factor.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace msdb {

using Symbol = std::uint32_t;

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

    static Word zeros(std::size_t count) { return Word(std::vector<Symbol>(count, 0)); }

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Symbol operator[](std::size_t index0) const { return symbols_[index0]; }
    const std::vector<Symbol>& symbols() const { return symbols_; }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& lhs, const Word& rhs) {
        return lhs.symbols_ <=> rhs.symbols_;
    }

private:
    std::vector<Symbol> symbols_;
};

// Parameter triple: alphabet size a >= 1, shift m >= 1, order n >= 1.
struct DbParams {
    std::uint32_t alphabet = 2;
    std::uint32_t shift = 1;
    std::uint32_t order = 1;

    void validate() const;
    std::uint32_t quotient() const { return order / shift; }   // k = floor(n/m)
    std::uint32_t remainder() const { return order % shift; }  // r = n mod m
};

// base^exponent if it does not exceed cap, nullopt otherwise.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exponent,
                                         std::uint64_t cap);

// m*a^n + n - m if it does not exceed cap, nullopt otherwise.
std::optional<std::uint64_t> sequence_length(const DbParams& params, std::uint64_t cap);

// Factor w[i..j], 1-based inclusive. Requires 1 <= i <= j+1 <= |w|+1.
Word factor(const Word& w, std::size_t i, std::size_t j);

// All factors w[im+1..im+n] for i = 0,1,... while they fit, in order of i.
// Requires |w| >= n.
std::vector<Word> modulo_factors(const Word& w, std::uint32_t shift, std::uint32_t order);

// Radix-a encoding of a word, first symbol most significant. Inverse pair.
std::uint64_t rank(const Word& w, std::uint32_t alphabet);
Word unrank(std::uint64_t code, std::size_t length, std::uint32_t alphabet);

// Canonical text form: digit string for a <= 10, comma-separated otherwise.
std::string to_string(const Word& w, std::uint32_t alphabet);
Word parse_word(std::string_view text, std::uint32_t alphabet);

Word concat(const Word& left, const Word& right);

} // namespace msdb
