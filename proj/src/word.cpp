#include "msdb/word.hpp"

#include <charconv>
#include <limits>

#include "msdb/errors.hpp"

namespace msdb {

void DbParams::validate() const {
    if (alphabet < 1)
        throw DomainError("alphabet size must be at least 1");
    if (shift < 1)
        throw DomainError("shift must be at least 1");
    if (order < 1)
        throw DomainError("order must be at least 1");
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exponent,
                                         std::uint64_t cap) {
    if (base == 0)
        return exponent == 0 ? std::optional<std::uint64_t>{1} : std::optional<std::uint64_t>{0};
    if (base == 1)
        return 1 <= cap ? std::optional<std::uint64_t>{1} : std::nullopt;
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (result > cap / base)
            return std::nullopt;
        result *= base;
    }
    return result <= cap ? std::optional<std::uint64_t>{result} : std::nullopt;
}

std::optional<std::uint64_t> sequence_length(const DbParams& params, std::uint64_t cap) {
    params.validate();
    const auto power = checked_pow(params.alphabet, params.order, cap);
    if (!power || params.order > cap)
        return std::nullopt;
    // m*a^n + n - m written as m*(a^n - 1) + n to stay non-negative.
    const std::uint64_t steps = *power - 1;
    if (steps != 0 && steps > (cap - params.order) / params.shift)
        return std::nullopt;
    return params.shift * steps + params.order;
}

Word factor(const Word& w, std::size_t i, std::size_t j) {
    if (i < 1 || j > w.size() || i > j + 1)
        throw DomainError("factor indices out of range");
    std::vector<Symbol> symbols(w.symbols().begin() + static_cast<std::ptrdiff_t>(i - 1),
                                w.symbols().begin() + static_cast<std::ptrdiff_t>(j));
    return Word(std::move(symbols));
}

std::vector<Word> modulo_factors(const Word& w, std::uint32_t shift, std::uint32_t order) {
    if (shift < 1 || order < 1)
        throw DomainError("shift and order must be positive");
    if (w.size() < order)
        throw DomainError("word is shorter than the window order");
    std::vector<Word> windows;
    windows.reserve((w.size() - order) / shift + 1);
    for (std::size_t start = 0; start + order <= w.size(); start += shift)
        windows.push_back(factor(w, start + 1, start + order));
    return windows;
}

std::uint64_t rank(const Word& w, std::uint32_t alphabet) {
    if (alphabet < 1)
        throw DomainError("alphabet size must be at least 1");
    std::uint64_t code = 0;
    for (Symbol s : w.symbols()) {
        if (s >= alphabet)
            throw DomainError("symbol outside alphabet");
        if (code > (std::numeric_limits<std::uint64_t>::max() - s) / alphabet)
            throw DomainError("rank does not fit in 64 bits");
        code = code * alphabet + s;
    }
    return code;
}

Word unrank(std::uint64_t code, std::size_t length, std::uint32_t alphabet) {
    if (alphabet < 1)
        throw DomainError("alphabet size must be at least 1");
    std::vector<Symbol> symbols(length);
    for (std::size_t index = length; index-- > 0;) {
        symbols[index] = static_cast<Symbol>(code % alphabet);
        code /= alphabet;
    }
    if (code != 0)
        throw DomainError("code is not below alphabet^length");
    return Word(std::move(symbols));
}

std::string to_string(const Word& w, std::uint32_t alphabet) {
    if (alphabet < 1)
        throw DomainError("alphabet size must be at least 1");
    std::string text;
    if (alphabet <= 10) {
        text.reserve(w.size());
        for (Symbol s : w.symbols()) {
            if (s >= alphabet)
                throw DomainError("symbol outside alphabet");
            text.push_back(static_cast<char>('0' + s));
        }
        return text;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= alphabet)
            throw DomainError("symbol outside alphabet");
        if (i != 0)
            text.push_back(',');
        text += std::to_string(w[i]);
    }
    return text;
}

Word parse_word(std::string_view text, std::uint32_t alphabet) {
    if (alphabet < 1)
        throw DomainError("alphabet size must be at least 1");
    std::vector<Symbol> symbols;
    if (alphabet <= 10) {
        symbols.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9')
                throw DomainError("expected a digit string");
            const Symbol s = static_cast<Symbol>(c - '0');
            if (s >= alphabet)
                throw DomainError("symbol outside alphabet");
            symbols.push_back(s);
        }
        return Word(std::move(symbols));
    }
    if (text.empty())
        return {};
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view token =
            text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        std::uint32_t value = 0;
        const auto [end, err] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (err != std::errc{} || end != token.data() + token.size() || token.empty())
            throw DomainError("expected comma-separated symbol values");
        if (value >= alphabet)
            throw DomainError("symbol outside alphabet");
        symbols.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Word(std::move(symbols));
}

Word concat(const Word& left, const Word& right) {
    std::vector<Symbol> symbols;
    symbols.reserve(left.size() + right.size());
    symbols.insert(symbols.end(), left.symbols().begin(), left.symbols().end());
    symbols.insert(symbols.end(), right.symbols().begin(), right.symbols().end());
    return Word(std::move(symbols));
}

} // namespace msdb
