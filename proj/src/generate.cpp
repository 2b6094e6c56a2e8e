#include "msdb/generate.hpp"

#include <algorithm>
#include <limits>

#include "msdb/errors.hpp"
#include "msdb/verify.hpp"

namespace msdb {

namespace {

// Every generator output must satisfy its own definition.
void self_verify(const Word& w, const DbParams& params) {
    if (!is_multishift_db(w, params).ok)
        throw InternalError("generated word failed self-verification");
}

std::uint64_t guarded_length(const DbParams& params, std::uint64_t max_symbols) {
    const auto length = sequence_length(params, max_symbols);
    if (!length)
        throw GuardError("sequence length m*a^n + n - m exceeds the symbol guard");
    return *length;
}

// Append the length-`digits` base-a expansion of value.
void append_digits(std::vector<Symbol>& out, std::uint64_t value, std::uint32_t digits,
                   std::uint32_t alphabet) {
    const std::size_t end = out.size() + digits;
    out.resize(end);
    for (std::size_t index = end; index-- > end - digits;) {
        out[index] = static_cast<Symbol>(value % alphabet);
        value /= alphabet;
    }
}

Word greedy_impl(const DbParams& params, GreedyPreference preference,
                 std::uint64_t max_symbols) {
    const std::uint64_t target = guarded_length(params, max_symbols);
    const std::uint64_t a = params.alphabet;
    const std::uint32_t m = params.shift;
    const std::uint32_t n = params.order;
    const std::uint64_t windows = *checked_pow(a, n, max_symbols);
    const bool largest = preference == GreedyPreference::Largest;

    // The Largest rule starts from 0^n; its mirror image starts from the
    // all-largest word, otherwise the extreme extension strands coverage.
    const Symbol seed = largest ? 0 : static_cast<Symbol>(a - 1);
    std::vector<Symbol> out(n, seed);
    out.reserve(target);
    std::vector<bool> seen(windows, false);
    std::uint64_t start_window = largest ? 0 : windows - 1;
    seen[start_window] = true;

    if (m < n) {
        const std::uint64_t chunk_count = *checked_pow(a, m, windows);
        const std::uint64_t keep = windows / chunk_count; // a^(n-m)
        std::uint64_t window = start_window;              // rank of the current suffix
        for (;;) {
            const std::uint64_t tail = (window % keep) * chunk_count;
            bool extended = false;
            for (std::uint64_t trial = 0; trial < chunk_count; ++trial) {
                const std::uint64_t chunk = largest ? chunk_count - 1 - trial : trial;
                const std::uint64_t candidate = tail + chunk;
                if (!seen[candidate]) {
                    seen[candidate] = true;
                    append_digits(out, chunk, m, params.alphabet);
                    window = candidate;
                    extended = true;
                    break;
                }
            }
            if (!extended)
                break;
        }
    } else {
        // m >= n: the new suffix is the last n symbols of the chunk, so the
        // extreme chunk for a given suffix pads with the extreme letter.
        // Scanning suffix values covers every candidate chunk that can win.
        const Symbol pad = largest ? static_cast<Symbol>(a - 1) : 0;
        for (;;) {
            bool extended = false;
            for (std::uint64_t trial = 0; trial < windows; ++trial) {
                const std::uint64_t candidate = largest ? windows - 1 - trial : trial;
                if (!seen[candidate]) {
                    seen[candidate] = true;
                    out.insert(out.end(), m - n, pad);
                    append_digits(out, candidate, n, params.alphabet);
                    extended = true;
                    break;
                }
            }
            if (!extended)
                break;
        }
    }

    Word word(std::move(out));
    self_verify(word, params);
    return word;
}

struct InterleaveLayout {
    std::uint32_t m1, n1, m2, n2;
    std::uint64_t blocks1; // N1 = a^n1
    std::uint64_t blocks2; // N2 = a^n2
};

InterleaveLayout interleave_layout(const DbParams& params, std::uint64_t max_symbols) {
    params.validate();
    if (params.alphabet < 2)
        throw DomainError("interleave construction needs an alphabet of at least two letters");
    if (params.shift >= params.order)
        throw DomainError("interleave construction needs shift < order");
    const std::uint32_t k = params.quotient();
    const std::uint32_t r = params.remainder();
    if (r == 0)
        throw DomainError("interleave construction needs order not divisible by shift");
    guarded_length(params, max_symbols);
    InterleaveLayout layout{};
    layout.m1 = r;
    layout.n1 = (k + 1) * r;
    layout.m2 = params.shift - r;
    layout.n2 = k * (params.shift - r);
    const auto blocks1 = checked_pow(params.alphabet, layout.n1,
                                     std::numeric_limits<std::uint64_t>::max() / 2);
    const auto blocks2 = checked_pow(params.alphabet, layout.n2,
                                     std::numeric_limits<std::uint64_t>::max() / 2);
    if (!blocks1 || !blocks2)
        throw GuardError("interleave block counts overflow 64-bit intermediates");
    layout.blocks1 = *blocks1;
    layout.blocks2 = *blocks2;
    return layout;
}

// Emit the interleaved word from w1 = tau(m1,n1) 0^m1 and w2 = tau(m2,n2) 0^m2:
//   0^n  v_1 0^m1  v_2 0^m1 ... v_(N2-1) 0^m1  v_N2  u'_((N1-1)N2)
//   v'_1 u'_1  v'_2 u'_2 ... v'_((N1-1)N2-1) u'_((N1-1)N2-1)
// with u'_i = u_(1 + i mod (N1-1)) and v'_i = v_(1 + (i-1) mod N2).
Word interleave_emit(const DbParams& params, const InterleaveLayout& lay, const Word& w1,
                     const Word& w2, std::uint64_t target) {
    std::vector<Symbol> out;
    out.reserve(target);

    auto put_u = [&](std::uint64_t i) { // 1-based block index into w1
        const std::size_t offset = lay.n1 + (i - 1) * lay.m1;
        for (std::uint32_t s = 0; s < lay.m1; ++s)
            out.push_back(w1[offset + s]);
    };
    auto put_v = [&](std::uint64_t i) {
        const std::size_t offset = lay.n2 + (i - 1) * lay.m2;
        for (std::uint32_t s = 0; s < lay.m2; ++s)
            out.push_back(w2[offset + s]);
    };

    out.insert(out.end(), params.order, 0);
    for (std::uint64_t i = 1; i < lay.blocks2; ++i) {
        put_v(i);
        out.insert(out.end(), lay.m1, 0);
    }
    put_v(lay.blocks2);

    const std::uint64_t pairs = (lay.blocks1 - 1) * lay.blocks2;
    put_u(1 + pairs % (lay.blocks1 - 1));
    for (std::uint64_t i = 1; i < pairs; ++i) {
        put_v(1 + (i - 1) % lay.blocks2);
        put_u(1 + i % (lay.blocks1 - 1));
    }
    return Word(std::move(out));
}

} // namespace

Word gen_block(const DbParams& params, std::span<const std::uint64_t> permutation,
               std::uint64_t max_symbols) {
    params.validate();
    if (params.order > params.shift)
        throw DomainError("block construction requires order <= shift");
    const std::uint64_t target = guarded_length(params, max_symbols);
    const std::uint64_t count = *checked_pow(params.alphabet, params.order, max_symbols);
    if (permutation.size() != count)
        throw DomainError("permutation must cover alphabet^order values");
    std::vector<bool> used(count, false);
    for (std::uint64_t value : permutation) {
        if (value >= count || used[value])
            throw DomainError("permutation is not a bijection");
        used[value] = true;
    }

    std::vector<Symbol> out;
    out.reserve(target);
    for (std::size_t i = 0; i < permutation.size(); ++i) {
        if (i != 0)
            out.insert(out.end(), params.shift - params.order, 0);
        append_digits(out, permutation[i], params.order, params.alphabet);
    }
    Word word(std::move(out));
    self_verify(word, params);
    return word;
}

Word gen_block(const DbParams& params, std::uint64_t max_symbols) {
    params.validate();
    if (params.order > params.shift)
        throw DomainError("block construction requires order <= shift");
    const std::uint64_t target = guarded_length(params, max_symbols);
    const std::uint64_t count = *checked_pow(params.alphabet, params.order, max_symbols);

    std::vector<Symbol> out;
    out.reserve(target);
    for (std::uint64_t value = 0; value < count; ++value) {
        if (value != 0)
            out.insert(out.end(), params.shift - params.order, 0);
        append_digits(out, value, params.order, params.alphabet);
    }
    Word word(std::move(out));
    self_verify(word, params);
    return word;
}

Word gen_ordinary(std::uint32_t alphabet, std::uint32_t order, GreedyPreference preference,
                  std::uint64_t max_symbols) {
    return gen_greedy(DbParams{alphabet, 1, order}, preference, max_symbols);
}

Word gen_multiple(std::uint32_t alphabet, std::uint32_t shift, std::uint32_t multiple,
                  std::uint64_t max_symbols) {
    if (multiple < 1)
        throw DomainError("multiple must be at least 1");
    const std::uint64_t target_order = static_cast<std::uint64_t>(shift) * multiple;
    if (target_order > std::numeric_limits<std::uint32_t>::max())
        throw DomainError("order shift*multiple is out of range");
    const DbParams target{alphabet, shift, static_cast<std::uint32_t>(target_order)};
    guarded_length(target, max_symbols);

    const auto super = checked_pow(alphabet, shift, max_symbols);
    if (!super || *super > std::numeric_limits<std::uint32_t>::max())
        throw GuardError("super-alphabet of size alphabet^shift exceeds the guard");
    const Word lifted = gen_ordinary(static_cast<std::uint32_t>(*super), multiple,
                                     GreedyPreference::Largest, max_symbols);

    std::vector<Symbol> out;
    out.reserve(lifted.size() * shift);
    for (Symbol letter : lifted.symbols())
        append_digits(out, letter, shift, alphabet);
    Word word(std::move(out));
    self_verify(word, target);
    return word;
}

Word gen_greedy(const DbParams& params, GreedyPreference preference,
                std::uint64_t max_symbols) {
    params.validate();
    return greedy_impl(params, preference, max_symbols);
}

Word gen_interleave(const DbParams& params, std::uint64_t max_symbols) {
    const InterleaveLayout lay = interleave_layout(params, max_symbols);
    const std::uint64_t target = guarded_length(params, max_symbols);
    const Word w1 = concat(gen_multiple(params.alphabet, lay.m1, lay.n1 / lay.m1, max_symbols),
                           Word::zeros(lay.m1));
    const Word w2 = concat(gen_multiple(params.alphabet, lay.m2, lay.n2 / lay.m2, max_symbols),
                           Word::zeros(lay.m2));
    Word word = interleave_emit(params, lay, w1, w2, target);
    if (!is_multishift_db(word, params).ok)
        throw InternalError("interleave construction failed its self-check");
    return word;
}

InterleaveParts interleave_parts(const DbParams& params, std::uint64_t max_symbols) {
    const InterleaveLayout lay = interleave_layout(params, max_symbols);
    const std::uint64_t target = guarded_length(params, max_symbols);
    InterleaveParts parts;
    parts.w1 = concat(gen_multiple(params.alphabet, lay.m1, lay.n1 / lay.m1, max_symbols),
                      Word::zeros(lay.m1));
    parts.w2 = concat(gen_multiple(params.alphabet, lay.m2, lay.n2 / lay.m2, max_symbols),
                      Word::zeros(lay.m2));
    parts.u_blocks.reserve(lay.blocks1);
    for (std::uint64_t i = 1; i <= lay.blocks1; ++i)
        parts.u_blocks.push_back(
            factor(parts.w1, lay.n1 + (i - 1) * lay.m1 + 1, lay.n1 + i * lay.m1));
    parts.v_blocks.reserve(lay.blocks2);
    for (std::uint64_t i = 1; i <= lay.blocks2; ++i)
        parts.v_blocks.push_back(
            factor(parts.w2, lay.n2 + (i - 1) * lay.m2 + 1, lay.n2 + i * lay.m2));
    parts.word = interleave_emit(params, lay, parts.w1, parts.w2, target);
    if (!is_multishift_db(parts.word, params).ok)
        throw InternalError("interleave construction failed its self-check");
    return parts;
}

Word generate(const DbParams& params, Algorithm algorithm, GreedyPreference preference,
              std::uint64_t max_symbols) {
    params.validate();
    switch (algorithm) {
    case Algorithm::Block:
        return gen_block(params, max_symbols);
    case Algorithm::Multiple:
        if (params.remainder() != 0)
            throw DomainError("multiple construction requires shift to divide order");
        return gen_multiple(params.alphabet, params.shift, params.quotient(), max_symbols);
    case Algorithm::Interleave:
        return gen_interleave(params, max_symbols);
    case Algorithm::Greedy:
        return gen_greedy(params, preference, max_symbols);
    case Algorithm::Auto:
        if (params.order <= params.shift)
            return gen_block(params, max_symbols);
        if (params.remainder() == 0)
            return gen_multiple(params.alphabet, params.shift, params.quotient(), max_symbols);
        return gen_greedy(params, preference, max_symbols);
    }
    throw DomainError("unknown algorithm");
}

} // namespace msdb
