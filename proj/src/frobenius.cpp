#include "msdb/frobenius.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "msdb/errors.hpp"
#include "msdb/generate.hpp"
#include "msdb/verify.hpp"

namespace msdb {

namespace {

constexpr std::uint64_t kRankCap = std::uint64_t{1} << 62;

} // namespace

std::int64_t frobenius_number(std::uint64_t m, std::uint64_t l) {
    if (m < 2 || l < 2)
        throw DomainError("frobenius number requires both generators to be at least 2");
    if (std::gcd(m, l) != 1)
        throw DomainError("frobenius number requires coprime generators");
    if (m > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) / l)
        throw DomainError("frobenius number overflows 64 bits");
    return static_cast<std::int64_t>(m * l - m - l);
}

std::uint64_t FrobeniusInstance::generator_count() const {
    const auto power = checked_pow(alphabet, long_length - short_length, kRankCap);
    return short_length * *power + long_length - short_length;
}

FrobeniusInstance build_instance(std::uint32_t alphabet, std::uint32_t short_length,
                                 std::uint32_t long_length, std::optional<Word> tau) {
    if (short_length < 1 || short_length >= long_length)
        throw DomainError("instance requires 0 < m < n");
    if (std::gcd(short_length, long_length - short_length) != 1)
        throw DomainError("instance requires gcd(m, n-m) = 1 for a finite bound");
    const DbParams tau_params{alphabet, short_length,
                              static_cast<std::uint32_t>(long_length - short_length)};
    tau_params.validate();
    if (!checked_pow(alphabet, long_length, kRankCap))
        throw GuardError("window ranks alphabet^n exceed 64-bit range");

    FrobeniusInstance instance;
    instance.alphabet = alphabet;
    instance.short_length = short_length;
    instance.long_length = long_length;
    if (tau) {
        if (!is_multishift_db(*tau, tau_params).ok)
            throw DomainError("tau is not an m-shift de Bruijn sequence of order n-m");
        instance.tau = std::move(*tau);
    } else {
        instance.tau = generate(tau_params, Algorithm::Auto);
    }

    // The length-n windows of tau at modulo-m positions. tau can be shorter
    // than n only when it exhausts Sigma^(n-m) trivially (a = 1).
    if (instance.tau.size() >= long_length)
        instance.excluded = modulo_factors(instance.tau, short_length, long_length);
    for (const Word& w : instance.excluded)
        instance.excluded_ranks.insert(rank(w, alphabet));

    const auto windows = checked_pow(alphabet, long_length - short_length, kRankCap);
    if (instance.excluded.size() != *windows - 1 ||
        instance.excluded_ranks.size() != instance.excluded.size())
        throw InternalError("excluded set does not have a^(n-m) - 1 distinct windows");
    return instance;
}

bool is_representable(const Word& w, const FrobeniusInstance& instance) {
    const std::uint64_t a = instance.alphabet;
    for (Symbol s : w.symbols())
        if (s >= a)
            throw DomainError("symbol outside alphabet");
    const std::uint32_t m = instance.short_length;
    const std::uint32_t n = instance.long_length;
    const std::uint64_t keep = *checked_pow(a, n - 1, kRankCap);

    std::vector<char> representable(w.size() + 1, 0);
    representable[0] = 1;
    std::uint64_t window = 0; // rank of the last min(i, n) symbols
    for (std::size_t i = 1; i <= w.size(); ++i) {
        window = (window % keep) * a + w[i - 1];
        bool ok = i >= m && representable[i - m];
        if (!ok && i >= n && representable[i - n] && !instance.excluded_ranks.contains(window))
            ok = true;
        representable[i] = ok;
    }
    return representable[w.size()];
}

namespace {

// Deterministic scan state: the last min(i, n-1) symbols of the prefix plus
// the representability bits of its last min(i+1, n) lengths. Prefixes
// shorter than n-1 keep their exact length, so no guard conditions on i are
// lost by the truncation.
struct ScanAutomaton {
    struct Node {
        std::vector<std::uint32_t> next;
        bool rejecting = false; // current prefix not representable
    };
    std::vector<Node> nodes;
    std::uint32_t initial = 0;
};

ScanAutomaton build_automaton(const FrobeniusInstance& instance, std::uint64_t max_states) {
    const std::uint64_t a = instance.alphabet;
    const std::uint32_t m = instance.short_length;
    const std::uint32_t n = instance.long_length;
    if (n >= 58)
        throw GuardError("automaton state space exceeds the state guard");
    const auto history = checked_pow(a, n - 1, max_states);
    if (!history || *history > max_states >> n)
        throw GuardError("automaton state space a^(n-1) * 2^n exceeds the state guard");

    struct Key {
        std::uint32_t depth;
        std::uint64_t hist;
        std::uint64_t bits;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::uint64_t h = k.hist * 1000003u + k.bits;
            return std::hash<std::uint64_t>{}(h * 131u + k.depth);
        }
    };

    ScanAutomaton automaton;
    std::unordered_map<Key, std::uint32_t, KeyHash> ids;
    std::vector<Key> pending;
    auto intern = [&](const Key& key) {
        auto [it, inserted] = ids.try_emplace(key, static_cast<std::uint32_t>(automaton.nodes.size()));
        if (inserted) {
            automaton.nodes.push_back({std::vector<std::uint32_t>(a, 0), (key.bits & 1) == 0});
            if (automaton.nodes.size() > 4 * max_states)
                throw GuardError("automaton grew beyond the state guard");
            pending.push_back(key);
        }
        return it->second;
    };

    const std::uint64_t keep = n >= 2 ? *checked_pow(a, n - 2, kRankCap) : 1;
    const Key start{0, 0, 1}; // empty prefix, only the empty word bit set
    automaton.initial = intern(start);
    for (std::size_t cursor = 0; cursor < pending.size(); ++cursor) {
        const Key key = pending[cursor];
        const std::uint32_t id = ids.at(key);
        const bool full = key.depth == n - 1;
        for (std::uint64_t s = 0; s < a; ++s) {
            bool bit = key.depth + 1 >= m && ((key.bits >> (m - 1)) & 1);
            if (!bit && full && ((key.bits >> (n - 1)) & 1)) {
                const std::uint64_t window = key.hist * a + s;
                bit = !instance.excluded_ranks.contains(window);
            }
            Key next;
            next.depth = full ? key.depth : key.depth + 1;
            next.hist = full ? (key.hist % keep) * a + s : key.hist * a + s;
            next.bits = ((key.bits << 1) | (bit ? 1 : 0)) &
                        ((std::uint64_t{1} << (next.depth + 1)) - 1);
            automaton.nodes[id].next[s] = intern(next);
        }
    }
    return automaton;
}

} // namespace

LongestReport longest_nonrepresentable(const FrobeniusInstance& instance,
                                       std::uint64_t max_states) {
    const ScanAutomaton automaton = build_automaton(instance, max_states);
    const std::size_t total = automaton.nodes.size();

    // States from which a rejecting configuration is still reachable.
    std::vector<std::vector<std::uint32_t>> reverse(total);
    for (std::size_t q = 0; q < total; ++q)
        for (std::uint32_t t : automaton.nodes[q].next)
            reverse[t].push_back(static_cast<std::uint32_t>(q));
    std::vector<bool> live(total, false);
    std::vector<std::uint32_t> stack;
    for (std::size_t q = 0; q < total; ++q) {
        if (automaton.nodes[q].rejecting) {
            live[q] = true;
            stack.push_back(static_cast<std::uint32_t>(q));
        }
    }
    while (!stack.empty()) {
        const std::uint32_t q = stack.back();
        stack.pop_back();
        for (std::uint32_t p : reverse[q]) {
            if (!live[p]) {
                live[p] = true;
                stack.push_back(p);
            }
        }
    }

    LongestReport report;
    if (!live[automaton.initial]) {
        // Every word is representable.
        report.words.emplace();
        return report;
    }

    // Kahn peel over the live subgraph; leftovers mean arbitrarily long
    // non-representable words exist.
    std::vector<std::uint32_t> indegree(total, 0);
    for (std::size_t q = 0; q < total; ++q)
        if (live[q])
            for (std::uint32_t t : automaton.nodes[q].next)
                if (live[t])
                    ++indegree[t];
    std::vector<std::uint32_t> order;
    for (std::size_t q = 0; q < total; ++q)
        if (live[q] && indegree[q] == 0)
            order.push_back(static_cast<std::uint32_t>(q));
    for (std::size_t cursor = 0; cursor < order.size(); ++cursor)
        for (std::uint32_t t : automaton.nodes[order[cursor]].next)
            if (live[t] && --indegree[t] == 0)
                order.push_back(t);
    std::size_t live_count = 0;
    for (std::size_t q = 0; q < total; ++q)
        live_count += live[q];
    if (order.size() != live_count) {
        report.finite = false;
        return report;
    }

    // Longest distance to a rejecting state, then the word count and, when
    // small enough, the words themselves along distance-decreasing edges.
    constexpr std::int64_t kUnset = -1;
    std::vector<std::int64_t> longest(total, kUnset);
    std::vector<BigCount> ways(total, 0);
    for (std::size_t cursor = order.size(); cursor-- > 0;) {
        const std::uint32_t q = order[cursor];
        std::int64_t best = automaton.nodes[q].rejecting ? 0 : kUnset;
        for (std::uint32_t t : automaton.nodes[q].next)
            if (live[t] && longest[t] != kUnset)
                best = std::max(best, longest[t] + 1);
        longest[q] = best;
        if (best == 0) {
            ways[q] = 1;
        } else {
            BigCount sum = 0;
            for (std::uint32_t t : automaton.nodes[q].next)
                if (live[t] && longest[t] == best - 1)
                    sum += ways[t];
            ways[q] = sum;
        }
    }

    report.max_length = longest[automaton.initial];
    report.word_count = ways[automaton.initial];
    if (report.word_count <= limits::kMaxLongestWords) {
        std::vector<Word> words;
        std::vector<Symbol> symbols;
        auto dig = [&](auto&& self, std::uint32_t q, std::int64_t remaining) -> void {
            if (remaining == 0) {
                words.emplace_back(symbols);
                return;
            }
            for (std::uint64_t s = 0; s < instance.alphabet; ++s) {
                const std::uint32_t t = automaton.nodes[q].next[s];
                if (live[t] && longest[t] == remaining - 1) {
                    symbols.push_back(static_cast<Symbol>(s));
                    self(self, t, remaining - 1);
                    symbols.pop_back();
                }
            }
        };
        dig(dig, automaton.initial, report.max_length);
        report.words = std::move(words);
    }
    return report;
}

std::vector<Word> theorem_language(const FrobeniusInstance& instance, std::uint64_t max_words) {
    const std::uint32_t m = instance.short_length;
    if (m < 2)
        throw DomainError("the longest-word language is defined for m >= 2");
    const std::uint32_t fillers = m - 2;
    const auto count = checked_pow(instance.alphabet, static_cast<std::uint64_t>(m) * fillers,
                                   max_words);
    if (!count)
        throw GuardError("language size alphabet^(m(m-2)) exceeds the word guard");

    std::vector<Word> words;
    words.reserve(*count);
    for (std::uint64_t code = 0; code < *count; ++code) {
        const Word glue = unrank(code, static_cast<std::size_t>(m) * fillers, instance.alphabet);
        std::vector<Symbol> symbols(instance.tau.symbols());
        for (std::uint32_t block = 0; block < fillers; ++block) {
            for (std::uint32_t s = 0; s < m; ++s)
                symbols.push_back(glue[static_cast<std::size_t>(block) * m + s]);
            symbols.insert(symbols.end(), instance.tau.symbols().begin(),
                           instance.tau.symbols().end());
        }
        words.emplace_back(std::move(symbols));
    }
    return words;
}

} // namespace msdb
