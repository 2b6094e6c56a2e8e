#include "msdb/graph.hpp"

#include <limits>

#include "msdb/errors.hpp"
#include "msdb/verify.hpp"

namespace msdb {

namespace {

constexpr std::uint64_t kArcRankCap = std::uint64_t{1} << 62;

// Bareiss fraction-free elimination; all divisions are exact.
BigCount determinant_fraction_free(std::vector<std::vector<BigCount>> m) {
    const std::size_t size = m.size();
    if (size == 0)
        return 1;
    BigCount divisor = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < size && m[pivot][k] == 0)
                ++pivot;
            if (pivot == size)
                return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i)
            for (std::size_t j = k + 1; j < size; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / divisor;
        divisor = m[k][k];
    }
    return sign < 0 ? BigCount(-m[size - 1][size - 1]) : m[size - 1][size - 1];
}

} // namespace

WordGraph::WordGraph(std::uint32_t alphabet, std::uint32_t shift, std::uint32_t order,
                     std::uint64_t max_vertices)
    : alphabet_(alphabet), shift_(shift), order_(order) {
    DbParams{alphabet, shift, order}.validate();
    const auto vertices = checked_pow(alphabet, order, max_vertices);
    if (!vertices)
        throw GuardError("graph construction exceeds the vertex guard");
    vertex_count_ = *vertices;
    const auto degree = checked_pow(alphabet, shift, kArcRankCap);
    if (!degree || *degree > kArcRankCap / vertex_count_)
        throw GuardError("arc ranks alphabet^(order+shift) exceed 64-bit range");
    degree_ = *degree;
    arc_count_ = vertex_count_ * degree_;
}

std::uint64_t WordGraph::multiplicity(std::uint64_t u, std::uint64_t v) const {
    if (u >= vertex_count_ || v >= vertex_count_)
        throw DomainError("vertex out of range");
    if (shift_ >= order_)
        return degree_ / vertex_count_; // a^(m-n) parallel arcs everywhere
    const std::uint64_t keep = vertex_count_ / degree_; // a^(n-m)
    return (u % keep) == (v / degree_) ? 1 : 0;
}

bool WordGraph::connected() const {
    const std::uint64_t keep = shift_ < order_ ? vertex_count_ / degree_ : 1;
    auto sweep = [&](bool forward) {
        std::vector<bool> visited(vertex_count_, false);
        std::vector<std::uint64_t> stack{0};
        visited[0] = true;
        std::uint64_t reached = 1;
        while (!stack.empty()) {
            const std::uint64_t v = stack.back();
            stack.pop_back();
            const std::uint64_t neighbors = shift_ < order_ ? degree_ : vertex_count_;
            for (std::uint64_t i = 0; i < neighbors; ++i) {
                std::uint64_t next;
                if (shift_ >= order_)
                    next = i;
                else if (forward)
                    next = (v % keep) * degree_ + i;
                else
                    next = i * keep + v / degree_;
                if (!visited[next]) {
                    visited[next] = true;
                    ++reached;
                    stack.push_back(next);
                }
            }
        }
        return reached == vertex_count_;
    };
    return sweep(true) && sweep(false);
}

Word WordGraph::vertex_word(std::uint64_t vertex) const {
    if (vertex >= vertex_count_)
        throw DomainError("vertex out of range");
    return unrank(vertex, order_, alphabet_);
}

Word WordGraph::arc_word(std::uint64_t arc) const {
    if (arc >= arc_count_)
        throw DomainError("arc out of range");
    return unrank(arc, order_ + shift_, alphabet_);
}

WordGraph build_word_graph(std::uint32_t alphabet, std::uint32_t shift, std::uint32_t order,
                           std::uint64_t max_vertices) {
    return WordGraph(alphabet, shift, order, max_vertices);
}

WordGraph arc_graph(const WordGraph& g, std::uint64_t max_vertices) {
    WordGraph result(g.alphabet(), g.shift(), g.order() + g.shift(), max_vertices);
    // Pair consecutive arcs of g explicitly and require the pairing to hit
    // the arc set of G(m, n+m) exactly once each, with matching incidence.
    std::vector<bool> produced(result.arc_count(), false);
    for (std::uint64_t first = 0; first < g.arc_count(); ++first) {
        const std::uint64_t via = g.arc_head(first);
        for (std::uint64_t i = 0; i < g.degree(); ++i) {
            const std::uint64_t second = g.out_arc(via, i);
            const std::uint64_t label = first * g.degree() + second % g.degree();
            if (result.arc_tail(label) != first || result.arc_head(label) != second)
                throw InternalError("arc-graph pairing disagrees with G(m, n+m)");
            if (produced[label])
                throw InternalError("arc-graph pairing produced a label twice");
            produced[label] = true;
        }
    }
    for (bool hit : produced)
        if (!hit)
            throw InternalError("arc-graph pairing missed a label");
    return result;
}

BigCount arborescence_count(const WordGraph& g, std::uint64_t max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw GuardError("arborescence determinant exceeds the vertex guard");
    const std::size_t count = static_cast<std::size_t>(g.vertex_count());
    if (count == 1)
        return 1;
    // Cofactor at the all-zero root: drop its row and column.
    std::vector<std::vector<BigCount>> laplacian(count - 1,
                                                 std::vector<BigCount>(count - 1, 0));
    for (std::size_t u = 1; u < count; ++u) {
        for (std::size_t v = 1; v < count; ++v) {
            if (u == v)
                laplacian[u - 1][v - 1] = BigCount(g.degree()) - g.multiplicity(u, u);
            else
                laplacian[u - 1][v - 1] = -BigCount(g.multiplicity(u, v));
        }
    }
    return determinant_fraction_free(std::move(laplacian));
}

BigCount euler_count_best(const WordGraph& g, std::uint64_t max_vertices,
                          std::uint64_t max_factorial_base) {
    if (g.degree() > max_factorial_base)
        throw GuardError("degree factorial exceeds the factorial guard");
    const BigCount arborescences = arborescence_count(g, max_vertices);
    return integer_pow(factorial(g.degree() - 1), g.vertex_count()) * arborescences;
}

BigCount count_euler_tours_anchored(std::uint64_t vertex_count,
                                    std::span<const std::pair<std::uint64_t, std::uint64_t>> arcs) {
    if (arcs.empty())
        return 1;
    std::vector<std::vector<std::size_t>> by_tail(vertex_count);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (arcs[i].first >= vertex_count || arcs[i].second >= vertex_count)
            throw DomainError("arc endpoint out of range");
        by_tail[arcs[i].first].push_back(i);
    }
    std::vector<bool> used(arcs.size(), false);
    const std::uint64_t home = arcs[0].first;
    std::uint64_t tours = 0;
    auto dfs = [&](auto&& self, std::uint64_t at, std::size_t remaining) -> void {
        if (remaining == 0) {
            if (at == home)
                ++tours;
            return;
        }
        for (std::size_t arc : by_tail[at]) {
            if (!used[arc]) {
                used[arc] = true;
                self(self, arcs[arc].second, remaining - 1);
                used[arc] = false;
            }
        }
    };
    used[0] = true;
    dfs(dfs, arcs[0].second, arcs.size() - 1);
    return tours;
}

BigCount euler_count_brute(const WordGraph& g, std::uint64_t max_arcs) {
    if (g.arc_count() > max_arcs)
        throw GuardError("brute-force tour count exceeds the arc guard");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> arcs;
    arcs.reserve(g.arc_count());
    for (std::uint64_t arc = 0; arc < g.arc_count(); ++arc)
        arcs.emplace_back(g.arc_tail(arc), g.arc_head(arc));
    return count_euler_tours_anchored(g.vertex_count(), arcs);
}

Word sequence_from_euler(const WordGraph& g, std::span<const std::uint64_t> tour,
                         std::size_t start_index) {
    if (tour.size() != g.arc_count())
        throw DomainError("tour must use every arc exactly once");
    if (start_index >= tour.size())
        throw DomainError("start index out of range");
    std::vector<bool> used(g.arc_count(), false);
    for (std::size_t i = 0; i < tour.size(); ++i) {
        if (tour[i] >= g.arc_count() || used[tour[i]])
            throw DomainError("tour repeats or exceeds the arc set");
        used[tour[i]] = true;
        const std::uint64_t next = tour[(i + 1) % tour.size()];
        if (g.arc_head(tour[i]) != g.arc_tail(next))
            throw DomainError("tour is not a closed walk");
    }

    const std::uint32_t n = g.order() + g.shift();
    std::vector<Symbol> out;
    out.reserve(n + (tour.size() - 1) * g.shift());
    const Word head = g.arc_word(tour[start_index]);
    out.insert(out.end(), head.symbols().begin(), head.symbols().end());
    for (std::size_t step = 1; step < tour.size(); ++step) {
        const std::uint64_t arc = tour[(start_index + step) % tour.size()];
        const Word suffix = unrank(arc % g.degree(), g.shift(), g.alphabet());
        out.insert(out.end(), suffix.symbols().begin(), suffix.symbols().end());
    }
    return Word(std::move(out));
}

std::vector<std::uint64_t> euler_from_sequence(const Word& w, const DbParams& params) {
    params.validate();
    if (params.order <= params.shift)
        throw DomainError("sequence-to-tour mapping requires order > shift");
    if (!is_multishift_db(w, params).ok)
        throw DomainError("word is not an m-shift de Bruijn sequence of order n");
    std::vector<std::uint64_t> tour;
    for (const Word& window : modulo_factors(w, params.shift, params.order))
        tour.push_back(rank(window, params.alphabet));
    return tour;
}

} // namespace msdb
