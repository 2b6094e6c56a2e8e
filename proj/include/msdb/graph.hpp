#pragma once

// The word graph G(m,n): vertices are all words of length n, arcs are all
// words of length n+m, and arc w joins w[1..n] to w[m+1..m+n]. Euler tours
// of G(m, n-m) correspond a^n-to-1 to m-shift sequences of order n.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "msdb/bigcount.hpp"
#include "msdb/limits.hpp"
#include "msdb/word.hpp"

namespace msdb {

class WordGraph {
public:
    WordGraph(std::uint32_t alphabet, std::uint32_t shift, std::uint32_t order,
              std::uint64_t max_vertices = limits::kMaxGraphVertices);

    std::uint32_t alphabet() const { return alphabet_; }
    std::uint32_t shift() const { return shift_; }
    std::uint32_t order() const { return order_; }

    std::uint64_t vertex_count() const { return vertex_count_; } // a^n
    std::uint64_t arc_count() const { return arc_count_; }       // a^(n+m)
    std::uint64_t degree() const { return degree_; }             // a^m, in and out

    std::uint64_t arc_tail(std::uint64_t arc) const { return arc / degree_; }
    std::uint64_t arc_head(std::uint64_t arc) const { return arc % vertex_count_; }
    std::uint64_t out_arc(std::uint64_t vertex, std::uint64_t index) const {
        return vertex * degree_ + index;
    }

    // Number of arcs joining u to v.
    std::uint64_t multiplicity(std::uint64_t u, std::uint64_t v) const;

    // Strong connectivity, established through the all-zero vertex.
    bool connected() const;

    Word vertex_word(std::uint64_t vertex) const;
    Word arc_word(std::uint64_t arc) const;

private:
    std::uint32_t alphabet_;
    std::uint32_t shift_;
    std::uint32_t order_;
    std::uint64_t vertex_count_;
    std::uint64_t degree_;
    std::uint64_t arc_count_;
};

WordGraph build_word_graph(std::uint32_t alphabet, std::uint32_t shift, std::uint32_t order,
                           std::uint64_t max_vertices = limits::kMaxGraphVertices);

// G(m,n)* = G(m,n+m). Returns the latter after validating, arc for arc, that
// pairing consecutive arcs of g reproduces it exactly.
WordGraph arc_graph(const WordGraph& g,
                    std::uint64_t max_vertices = limits::kMaxGraphVertices);

// Spanning arborescences via the cofactor of the directed Laplacian
// (out-degree diagonal minus adjacency, self-loops cancelled), rooted at the
// all-zero vertex, computed by fraction-free integer elimination.
BigCount arborescence_count(const WordGraph& g,
                            std::uint64_t max_vertices = limits::kMaxDeterminantVertices);

// Euler tours up to circular shift: ((a^m - 1)!)^(a^n) * arborescence_count.
BigCount euler_count_best(const WordGraph& g,
                          std::uint64_t max_vertices = limits::kMaxDeterminantVertices,
                          std::uint64_t max_factorial_base = limits::kMaxFactorialBase);

// Exhaustive backtracking oracle. Rotation classes are counted by fixing the
// lexicographically least arc as the first arc of the walk.
BigCount euler_count_brute(const WordGraph& g,
                           std::uint64_t max_arcs = limits::kMaxBruteForceArcs);

// Same oracle over an explicit arc list (tail, head), anchored at arcs[0].
BigCount count_euler_tours_anchored(std::uint64_t vertex_count,
                                    std::span<const std::pair<std::uint64_t, std::uint64_t>> arcs);

// Unroll an Euler tour of g = G(m, n-m) into an m-shift sequence of order
// n = g.order() + g.shift(), starting from the chosen position in the tour.
Word sequence_from_euler(const WordGraph& g, std::span<const std::uint64_t> tour,
                         std::size_t start_index);

// Inverse direction: the modulo-m windows of a verified sequence, as arc
// ranks of G(m, n-m), in traversal order.
std::vector<std::uint64_t> euler_from_sequence(const Word& w, const DbParams& params);

} // namespace msdb
