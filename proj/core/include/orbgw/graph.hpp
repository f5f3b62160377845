// Stable labeled graphs: connected multigraphs with per-vertex genus and
// character marking, half-edge heights, ordered and unordered ordinary
// leaves, and dilaton leaves of height >= 2. Every vertex satisfies the
// stability bound 2g(v)-2+val(v) > 0 and the dimension balance
// sum of heights at v = 3g(v)-3+val(v); the total genus is
// sum g(v) + |E| - |V| + 1.
//
// Enumeration emits one representative per isomorphism class (isomorphisms
// permute vertices, edges, unordered and dilaton leaves and may swap the two
// halves of an edge, but fix every ordered leaf pointwise). Automorphism
// orders are counted by brute force over label-preserving vertex
// permutations, which is the regime this library targets.

#pragma once

#include "orbgw/rational.hpp"

#include <string>
#include <vector>

namespace orbgw {

struct GraphEdge {
    unsigned v1 = 0, v2 = 0;  // endpoints, v1 <= v2 after normalize()
    unsigned k1 = 0, k2 = 0;  // heights at the v1- and v2-ends

    void normalize();
    auto operator<=>(const GraphEdge&) const = default;
};

struct LabeledGraph {
    std::vector<unsigned> genus;
    std::vector<unsigned> marking;                         // character indices
    std::vector<GraphEdge> edges;                          // sorted
    std::vector<std::pair<unsigned, unsigned>> ordered;    // (vertex, height), positional
    std::vector<std::pair<unsigned, unsigned>> unordered;  // sorted multiset
    std::vector<std::pair<unsigned, unsigned>> dilaton;    // sorted multiset, height >= 2

    size_t num_vertices() const { return genus.size(); }
    unsigned total_genus() const;
    unsigned valence(unsigned v) const;  // all incident half-edges
    std::vector<unsigned> heights_at(unsigned v) const;
    bool is_stable() const;
    bool is_balanced() const;

    LabeledGraph relabeled(const std::vector<unsigned>& sigma) const;  // sigma[old]=new
    std::string encoding() const;
    std::string canonical_encoding() const;

    Integer aut_order() const;
};

// All stable labeled graphs of total genus g with n ordered and n_unordered
// unordered ordinary leaves, markings drawn from num_markings characters.
// Deterministic order (sorted by canonical encoding).
std::vector<LabeledGraph> enumerate_graphs(size_t num_markings, unsigned g,
                                           unsigned n_ordered, unsigned n_unordered);

}  // namespace orbgw
