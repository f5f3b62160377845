// Leaf, edge and vertex weights of stable labeled graphs and their assembly
// into descendant correlators. Two normalizations are supported:
//
//   twisted      - vertex |G|^{2g-2} <prod tau>, edge carries |G|^2, bare leaves;
//                  sums reproduce the twisted potential coefficients.
//   equivariant  - vertex (|G| sqrt(e1))^{2g-2+val}, edge without |G|^2, leaves
//                  divided by |G| sqrt(e1); sums give correlators of [C^r/G],
//                  related to the twisted ones by a factor e1^{g-1}.
//
// Ordinary-leaf weights contract R(-z) against the leaf's descendant series;
// dilaton leaves take the universal column sum of R(-z); an edge with heights
// (k,l) takes [z^k zeta^l] of (delta - R(-z)R(-zeta)^T)/(z+zeta), whose
// divisibility is itself a consistency check on the R-matrix.

#pragma once

#include "orbgw/graph.hpp"
#include "orbgw/psi.hpp"
#include "orbgw/rmatrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbgw {

enum class Normalization { twisted, equivariant };

struct DescendantSeries {
    // (character index, descendant index) -> coefficient
    std::map<std::pair<unsigned, unsigned>, CycRational> terms;

    bool empty() const { return terms.empty(); }
    static DescendantSeries monomial(unsigned gamma_idx, unsigned a, const CycRational& c);
};

struct CorrelatorRequest {
    unsigned genus = 0;
    std::vector<DescendantSeries> ordered;  // one series per ordered leaf
    DescendantSeries unordered_series;      // shared by all unordered leaves
    unsigned n_unordered = 0;
    Normalization norm = Normalization::twisted;
    unsigned order_override = 0;  // R-matrix truncation order; 0 = automatic
};

struct CorrelatorResult {
    PuiseuxPoly value;  // per Theorem conventions: <...>/n'! for n' unordered leaves
    size_t graph_count = 0;
    std::map<std::string, size_t> aut_histogram;  // |Aut| -> number of graphs
    std::vector<std::pair<LabeledGraph, PuiseuxPoly>> graphs;  // filled on request
};

class WeightEvaluator {
public:
    WeightEvaluator(const OrbifoldData& orb, unsigned order);

    const OrbifoldData& orbifold() const { return *orb_; }
    const RMatrix& rmatrix() const { return rmatrix_; }

    PuiseuxPoly leaf_ordinary(size_t alpha_idx, unsigned k, const DescendantSeries& u,
                              Normalization norm) const;
    PuiseuxPoly leaf_dilaton(size_t alpha_idx, unsigned k, Normalization norm) const;
    PuiseuxPoly edge_weight(size_t alpha_idx, size_t beta_idx, unsigned k, unsigned l,
                            Normalization norm) const;

    // Full product over vertices, edges and leaves; no 1/|Aut|.
    PuiseuxPoly graph_weight(const LabeledGraph& graph, const CorrelatorRequest& req,
                             PsiCache& psi = psi_cache()) const;

private:
    const TruncSeries& edge_quotient(size_t alpha_idx, size_t beta_idx) const;

    const OrbifoldData* orb_;
    RMatrix rmatrix_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<size_t, size_t>, TruncSeries> quotients_;
};

// Graph sum over all stable labeled graphs matching the request. Returns
// <u_1,...,u_n, u,...,u>/n'! (so n'=0 gives the bare ordered correlator).
CorrelatorResult correlator(const OrbifoldData& orb, const CorrelatorRequest& req,
                            bool emit_graphs = false, PsiCache& psi = psi_cache());

// All twisted correlators <tau_{a_1}(phi_{g_1}) ... tau_{a_n}(phi_{g_n})>_{g,n}
// with descendant sum <= a_sum_max, assembled in a single pass over the graph
// set. Keys are sorted (gamma, a) multisets.
std::map<std::vector<std::pair<unsigned, unsigned>>, PuiseuxPoly> twisted_correlator_table(
    const OrbifoldData& orb, unsigned g, unsigned n, unsigned a_sum_max,
    PsiCache& psi = psi_cache());

}  // namespace orbgw
