#include "orbgw/graphsum.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbgw {

DescendantSeries DescendantSeries::monomial(unsigned gamma_idx, unsigned a,
                                            const CycRational& c) {
    DescendantSeries s;
    if (!c.is_zero()) s.terms[{gamma_idx, a}] = c;
    return s;
}

WeightEvaluator::WeightEvaluator(const OrbifoldData& orb, unsigned order)
    : orb_(&orb), rmatrix_(orb, order) {}

PuiseuxPoly WeightEvaluator::leaf_ordinary(size_t alpha_idx, unsigned k,
                                           const DescendantSeries& u,
                                           Normalization norm) const {
    unsigned N = static_cast<unsigned>(orb_->exponent());
    PuiseuxPoly sum(orb_->rank(), N);
    for (const auto& [key, coeff] : u.terms) {
        const auto& [beta, a] = key;
        if (a > k) continue;
        if (k - a > rmatrix_.order())
            throw std::invalid_argument("leaf_ordinary: R-matrix order too small");
        PuiseuxPoly rc = rmatrix_.coeff_neg(beta, alpha_idx, k - a);
        if (rc.is_zero()) continue;
        rc *= coeff;
        sum += rc;
    }
    if (norm == Normalization::equivariant && !sum.is_zero()) {
        sum /= Rational(static_cast<long>(orb_->order()));
        sum.shift(orb_->sqrt_e1().inverse());
    }
    return sum;
}

PuiseuxPoly WeightEvaluator::leaf_dilaton(size_t alpha_idx, unsigned k,
                                          Normalization norm) const {
    if (k < 2) throw std::invalid_argument("leaf_dilaton: height must be >= 2");
    if (k - 1 > rmatrix_.order())
        throw std::invalid_argument("leaf_dilaton: R-matrix order too small");
    unsigned N = static_cast<unsigned>(orb_->exponent());
    PuiseuxPoly sum(orb_->rank(), N);
    for (size_t beta = 0; beta < orb_->order(); ++beta)
        sum += rmatrix_.coeff_neg(beta, alpha_idx, k - 1);
    sum = -sum;
    if (norm == Normalization::equivariant && !sum.is_zero()) {
        sum /= Rational(static_cast<long>(orb_->order()));
        sum.shift(orb_->sqrt_e1().inverse());
    }
    return sum;
}

const TruncSeries& WeightEvaluator::edge_quotient(size_t alpha_idx,
                                                  size_t beta_idx) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = quotients_.find({alpha_idx, beta_idx});
    if (it != quotients_.end()) return it->second;

    unsigned K = rmatrix_.order();
    unsigned N = static_cast<unsigned>(orb_->exponent());
    TruncSeries numerator(2, K, orb_->rank(), N);
    if (alpha_idx == beta_idx)
        numerator.set_coeff(0, 0, PuiseuxPoly::constant(orb_->rank(), N, Rational(1)));
    for (size_t gamma = 0; gamma < orb_->order(); ++gamma) {
        TruncSeries prod = outer_product(rmatrix_.entry_neg(gamma, alpha_idx),
                                         rmatrix_.entry_neg(gamma, beta_idx), K);
        numerator -= prod;
    }
    // Divisibility by z+zeta is the symplectic identity for R; a failure here
    // means the R-matrix itself is wrong.
    TruncSeries q = divide_by_z_plus_zeta(numerator);
    return quotients_.emplace(std::make_pair(alpha_idx, beta_idx), std::move(q))
        .first->second;
}

PuiseuxPoly WeightEvaluator::edge_weight(size_t alpha_idx, size_t beta_idx, unsigned k,
                                         unsigned l, Normalization norm) const {
    const TruncSeries& q = edge_quotient(alpha_idx, beta_idx);
    if (k + l > q.order())
        throw std::invalid_argument("edge_weight: R-matrix order too small");
    PuiseuxPoly w = q.coeff(k, l);
    if (norm == Normalization::twisted)
        w *= Rational(static_cast<long>(orb_->order() * orb_->order()));
    return w;
}

PuiseuxPoly WeightEvaluator::graph_weight(const LabeledGraph& graph,
                                          const CorrelatorRequest& req,
                                          PsiCache& psi) const {
    unsigned N = static_cast<unsigned>(orb_->exponent());
    long order = static_cast<long>(orb_->order());
    PuiseuxPoly w = PuiseuxPoly::constant(orb_->rank(), N, Rational(1));

    for (unsigned v = 0; v < graph.num_vertices(); ++v) {
        Rational value = psi.integral(graph.genus[v], graph.heights_at(v));
        if (value == 0) return PuiseuxPoly(orb_->rank(), N);
        PuiseuxPoly vertex = PuiseuxPoly::constant(orb_->rank(), N, value);
        long expo = 2l * graph.genus[v] - 2;
        if (req.norm == Normalization::twisted) {
            vertex *= pow_rational(Rational(order), expo);
        } else {
            long e = expo + static_cast<long>(graph.valence(v));
            vertex *= pow_rational(Rational(order), e);
            vertex.shift(orb_->sqrt_e1().pow(Rational(e)));
        }
        w *= vertex;
    }

    for (const auto& e : graph.edges) {
        PuiseuxPoly ew = edge_weight(graph.marking[e.v1], graph.marking[e.v2], e.k1,
                                     e.k2, req.norm);
        if (ew.is_zero()) return PuiseuxPoly(orb_->rank(), N);
        w *= ew;
    }

    for (size_t j = 0; j < graph.ordered.size(); ++j) {
        const auto& [v, k] = graph.ordered[j];
        PuiseuxPoly lw = leaf_ordinary(graph.marking[v], k, req.ordered[j], req.norm);
        if (lw.is_zero()) return PuiseuxPoly(orb_->rank(), N);
        w *= lw;
    }
    for (const auto& [v, k] : graph.unordered) {
        PuiseuxPoly lw = leaf_ordinary(graph.marking[v], k, req.unordered_series, req.norm);
        if (lw.is_zero()) return PuiseuxPoly(orb_->rank(), N);
        w *= lw;
    }
    for (const auto& [v, k] : graph.dilaton) {
        PuiseuxPoly lw = leaf_dilaton(graph.marking[v], k, req.norm);
        if (lw.is_zero()) return PuiseuxPoly(orb_->rank(), N);
        w *= lw;
    }
    return w;
}

namespace {

// Heights never exceed 3g-3+n_total, and edge lookups need one more order.
unsigned default_order(unsigned g, unsigned n_total) {
    long k = 3l * g - 3 + static_cast<long>(n_total) + 1;
    return k < 1 ? 1u : static_cast<unsigned>(k);
}

}  // namespace

CorrelatorResult correlator(const OrbifoldData& orb, const CorrelatorRequest& req,
                            bool emit_graphs, PsiCache& psi) {
    unsigned n = static_cast<unsigned>(req.ordered.size());
    unsigned n_total = n + req.n_unordered;
    unsigned order = req.order_override ? req.order_override
                                        : default_order(req.genus, n_total);
    WeightEvaluator eval(orb, order);

    CorrelatorResult out;
    out.value = PuiseuxPoly(orb.rank(), static_cast<unsigned>(orb.exponent()));
    std::vector<LabeledGraph> graphs =
        enumerate_graphs(orb.order(), req.genus, n, req.n_unordered);
    out.graph_count = graphs.size();
    for (const LabeledGraph& graph : graphs) {
        Integer aut = graph.aut_order();
        ++out.aut_histogram[aut.get_str()];
        PuiseuxPoly w = eval.graph_weight(graph, req, psi);
        if (emit_graphs) out.graphs.emplace_back(graph, w);
        if (w.is_zero()) continue;
        w /= Rational(aut);
        out.value += w;
    }
    return out;
}

std::map<std::vector<std::pair<unsigned, unsigned>>, PuiseuxPoly> twisted_correlator_table(
    const OrbifoldData& orb, unsigned g, unsigned n, unsigned a_sum_max, PsiCache& psi) {
    if (n == 0) throw std::invalid_argument("twisted_correlator_table: n >= 1 required");
    unsigned N = static_cast<unsigned>(orb.exponent());
    unsigned order = default_order(g, n);
    WeightEvaluator eval(orb, order);

    std::map<std::vector<std::pair<unsigned, unsigned>>, PuiseuxPoly> table;
    std::vector<LabeledGraph> graphs = enumerate_graphs(orb.order(), g, n, 0);
    long group_order = static_cast<long>(orb.order());

    for (const LabeledGraph& graph : graphs) {
        // twisted weight with the ordered-leaf factors left out (vertex
        // psi-integrals still see the full height data, leaves included)
        PuiseuxPoly core = PuiseuxPoly::constant(orb.rank(), N, Rational(1));
        for (unsigned v = 0; v < graph.num_vertices() && !core.is_zero(); ++v) {
            Rational value = psi.integral(graph.genus[v], graph.heights_at(v));
            core *= value * pow_rational(Rational(group_order),
                                         2l * graph.genus[v] - 2);
        }
        for (const auto& e : graph.edges) {
            if (core.is_zero()) break;
            core *= eval.edge_weight(graph.marking[e.v1], graph.marking[e.v2], e.k1,
                                     e.k2, Normalization::twisted);
        }
        for (const auto& [v, k] : graph.dilaton) {
            if (core.is_zero()) break;
            core *= eval.leaf_dilaton(graph.marking[v], k, Normalization::twisted);
        }
        if (core.is_zero()) continue;
        core /= Rational(graph.aut_order());

        // per-leaf insertion options: (gamma, a) with nonzero R(-z) coefficient
        std::vector<std::vector<std::pair<std::pair<unsigned, unsigned>, PuiseuxPoly>>>
            options(n);
        bool feasible = true;
        for (size_t j = 0; j < n && feasible; ++j) {
            const auto& [v, k] = graph.ordered[j];
            for (unsigned gamma = 0; gamma < orb.order(); ++gamma) {
                for (unsigned a = 0; a <= std::min(k, a_sum_max); ++a) {
                    PuiseuxPoly c = eval.rmatrix().coeff_neg(gamma, graph.marking[v], k - a);
                    if (!c.is_zero()) options[j].push_back({{gamma, a}, std::move(c)});
                }
            }
            feasible = !options[j].empty();
        }
        if (!feasible) continue;

        // accumulate core * prod(options) into the sorted-multiset table
        std::vector<size_t> pick(n, 0);
        while (true) {
            unsigned a_sum = 0;
            for (size_t j = 0; j < n; ++j) a_sum += options[j][pick[j]].first.second;
            if (a_sum <= a_sum_max) {
                PuiseuxPoly w = core;
                std::vector<std::pair<unsigned, unsigned>> key;
                key.reserve(n);
                for (size_t j = 0; j < n; ++j) {
                    w *= options[j][pick[j]].second;
                    key.push_back(options[j][pick[j]].first);
                }
                if (!w.is_zero()) {
                    std::sort(key.begin(), key.end());
                    auto [it, inserted] = table.try_emplace(key, w);
                    if (!inserted) it->second += w;
                }
            }
            size_t j = 0;
            while (j < n && ++pick[j] == options[j].size()) pick[j++] = 0;
            if (j == n) break;
        }
    }

    // each multiset was accumulated once per ordering of its insertions
    for (auto it = table.begin(); it != table.end();) {
        Integer aut(1);
        size_t i = 0;
        const auto& key = it->first;
        while (i < key.size()) {
            size_t j = i;
            while (j < key.size() && key[j] == key[i]) ++j;
            aut *= factorial(j - i);
            i = j;
        }
        Rational orderings = Rational(factorial(n)) / Rational(aut);
        it->second /= orderings;
        if (it->second.is_zero())
            it = table.erase(it);
        else
            ++it;
    }
    return table;
}

}  // namespace orbgw
