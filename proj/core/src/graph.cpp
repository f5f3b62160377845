#include "orbgw/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace orbgw {

void GraphEdge::normalize() {
    if (v1 > v2 || (v1 == v2 && k1 > k2)) {
        std::swap(v1, v2);
        std::swap(k1, k2);
    }
}

unsigned LabeledGraph::total_genus() const {
    long g = 1 + static_cast<long>(edges.size()) - static_cast<long>(genus.size());
    for (unsigned gv : genus) g += gv;
    return static_cast<unsigned>(g);
}

unsigned LabeledGraph::valence(unsigned v) const {
    unsigned val = 0;
    for (const auto& e : edges) {
        if (e.v1 == v) ++val;
        if (e.v2 == v) ++val;
    }
    for (const auto& [lv, k] : ordered)
        if (lv == v) ++val;
    for (const auto& [lv, k] : unordered)
        if (lv == v) ++val;
    for (const auto& [lv, k] : dilaton)
        if (lv == v) ++val;
    return val;
}

std::vector<unsigned> LabeledGraph::heights_at(unsigned v) const {
    std::vector<unsigned> ks;
    for (const auto& e : edges) {
        if (e.v1 == v) ks.push_back(e.k1);
        if (e.v2 == v) ks.push_back(e.k2);
    }
    for (const auto& [lv, k] : ordered)
        if (lv == v) ks.push_back(k);
    for (const auto& [lv, k] : unordered)
        if (lv == v) ks.push_back(k);
    for (const auto& [lv, k] : dilaton)
        if (lv == v) ks.push_back(k);
    return ks;
}

bool LabeledGraph::is_stable() const {
    for (unsigned v = 0; v < genus.size(); ++v)
        if (2l * genus[v] - 2 + static_cast<long>(valence(v)) <= 0) return false;
    return true;
}

bool LabeledGraph::is_balanced() const {
    for (unsigned v = 0; v < genus.size(); ++v) {
        auto ks = heights_at(v);
        long sum = std::accumulate(ks.begin(), ks.end(), 0l);
        if (sum != 3l * genus[v] - 3 + static_cast<long>(ks.size())) return false;
    }
    for (const auto& [lv, k] : dilaton)
        if (k < 2) return false;
    return true;
}

LabeledGraph LabeledGraph::relabeled(const std::vector<unsigned>& sigma) const {
    LabeledGraph out;
    size_t V = genus.size();
    out.genus.resize(V);
    out.marking.resize(V);
    for (unsigned v = 0; v < V; ++v) {
        out.genus[sigma[v]] = genus[v];
        out.marking[sigma[v]] = marking[v];
    }
    out.edges.reserve(edges.size());
    for (GraphEdge e : edges) {
        e.v1 = sigma[e.v1];
        e.v2 = sigma[e.v2];
        e.normalize();
        out.edges.push_back(e);
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.ordered.reserve(ordered.size());
    for (auto [v, k] : ordered) out.ordered.emplace_back(sigma[v], k);
    for (auto [v, k] : unordered) out.unordered.emplace_back(sigma[v], k);
    std::sort(out.unordered.begin(), out.unordered.end());
    for (auto [v, k] : dilaton) out.dilaton.emplace_back(sigma[v], k);
    std::sort(out.dilaton.begin(), out.dilaton.end());
    return out;
}

std::string LabeledGraph::encoding() const {
    std::ostringstream os;
    os << "g";
    for (unsigned x : genus) os << " " << x;
    os << "|m";
    for (unsigned x : marking) os << " " << x;
    os << "|e";
    for (const auto& e : edges) os << " " << e.v1 << "." << e.k1 << "-" << e.v2 << "." << e.k2;
    os << "|o";
    for (auto [v, k] : ordered) os << " " << v << "." << k;
    os << "|u";
    for (auto [v, k] : unordered) os << " " << v << "." << k;
    os << "|d";
    for (auto [v, k] : dilaton) os << " " << v << "." << k;
    return os.str();
}

std::string LabeledGraph::canonical_encoding() const {
    size_t V = genus.size();
    std::vector<unsigned> sigma(V);
    std::iota(sigma.begin(), sigma.end(), 0u);
    std::string best;
    do {
        std::string enc = relabeled(sigma).encoding();
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

Integer LabeledGraph::aut_order() const {
    size_t V = genus.size();

    std::map<GraphEdge, unsigned> edge_counts;
    unsigned symmetric_loops = 0;
    for (const auto& e : edges) {
        ++edge_counts[e];
        if (e.v1 == e.v2 && e.k1 == e.k2) ++symmetric_loops;
    }
    std::map<std::pair<unsigned, unsigned>, unsigned> unordered_counts, dilaton_counts;
    for (auto p : unordered) ++unordered_counts[p];
    for (auto p : dilaton) ++dilaton_counts[p];

    auto bijections = [](const auto& counts, const auto& image_counts) -> Integer {
        if (counts.size() != image_counts.size()) return Integer(0);
        Integer ways(1);
        auto it = counts.begin();
        auto jt = image_counts.begin();
        for (; it != counts.end(); ++it, ++jt) {
            if (it->first != jt->first || it->second != jt->second) return Integer(0);
            ways *= factorial(it->second);
        }
        return ways;
    };

    Integer total(0);
    std::vector<unsigned> sigma(V);
    std::iota(sigma.begin(), sigma.end(), 0u);
    do {
        bool ok = true;
        for (unsigned v = 0; v < V && ok; ++v)
            ok = genus[sigma[v]] == genus[v] && marking[sigma[v]] == marking[v];
        for (const auto& [v, k] : ordered)
            if (!ok || sigma[v] != v) {
                ok = false;
                break;
            }
        if (!ok) continue;

        std::map<GraphEdge, unsigned> image_edges;
        for (GraphEdge e : edges) {
            e.v1 = sigma[e.v1];
            e.v2 = sigma[e.v2];
            e.normalize();
            ++image_edges[e];
        }
        Integer ways = bijections(edge_counts, image_edges);
        if (ways == 0) continue;

        std::map<std::pair<unsigned, unsigned>, unsigned> image_u, image_d;
        for (auto [v, k] : unordered) ++image_u[{sigma[v], k}];
        for (auto [v, k] : dilaton) ++image_d[{sigma[v], k}];
        ways *= bijections(unordered_counts, image_u);
        if (ways == 0) continue;
        ways *= bijections(dilaton_counts, image_d);
        if (ways == 0) continue;

        total += ways;
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    Integer two_pow(1);
    two_pow <<= symmetric_loops;
    return total * two_pow;
}

namespace {

struct CoreGraph {
    std::vector<unsigned> genus;
    std::vector<std::pair<unsigned, unsigned>> edge_pairs;  // (v1 <= v2), multiset
    std::vector<unsigned> ordered_at;                       // vertex per ordered leaf
    std::vector<unsigned> unordered_count;                  // per vertex
};

bool connected(size_t V, const std::vector<std::pair<unsigned, unsigned>>& edge_pairs) {
    std::vector<unsigned> parent(V);
    std::iota(parent.begin(), parent.end(), 0u);
    std::function<unsigned(unsigned)> find = [&](unsigned x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edge_pairs) parent[find(a)] = find(b);
    for (unsigned v = 1; v < V; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

void enumerate_compositions(unsigned total, unsigned parts, std::vector<unsigned>& acc,
                            const std::function<void()>& emit) {
    if (parts == 0) {
        if (total == 0) emit();
        return;
    }
    if (parts == 1) {
        acc.push_back(total);
        emit();
        acc.pop_back();
        return;
    }
    for (unsigned a = 0; a <= total; ++a) {
        acc.push_back(a);
        enumerate_compositions(total - a, parts - 1, acc, emit);
        acc.pop_back();
    }
}

// Nondecreasing dilaton height tuples, entries >= max(2, min_entry),
// with sum(k-1) <= slack.
void enumerate_dilaton(unsigned slack, unsigned min_entry, std::vector<unsigned>& acc,
                       const std::function<void()>& emit) {
    emit();
    for (unsigned k = std::max(2u, min_entry); k - 1 <= slack; ++k) {
        acc.push_back(k);
        enumerate_dilaton(slack - (k - 1), k, acc, emit);
        acc.pop_back();
    }
}

// Per-vertex decoration: dilaton multiset plus heights on the vertex's core
// half-edge slots, exhausting the dimension budget exactly.
struct VertexDecoration {
    std::vector<unsigned> dilaton_heights;
    std::vector<unsigned> slot_heights;
};

std::vector<VertexDecoration> vertex_decorations(long budget, unsigned slot_count) {
    std::vector<VertexDecoration> out;
    if (budget < 0) return out;
    std::vector<unsigned> dil;
    enumerate_dilaton(static_cast<unsigned>(budget), 2, dil, [&]() {
        long used = 0;
        for (unsigned k : dil) used += static_cast<long>(k) - 1;
        long rem = budget - used;
        if (rem < 0) return;
        std::vector<unsigned> slots;
        enumerate_compositions(static_cast<unsigned>(rem), slot_count, slots, [&]() {
            out.push_back({dil, slots});
        });
    });
    return out;
}

}  // namespace

std::vector<LabeledGraph> enumerate_graphs(size_t num_markings, unsigned g,
                                           unsigned n_ordered, unsigned n_unordered) {
    std::map<std::string, LabeledGraph> found;

    unsigned n_total = n_ordered + n_unordered;
    unsigned vmax = std::max(1, 2 * static_cast<int>(g) - 2 + static_cast<int>(n_total));

    for (unsigned V = 1; V <= vmax; ++V) {
        // genus assignments
        std::vector<unsigned> gv(V, 0);
        std::function<void(unsigned, unsigned)> assign_genus = [&](unsigned v, unsigned left) {
            if (v == V) {
                long E = static_cast<long>(g) + V - 1;
                for (unsigned x : gv) E -= x;
                if (E < 0 || (V > 1 && E < static_cast<long>(V) - 1)) return;

                // edge multisets over vertex pairs
                std::vector<std::pair<unsigned, unsigned>> pairs;
                for (unsigned a = 0; a < V; ++a)
                    for (unsigned b = a; b < V; ++b) pairs.emplace_back(a, b);
                std::vector<std::pair<unsigned, unsigned>> chosen;
                std::function<void(size_t, long)> assign_edges = [&](size_t pi, long left_e) {
                    if (left_e == 0) {
                        if (!connected(V, chosen)) return;
                        // ordered leaf placements
                        std::vector<unsigned> oa(n_ordered, 0);
                        std::function<void(unsigned)> assign_ordered = [&](unsigned j) {
                            if (j == n_ordered) {
                                // unordered leaf distribution
                                std::vector<unsigned> uc;
                                enumerate_compositions(n_unordered, V, uc, [&]() {
                                    CoreGraph core{gv, chosen, oa, uc};
                                    // core stability
                                    std::vector<unsigned> val0(V, 0);
                                    for (auto [a, b] : chosen) {
                                        ++val0[a];
                                        ++val0[b];
                                    }
                                    for (unsigned x : oa) ++val0[x];
                                    for (unsigned v2 = 0; v2 < V; ++v2) val0[v2] += uc[v2];
                                    for (unsigned v2 = 0; v2 < V; ++v2)
                                        if (2l * gv[v2] - 2 + static_cast<long>(val0[v2]) <= 0)
                                            return;
                                    // decorate with dilaton leaves, heights, markings
                                    std::vector<std::vector<VertexDecoration>> opts(V);
                                    for (unsigned v2 = 0; v2 < V; ++v2) {
                                        long budget = 3l * gv[v2] - 3 + val0[v2];
                                        opts[v2] = vertex_decorations(budget, val0[v2]);
                                        if (opts[v2].empty()) return;
                                    }
                                    std::vector<size_t> pick(V, 0);
                                    while (true) {
                                        // assemble heights: per-vertex slot order is
                                        // edge-ends (in edge order), ordered leaves,
                                        // unordered leaves
                                        LabeledGraph base;
                                        base.genus = gv;
                                        base.marking.assign(V, 0);
                                        std::vector<unsigned> cursor(V, 0);
                                        auto next_slot = [&](unsigned v2) {
                                            return opts[v2][pick[v2]].slot_heights[cursor[v2]++];
                                        };
                                        base.edges.reserve(chosen.size());
                                        for (auto [a, b] : chosen) {
                                            GraphEdge e;
                                            e.v1 = a;
                                            e.v2 = b;
                                            e.k1 = next_slot(a);
                                            e.k2 = next_slot(b);
                                            e.normalize();
                                            base.edges.push_back(e);
                                        }
                                        std::sort(base.edges.begin(), base.edges.end());
                                        for (unsigned x : oa) base.ordered.emplace_back(x, next_slot(x));
                                        for (unsigned v2 = 0; v2 < V; ++v2)
                                            for (unsigned t = 0; t < uc[v2]; ++t)
                                                base.unordered.emplace_back(v2, next_slot(v2));
                                        std::sort(base.unordered.begin(), base.unordered.end());
                                        for (unsigned v2 = 0; v2 < V; ++v2)
                                            for (unsigned k : opts[v2][pick[v2]].dilaton_heights)
                                                base.dilaton.emplace_back(v2, k);
                                        std::sort(base.dilaton.begin(), base.dilaton.end());

                                        // markings multiply independently
                                        std::vector<size_t> mk(V, 0);
                                        while (true) {
                                            for (unsigned v2 = 0; v2 < V; ++v2)
                                                base.marking[v2] = static_cast<unsigned>(mk[v2]);
                                            std::string key = base.canonical_encoding();
                                            if (!found.count(key)) found.emplace(key, base);
                                            unsigned j2 = 0;
                                            while (j2 < V && ++mk[j2] == num_markings) mk[j2++] = 0;
                                            if (j2 == V) break;
                                        }

                                        unsigned j3 = 0;
                                        while (j3 < V && ++pick[j3] == opts[j3].size()) pick[j3++] = 0;
                                        if (j3 == V) break;
                                    }
                                });
                                return;
                            }
                            for (unsigned v2 = 0; v2 < V; ++v2) {
                                oa[j] = v2;
                                assign_ordered(j + 1);
                            }
                        };
                        assign_ordered(0);
                        return;
                    }
                    if (pi == pairs.size()) return;
                    // count of pairs[pi] from 0..left_e
                    for (long c = 0; c <= left_e; ++c) {
                        for (long t = 0; t < c; ++t) chosen.push_back(pairs[pi]);
                        assign_edges(pi + 1, left_e - c);
                        for (long t = 0; t < c; ++t) chosen.pop_back();
                    }
                };
                assign_edges(0, E);
                return;
            }
            for (unsigned x = 0; x <= left; ++x) {
                gv[v] = x;
                assign_genus(v + 1, left - x);
            }
        };
        assign_genus(0, g);
    }

    std::vector<LabeledGraph> out;
    out.reserve(found.size());
    for (auto& [key, graph] : found) out.push_back(std::move(graph));
    return out;
}

}  // namespace orbgw
