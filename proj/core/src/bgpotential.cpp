#include "orbgw/bgpotential.hpp"

#include <functional>

namespace orbgw {

Rational bg_correlator_units(const OrbifoldData& orb, unsigned g,
                             const std::vector<std::pair<unsigned, Element>>& insertions,
                             PsiCache& psi) {
    Element prod = orb.identity();
    for (const auto& [a, h] : insertions) prod = orb.compose(prod, h);
    if (!(prod == orb.identity())) return Rational(0);
    std::vector<unsigned> exps;
    exps.reserve(insertions.size());
    for (const auto& [a, h] : insertions) exps.push_back(a);
    return pow_rational(Rational(static_cast<long>(orb.order())), 2l * g - 1) *
           psi.integral(g, std::move(exps));
}

Rational bg_correlator_canonical(
    const OrbifoldData& orb, unsigned g,
    const std::vector<std::pair<unsigned, Character>>& insertions,
    PsiCache& psi) {
    for (size_t j = 1; j < insertions.size(); ++j)
        if (!(insertions[j].second == insertions[0].second)) return Rational(0);
    std::vector<unsigned> exps;
    exps.reserve(insertions.size());
    for (const auto& [a, gamma] : insertions) exps.push_back(a);
    return pow_rational(Rational(static_cast<long>(orb.order())), 2l * g - 2) *
           psi.integral(g, std::move(exps));
}

namespace {

// Nondecreasing exponent multisets of given size and sum, entries <= cap.
void enumerate_multisets(unsigned size, unsigned sum, unsigned min_entry, unsigned cap,
                         std::vector<unsigned>& acc,
                         const std::function<void(const std::vector<unsigned>&)>& emit) {
    if (size == 0) {
        if (sum == 0) emit(acc);
        return;
    }
    for (unsigned a = min_entry; a <= cap && a <= sum; ++a) {
        acc.push_back(a);
        enumerate_multisets(size - 1, sum - a, a, cap, acc, emit);
        acc.pop_back();
    }
}

}  // namespace

Potential bg_log_potential(const OrbifoldData& orb, const PotentialBounds& bounds,
                           unsigned g_max, unsigned n_build_max, PsiCache& psi) {
    Potential pot(bounds, orb.rank(), static_cast<unsigned>(orb.exponent()));
    unsigned n_cap = std::min(n_build_max, bounds.n_max);
    for (unsigned g = 0; g <= g_max; ++g) {
        if (static_cast<int>(g) - 1 > bounds.hbar_max) break;
        for (unsigned n = 1; n <= n_cap; ++n) {
            if (2l * g - 2 + static_cast<long>(n) <= 0) continue;
            long dim = 3l * g - 3 + static_cast<long>(n);
            if (dim < 0) continue;
            unsigned sum = static_cast<unsigned>(dim);
            Rational prefactor =
                pow_rational(Rational(static_cast<long>(orb.order())), 2l * g - 2);
            std::vector<unsigned> acc;
            enumerate_multisets(
                n, sum, 0, bounds.a_max, acc, [&](const std::vector<unsigned>& exps) {
                    Rational value = prefactor * psi.integral(g, exps);
                    if (value == 0) return;
                    for (size_t gamma = 0; gamma < orb.order(); ++gamma) {
                        PotentialKey key;
                        key.hbar = static_cast<int>(g) - 1;
                        for (unsigned a : exps)
                            key.vars.emplace_back(static_cast<unsigned>(gamma), a);
                        Rational coeff = value / Rational(key.automorphisms());
                        pot.add_term(std::move(key),
                                     PuiseuxPoly::constant(
                                         orb.rank(), static_cast<unsigned>(orb.exponent()),
                                         coeff));
                    }
                });
        }
    }
    return pot;
}

}  // namespace orbgw
