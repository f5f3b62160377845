// Descendant correlators of the classifying stack BG and the truncated
// logarithm of its total descendant potential. Correlators reduce to scaled
// psi-integrals with a selection rule: in the unit basis {1_h} the insertions
// must multiply to the identity, in the canonical basis {phi_gamma} they must
// all carry the same character.

#pragma once

#include "orbgw/groupchar.hpp"
#include "orbgw/potential.hpp"
#include "orbgw/psi.hpp"

#include <vector>

namespace orbgw {

// <tau_{a_1}(1_{h_1}) ... >_g = |G|^{2g-1} * psi when prod h_j = 1, else 0.
Rational bg_correlator_units(const OrbifoldData& orb, unsigned g,
                             const std::vector<std::pair<unsigned, Element>>& insertions,
                             PsiCache& psi = psi_cache());

// <tau_{a_1}(phi_{gamma_1}) ... >_g = |G|^{2g-2} * psi when all gamma equal, else 0.
Rational bg_correlator_canonical(
    const OrbifoldData& orb, unsigned g,
    const std::vector<std::pair<unsigned, Character>>& insertions,
    PsiCache& psi = psi_cache());

// log D^BG truncated: the coefficient of hbar^{g-1} prod u^{gamma}_{a_j} is
// the canonical correlator divided by the multiset automorphism factor.
// Terms are generated for genus <= g_max and at most n_build_max insertions,
// then filtered through the bounds.
Potential bg_log_potential(const OrbifoldData& orb, const PotentialBounds& bounds,
                           unsigned g_max, unsigned n_build_max,
                           PsiCache& psi = psi_cache());

}  // namespace orbgw
