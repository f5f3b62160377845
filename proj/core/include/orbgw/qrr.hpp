// Independent oracle for twisted correlators: the quantized quantum
// Riemann-Roch operator applied to the BG descendant potential.
//
// The operator is sum_{m>=1} sum_i (s^i_m/(m+1)!) (A^i_{m+1} z^m)^,  with
// A^i_m acting diagonally by B_m(c_i(h)) and E-matrix entries
//   (E^i_m)^a_b = (1/|G|) sum_h chi_a(h^{-1}) B_m(c_i(h)) chi_b(h).
// After the dilaton shift q_1 = u_1 - 1 each m-component reads
//   sum_{a,b} (E^i_{m+1})^a_b [ d/du^a_{m+1} - sum_l u^b_l d/du^a_{l+m} ]
//   + (hbar |G|^2 / 2) sum_{a,b} (E^i_{m+1})^a_b sum_{l=0}^{m-1} (-1)^{l+1+m}
//       d/du^a_l d/du^b_{m-1-l}.
//
// Rather than materializing exp(operator) D^BG, the twisted log-potential is
// integrated along the connected flow L(s) = log(e^{s T} e^L): writing
// L(s) = sum_k s^k M_k, the coefficients satisfy
//   (k+1) M_{k+1} = Lin(M_k)
//                 + sum_{a+b=k} hbar-weighted products of first derivatives,
// which terminates exactly because every m-component lowers the delta-grading
// by m >= 1. M_0 is the BG log-potential and log D^tw = sum_k M_k.

#pragma once

#include "orbgw/bgpotential.hpp"
#include "orbgw/groupchar.hpp"
#include "orbgw/potential.hpp"

#include <vector>

namespace orbgw {

class QuantizedOperator {
public:
    // Builds E^i_m for m <= m_max+1 and verifies the adjointness pattern
    // (A_0, A_2, A_4, ... self-adjoint; A_3, A_5, ... anti-self-adjoint).
    QuantizedOperator(const OrbifoldData& orb, unsigned m_max);

    const OrbifoldData& orbifold() const { return *orb_; }
    unsigned max_m() const { return m_max_; }

    const CycRational& e_entry(unsigned i, unsigned m, size_t alpha, size_t beta) const;
    const CycRational& e_row_sum(unsigned i, unsigned m, size_t alpha) const;
    // s^i_m/(m+1)! = (-1)^m w_i^{-m} / (m(m+1)) as a one-term PuiseuxPoly.
    const PuiseuxPoly& component_coefficient(unsigned i, unsigned m) const;

private:
    const OrbifoldData* orb_;
    unsigned m_max_;
    // e_[i][m][alpha * |G| + beta]
    std::vector<std::vector<std::vector<CycRational>>> e_;
    std::vector<std::vector<std::vector<CycRational>>> row_sums_;
    std::vector<std::vector<PuiseuxPoly>> coeffs_;
};

// log D^tw from log D^BG. Depth is verified internally: the flow must die out
// within depth_cap steps (throws std::runtime_error otherwise), and raising
// depth_cap cannot change the result.
Potential qrr_apply(const QuantizedOperator& op, const Potential& log_bg,
                    unsigned depth_cap);

// <prod_j tau_{a_j}(phi_{gamma_j})>^tw_{g,n}: coefficient times the multiset
// automorphism factor.
PuiseuxPoly qrr_extract(const Potential& twisted_log, unsigned g,
                        std::vector<std::pair<unsigned, unsigned>> insertions);

// All oracle correlators of a (g,n) cell with descendant sum <= a_sum_max;
// only nonzero entries are returned. Keys are sorted (gamma, a) multisets.
std::map<std::vector<std::pair<unsigned, unsigned>>, PuiseuxPoly> oracle_correlator_table(
    const OrbifoldData& orb, unsigned g, unsigned n, unsigned a_sum_max,
    PsiCache& psi = psi_cache());

}  // namespace orbgw
