// Finite abelian group data for the input geometry [C^r/G]:
//
//   G = Z/n_1 x ... x Z/n_s acting on C^r through r characters chi_1..chi_r.
//
// Elements h and characters gamma are both residue vectors against the same
// orders; the pairing chi_gamma(h) is a root of unity zeta_N^t with N the
// exponent of G, so character values live in CycRational and never touch
// floating point. Rotation numbers c_i(h) in [0,1), ages, sector Euler
// monomials e_h and the normalizing monomials prod_i w_i^{c_i(h)} are all
// tabulated at construction. The trivial group is the empty orders sequence.

#pragma once

#include "orbgw/cyclotomic.hpp"
#include "orbgw/puiseux.hpp"
#include "orbgw/rational.hpp"

#include <vector>

namespace orbgw {

struct Element {
    std::vector<long> residues;
    bool operator==(const Element&) const = default;
};

struct Character {
    std::vector<long> residues;
    bool operator==(const Character&) const = default;
};

class OrbifoldData {
public:
    // orders: cyclic factor sizes (empty = trivial group); action: r exponent
    // vectors, action[i][k] = exponent of chi_i on the k-th factor generator.
    static OrbifoldData build(std::vector<long> orders,
                              std::vector<std::vector<long>> action);

    size_t order() const { return group_order_; }          // |G|
    unsigned rank() const { return r_; }                   // r
    size_t num_factors() const { return orders_.size(); }
    long exponent() const { return exponent_; }            // N
    const std::vector<long>& orders() const { return orders_; }
    const std::vector<std::vector<long>>& action() const { return action_; }
    long character_order(unsigned i) const { return l_[i]; }  // l_i

    // Elements and characters share the mixed-radix index space [0, |G|).
    Element element_at(size_t idx) const;
    size_t element_index(const Element& h) const;
    Character character_at(size_t idx) const;
    size_t character_index(const Character& g) const;
    Element identity() const;
    Character trivial_character() const;
    Element compose(const Element& a, const Element& b) const;
    Element inverse(const Element& h) const;
    size_t inverse_index(size_t h_idx) const;
    size_t compose_index(size_t a_idx, size_t b_idx) const;

    // c with chi_gamma(h) = e^{2 pi i c}, 0 <= c < 1.
    Rational char_exponent(const Character& gamma, const Element& h) const;
    // chi_gamma(h) as an exact cyclotomic number.
    CycRational chi(const Character& gamma, const Element& h) const;
    CycRational chi_index(size_t gamma_idx, size_t h_idx) const;

    const Rational& rotation(unsigned i, size_t h_idx) const { return c_[i][h_idx]; }
    Rational age(size_t h_idx) const;
    unsigned fixed_dim(size_t h_idx) const;  // dim_C (C^r)^h

    // e_h = prod_i w_i^{delta_{c_i(h),0}}.
    PuiseuxMonomial euler_sector_monomial(size_t h_idx) const;
    // prod_i w_i^{c_i(h)}, the normalizer relating 1_h to its barred version.
    PuiseuxMonomial normalizer_monomial(size_t h_idx) const;
    PuiseuxMonomial e1() const;        // prod_i w_i
    PuiseuxMonomial sqrt_e1() const;   // prod_i w_i^{1/2}
    // prod_i w_i^{c_i(h)+c_i(h')-c_i(hh')}, the cup-product monomial.
    PuiseuxMonomial cup_monomial(size_t h_idx, size_t hp_idx) const;

    // M[gamma][h] with phi_gamma = sum_h M[gamma][h] 1_h, i.e. chi_gamma(h^{-1})/|G|,
    // and its exact inverse M_inv[h][gamma] = chi_gamma(h).
    std::vector<std::vector<CycRational>> basis_matrix() const;
    std::vector<std::vector<CycRational>> basis_matrix_inverse() const;

private:
    OrbifoldData() = default;

    std::vector<long> orders_;
    std::vector<std::vector<long>> action_;
    unsigned r_ = 0;
    size_t group_order_ = 1;
    long exponent_ = 1;
    std::vector<long> l_;
    std::vector<std::vector<Rational>> c_;  // c_[i][h_idx]
};

}  // namespace orbgw
