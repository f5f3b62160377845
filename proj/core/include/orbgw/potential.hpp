// Truncated (log-)descendant potentials: polynomials in the variables u^gamma_a
// and hbar, with PuiseuxPoly coefficients. A monomial is keyed by the hbar
// power and the multiset of variable indices (gamma, a).
//
// Truncation is governed by PotentialBounds. Besides the hard caps (variable
// count, descendant index, hbar window) there is an exact pruning scheme for
// quantized-operator work based on the grading
//
//   delta(term) = sum(a_i) - 3*hbar_pow - #vars,
//
// which vanishes on every connected BG term and drops by exactly m under each
// m-component of the quantized operator (it is additive under the joining
// products of the connected flow). A term can contribute to a retained target
// only if delta >= delta_min and its variable count can shrink to a target
// count within the remaining delta budget (at most two variables vanish per
// unit of delta); everything else is unreachable and is dropped exactly.

#pragma once

#include "orbgw/puiseux.hpp"

#include <climits>
#include <map>
#include <utility>
#include <vector>

namespace orbgw {

struct PotentialBounds {
    int hbar_min = -1;
    int hbar_max = 0;
    unsigned n_max = 0;   // maximum number of u-variables in a kept term
    unsigned a_max = 0;   // maximum descendant index
    bool use_flow = false;  // enable the delta-grading truncation
    int delta_min = INT_MIN;
    unsigned n_flow_max = 0;  // targets never need more than this many vars

    bool operator==(const PotentialBounds&) const = default;

    // Bounds wide enough that the quantized-operator flow applied to a BG
    // potential is exact on every coefficient of genus g with n insertions.
    static PotentialBounds for_cell(unsigned g, unsigned n);
};

struct PotentialKey {
    int hbar = 0;
    // sorted multiset of (character index, descendant index)
    std::vector<std::pair<unsigned, unsigned>> vars;

    unsigned n() const { return static_cast<unsigned>(vars.size()); }
    long index_sum() const;
    long delta() const { return index_sum() - 3l * hbar - n(); }
    // prod (multiplicity!) over distinct variables.
    Integer automorphisms() const;

    auto operator<=>(const PotentialKey&) const = default;
};

class Potential {
public:
    Potential() = default;
    Potential(PotentialBounds bounds, unsigned r, unsigned conductor)
        : bounds_(bounds), r_(r), conductor_(conductor) {}

    const PotentialBounds& bounds() const { return bounds_; }
    unsigned r() const { return r_; }
    unsigned conductor() const { return conductor_; }
    const std::map<PotentialKey, PuiseuxPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool admits(const PotentialKey& key) const;
    void add_term(PotentialKey key, const PuiseuxPoly& coeff);
    PuiseuxPoly coefficient(const PotentialKey& key) const;

    Potential& operator+=(const Potential& rhs);
    Potential& operator*=(const Rational& s);
    friend Potential operator+(Potential a, const Potential& b) { return a += b; }

    bool operator==(const Potential& rhs) const { return terms_ == rhs.terms_; }

private:
    PotentialBounds bounds_;
    unsigned r_ = 0;
    unsigned conductor_ = 1;
    std::map<PotentialKey, PuiseuxPoly> terms_;
};

}  // namespace orbgw
