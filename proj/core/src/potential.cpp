#include "orbgw/potential.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbgw {

PotentialBounds PotentialBounds::for_cell(unsigned g, unsigned n) {
    PotentialBounds b;
    // The flow only ever lowers delta; the budget spent reaching a coefficient
    // of genus g with n insertions is 3g-3+n minus its descendant sum.
    int budget = 3 * static_cast<int>(g) - 3 + static_cast<int>(n);
    if (budget < 0) budget = 0;
    b.use_flow = true;
    b.delta_min = -budget;
    b.n_flow_max = n;
    b.n_max = n + 2 * static_cast<unsigned>(budget);
    b.a_max = 3 * g + b.n_max;  // >= 3g-3+n' for every contributing cell
    b.hbar_min = -1;            // connected terms only
    b.hbar_max = static_cast<int>(g) - 1;
    return b;
}

long PotentialKey::index_sum() const {
    long s = 0;
    for (const auto& [gamma, a] : vars) s += a;
    return s;
}

Integer PotentialKey::automorphisms() const {
    Integer aut(1);
    size_t i = 0;
    while (i < vars.size()) {
        size_t j = i;
        while (j < vars.size() && vars[j] == vars[i]) ++j;
        aut *= factorial(j - i);
        i = j;
    }
    return aut;
}

bool Potential::admits(const PotentialKey& key) const {
    if (key.hbar < bounds_.hbar_min || key.hbar > bounds_.hbar_max) return false;
    if (key.n() > bounds_.n_max) return false;
    for (const auto& [gamma, a] : key.vars)
        if (a > bounds_.a_max) return false;
    if (bounds_.use_flow) {
        long delta = key.delta();
        if (delta < bounds_.delta_min) return false;
        // each unit of remaining delta budget can absorb at most two vars
        long reachable = static_cast<long>(key.n()) - 2 * (delta - bounds_.delta_min);
        if (reachable > static_cast<long>(bounds_.n_flow_max)) return false;
    }
    return true;
}

void Potential::add_term(PotentialKey key, const PuiseuxPoly& coeff) {
    if (coeff.is_zero()) return;
    if (!std::is_sorted(key.vars.begin(), key.vars.end()))
        std::sort(key.vars.begin(), key.vars.end());
    if (!admits(key)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PuiseuxPoly Potential::coefficient(const PotentialKey& key) const {
    auto it = terms_.find(key);
    if (it == terms_.end()) return PuiseuxPoly(r_, conductor_);
    return it->second;
}

Potential& Potential::operator+=(const Potential& rhs) {
    if (!(bounds_ == rhs.bounds_))
        throw std::invalid_argument("Potential: bounds mismatch in +=");
    for (const auto& [key, coeff] : rhs.terms_) add_term(key, coeff);
    return *this;
}

Potential& Potential::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= s;
    return *this;
}

}  // namespace orbgw
