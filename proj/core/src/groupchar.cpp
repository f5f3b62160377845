#include "orbgw/groupchar.hpp"

#include <stdexcept>

namespace orbgw {

OrbifoldData OrbifoldData::build(std::vector<long> orders,
                                 std::vector<std::vector<long>> action) {
    OrbifoldData orb;
    for (long n : orders)
        if (n < 1) throw std::invalid_argument("OrbifoldData: factor orders must be >= 1");
    if (action.empty())
        throw std::invalid_argument("OrbifoldData: the action must have r >= 1 characters");

    orb.orders_ = std::move(orders);
    orb.r_ = static_cast<unsigned>(action.size());
    orb.group_order_ = 1;
    orb.exponent_ = 1;
    for (long n : orb.orders_) {
        orb.group_order_ *= static_cast<size_t>(n);
        orb.exponent_ = lcm_long(orb.exponent_, n);
    }

    orb.action_.resize(orb.r_);
    for (unsigned i = 0; i < orb.r_; ++i) {
        if (action[i].size() != orb.orders_.size())
            throw std::invalid_argument(
                "OrbifoldData: malformed exponent vector (wrong length)");
        orb.action_[i].resize(orb.orders_.size());
        for (size_t k = 0; k < orb.orders_.size(); ++k) {
            long m = action[i][k] % orb.orders_[k];
            if (m < 0) m += orb.orders_[k];
            orb.action_[i][k] = m;
        }
    }

    // l_i = order of chi_i in G*, and the rotation table c_i(h).
    orb.l_.resize(orb.r_);
    orb.c_.assign(orb.r_, std::vector<Rational>(orb.group_order_));
    for (unsigned i = 0; i < orb.r_; ++i) {
        long li = 1;
        for (size_t k = 0; k < orb.orders_.size(); ++k)
            li = lcm_long(li, orb.orders_[k] / gcd_long(orb.action_[i][k], orb.orders_[k]));
        orb.l_[i] = li;
        for (size_t idx = 0; idx < orb.group_order_; ++idx) {
            Element h = orb.element_at(idx);
            Rational s(0);
            for (size_t k = 0; k < orb.orders_.size(); ++k)
                s += rational(orb.action_[i][k] * h.residues[k], orb.orders_[k]);
            orb.c_[i][idx] = frac_part(s);
        }
    }

    // Sanity: c_i(1) = 0, l_i | N, and l_i * c_i(h) integral (this is the
    // denominator bound that keeps all Puiseux exponents in (1/2l_i)Z).
    for (unsigned i = 0; i < orb.r_; ++i) {
        if (orb.c_[i][0] != 0)
            throw std::logic_error("OrbifoldData: c_i(identity) != 0");
        if (orb.exponent_ % orb.l_[i] != 0)
            throw std::logic_error("OrbifoldData: l_i does not divide the exponent");
        for (size_t idx = 0; idx < orb.group_order_; ++idx) {
            Rational t = orb.c_[i][idx] * Rational(orb.l_[i]);
            if (!is_integer(t) || orb.c_[i][idx] < 0 || orb.c_[i][idx] >= 1)
                throw std::logic_error("OrbifoldData: rotation number out of range");
        }
    }
    return orb;
}

Element OrbifoldData::element_at(size_t idx) const {
    Element h;
    h.residues.resize(orders_.size());
    for (size_t k = 0; k < orders_.size(); ++k) {
        h.residues[k] = static_cast<long>(idx % static_cast<size_t>(orders_[k]));
        idx /= static_cast<size_t>(orders_[k]);
    }
    return h;
}

size_t OrbifoldData::element_index(const Element& h) const {
    if (h.residues.size() != orders_.size())
        throw std::invalid_argument("OrbifoldData: element shape mismatch");
    size_t idx = 0;
    for (size_t k = orders_.size(); k-- > 0;) {
        long m = h.residues[k] % orders_[k];
        if (m < 0) m += orders_[k];
        idx = idx * static_cast<size_t>(orders_[k]) + static_cast<size_t>(m);
    }
    return idx;
}

Character OrbifoldData::character_at(size_t idx) const {
    return Character{element_at(idx).residues};
}

size_t OrbifoldData::character_index(const Character& g) const {
    return element_index(Element{g.residues});
}

Element OrbifoldData::identity() const {
    return Element{std::vector<long>(orders_.size(), 0)};
}

Character OrbifoldData::trivial_character() const {
    return Character{std::vector<long>(orders_.size(), 0)};
}

Element OrbifoldData::compose(const Element& a, const Element& b) const {
    Element out;
    out.residues.resize(orders_.size());
    for (size_t k = 0; k < orders_.size(); ++k)
        out.residues[k] = (a.residues[k] + b.residues[k]) % orders_[k];
    return out;
}

Element OrbifoldData::inverse(const Element& h) const {
    Element out;
    out.residues.resize(orders_.size());
    for (size_t k = 0; k < orders_.size(); ++k)
        out.residues[k] = (orders_[k] - h.residues[k]) % orders_[k];
    return out;
}

size_t OrbifoldData::inverse_index(size_t h_idx) const {
    return element_index(inverse(element_at(h_idx)));
}

size_t OrbifoldData::compose_index(size_t a_idx, size_t b_idx) const {
    return element_index(compose(element_at(a_idx), element_at(b_idx)));
}

Rational OrbifoldData::char_exponent(const Character& gamma, const Element& h) const {
    if (gamma.residues.size() != orders_.size() || h.residues.size() != orders_.size())
        throw std::invalid_argument("OrbifoldData: shape mismatch in pairing");
    Rational s(0);
    for (size_t k = 0; k < orders_.size(); ++k)
        s += rational(gamma.residues[k] * h.residues[k], orders_[k]);
    return frac_part(s);
}

CycRational OrbifoldData::chi(const Character& gamma, const Element& h) const {
    Rational c = char_exponent(gamma, h);
    Rational t = c * Rational(exponent_);
    if (!is_integer(t)) throw std::logic_error("OrbifoldData::chi: non-integral pairing");
    return CycRational::zeta(static_cast<unsigned>(exponent_), to_long(Integer(t.get_num())));
}

CycRational OrbifoldData::chi_index(size_t gamma_idx, size_t h_idx) const {
    return chi(character_at(gamma_idx), element_at(h_idx));
}

Rational OrbifoldData::age(size_t h_idx) const {
    Rational a(0);
    for (unsigned i = 0; i < r_; ++i) a += c_[i][h_idx];
    return a;
}

unsigned OrbifoldData::fixed_dim(size_t h_idx) const {
    unsigned d = 0;
    for (unsigned i = 0; i < r_; ++i)
        if (c_[i][h_idx] == 0) ++d;
    return d;
}

PuiseuxMonomial OrbifoldData::euler_sector_monomial(size_t h_idx) const {
    std::vector<Rational> e(r_, Rational(0));
    for (unsigned i = 0; i < r_; ++i)
        if (c_[i][h_idx] == 0) e[i] = 1;
    return PuiseuxMonomial(std::move(e));
}

PuiseuxMonomial OrbifoldData::normalizer_monomial(size_t h_idx) const {
    std::vector<Rational> e(r_);
    for (unsigned i = 0; i < r_; ++i) e[i] = c_[i][h_idx];
    return PuiseuxMonomial(std::move(e));
}

PuiseuxMonomial OrbifoldData::e1() const {
    return PuiseuxMonomial(std::vector<Rational>(r_, Rational(1)));
}

PuiseuxMonomial OrbifoldData::sqrt_e1() const {
    return PuiseuxMonomial(std::vector<Rational>(r_, Rational(1, 2)));
}

PuiseuxMonomial OrbifoldData::cup_monomial(size_t h_idx, size_t hp_idx) const {
    size_t prod_idx = compose_index(h_idx, hp_idx);
    std::vector<Rational> e(r_);
    for (unsigned i = 0; i < r_; ++i)
        e[i] = c_[i][h_idx] + c_[i][hp_idx] - c_[i][prod_idx];
    return PuiseuxMonomial(std::move(e));
}

std::vector<std::vector<CycRational>> OrbifoldData::basis_matrix() const {
    size_t n = group_order_;
    std::vector<std::vector<CycRational>> m(
        n, std::vector<CycRational>(n, CycRational::zero(static_cast<unsigned>(exponent_))));
    Rational inv_order(1, static_cast<long>(n));
    for (size_t g = 0; g < n; ++g)
        for (size_t h = 0; h < n; ++h)
            m[g][h] = chi_index(g, inverse_index(h)) * inv_order;
    return m;
}

std::vector<std::vector<CycRational>> OrbifoldData::basis_matrix_inverse() const {
    size_t n = group_order_;
    std::vector<std::vector<CycRational>> m(
        n, std::vector<CycRational>(n, CycRational::zero(static_cast<unsigned>(exponent_))));
    for (size_t h = 0; h < n; ++h)
        for (size_t g = 0; g < n; ++g) m[h][g] = chi_index(g, h);
    return m;
}

}  // namespace orbgw
