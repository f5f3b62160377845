#include "orbgw/qrr.hpp"

#include "orbgw/bernoulli.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace orbgw {

QuantizedOperator::QuantizedOperator(const OrbifoldData& orb, unsigned m_max)
    : orb_(&orb), m_max_(m_max) {
    size_t n = orb.order();
    unsigned N = static_cast<unsigned>(orb.exponent());
    Rational inv_order(1, static_cast<long>(n));

    e_.resize(orb.rank());
    row_sums_.resize(orb.rank());
    coeffs_.resize(orb.rank());
    for (unsigned i = 0; i < orb.rank(); ++i) {
        e_[i].resize(m_max + 2);
        row_sums_[i].resize(m_max + 2);
        for (unsigned m = 0; m <= m_max + 1; ++m) {
            auto& mat = e_[i][m];
            mat.assign(n * n, CycRational::zero(N));
            for (size_t h = 0; h < n; ++h) {
                Rational b = bernoulli_eval(m, orb.rotation(i, h));
                if (b == 0) continue;
                for (size_t alpha = 0; alpha < n; ++alpha) {
                    CycRational left =
                        orb.chi_index(alpha, orb.inverse_index(h)) * (b * inv_order);
                    if (left.is_zero()) continue;
                    for (size_t beta = 0; beta < n; ++beta)
                        mat[alpha * n + beta] += left * orb.chi_index(beta, h);
                }
            }
            auto& rows = row_sums_[i][m];
            rows.assign(n, CycRational::zero(N));
            for (size_t alpha = 0; alpha < n; ++alpha)
                for (size_t beta = 0; beta < n; ++beta)
                    rows[alpha] += mat[alpha * n + beta];

            // adjointness pattern with respect to the BG pairing
            if (m >= 2) {
                bool anti = (m % 2 == 1);
                for (size_t alpha = 0; alpha < n; ++alpha)
                    for (size_t beta = 0; beta < n; ++beta) {
                        CycRational want = mat[beta * n + alpha];
                        if (anti) want = -want;
                        if (!(mat[alpha * n + beta] == want))
                            throw std::logic_error(
                                "QuantizedOperator: adjointness pattern violated");
                    }
            }
        }
        coeffs_[i].reserve(m_max + 1);
        coeffs_[i].emplace_back(orb.rank(), N);  // unused m=0 slot
        for (unsigned m = 1; m <= m_max; ++m) {
            std::vector<Rational> exps(orb.rank(), Rational(0));
            exps[i] = Rational(-static_cast<long>(m));
            Rational c(1, static_cast<long>(m) * (m + 1));
            if (m % 2 == 1) c = -c;
            coeffs_[i].push_back(PuiseuxPoly::monomial(
                PuiseuxMonomial(std::move(exps)), CycRational::from_rational(N, c)));
        }
    }
}

const CycRational& QuantizedOperator::e_entry(unsigned i, unsigned m, size_t alpha,
                                              size_t beta) const {
    return e_[i][m][alpha * orb_->order() + beta];
}

const CycRational& QuantizedOperator::e_row_sum(unsigned i, unsigned m,
                                                size_t alpha) const {
    return row_sums_[i][m][alpha];
}

const PuiseuxPoly& QuantizedOperator::component_coefficient(unsigned i,
                                                            unsigned m) const {
    return coeffs_[i][m];
}

namespace {

using SliceTerm = std::pair<PotentialKey, PuiseuxPoly>;

// d/du^gamma_a applied to a potential, as a raw term list (no truncation:
// slices are intermediates and must not be pruned before recombination).
std::vector<SliceTerm> derivative_slice(const Potential& p, unsigned gamma, unsigned a) {
    std::vector<SliceTerm> out;
    std::pair<unsigned, unsigned> var{gamma, a};
    for (const auto& [key, coeff] : p.terms()) {
        auto lo = std::lower_bound(key.vars.begin(), key.vars.end(), var);
        if (lo == key.vars.end() || *lo != var) continue;
        auto hi = std::upper_bound(lo, key.vars.end(), var);
        long mult = hi - lo;
        PotentialKey nk;
        nk.hbar = key.hbar;
        nk.vars.reserve(key.vars.size() - 1);
        nk.vars.assign(key.vars.begin(), lo);
        nk.vars.insert(nk.vars.end(), lo + 1, key.vars.end());
        out.emplace_back(std::move(nk), coeff * Rational(mult));
    }
    return out;
}

// The part of the conjugated operator action that is linear in the potential:
// pure derivative, u-times-derivative, and hbar second derivative.
Potential flow_linear(const QuantizedOperator& op, const Potential& x) {
    const OrbifoldData& orb = op.orbifold();
    size_t n_char = orb.order();
    Potential out(x.bounds(), x.r(), x.conductor());
    Rational half_g2(static_cast<long>(n_char * n_char), 2);
    half_g2.canonicalize();

    for (const auto& [key, coeff] : x.terms()) {
        for (unsigned i = 0; i < orb.rank(); ++i) {
            for (unsigned m = 1; m <= op.max_m(); ++m) {
                const PuiseuxPoly& cim = op.component_coefficient(i, m);

                // distinct variables of the key with multiplicities
                size_t p = 0;
                while (p < key.vars.size()) {
                    size_t q = p;
                    while (q < key.vars.size() && key.vars[q] == key.vars[p]) ++q;
                    auto [alpha, a] = key.vars[p];
                    long mult = static_cast<long>(q - p);

                    // pure derivative d/du^alpha_{m+1}
                    if (a == m + 1) {
                        const CycRational& row = op.e_row_sum(i, m + 1, alpha);
                        if (!row.is_zero()) {
                            PotentialKey nk;
                            nk.hbar = key.hbar;
                            nk.vars.reserve(key.vars.size() - 1);
                            nk.vars.assign(key.vars.begin(), key.vars.begin() + p);
                            nk.vars.insert(nk.vars.end(), key.vars.begin() + p + 1,
                                           key.vars.end());
                            PuiseuxPoly c = coeff * cim;
                            c *= row * Rational(mult);
                            out.add_term(std::move(nk), c);
                        }
                    }

                    // -u^beta_l d/du^alpha_{l+m}
                    if (a >= m) {
                        unsigned l = a - m;
                        for (size_t beta = 0; beta < n_char; ++beta) {
                            const CycRational& em = op.e_entry(i, m + 1, alpha, beta);
                            if (em.is_zero()) continue;
                            PotentialKey nk;
                            nk.hbar = key.hbar;
                            nk.vars.reserve(key.vars.size());
                            nk.vars.assign(key.vars.begin(), key.vars.begin() + p);
                            nk.vars.insert(nk.vars.end(), key.vars.begin() + p + 1,
                                           key.vars.end());
                            nk.vars.emplace_back(static_cast<unsigned>(beta), l);
                            std::sort(nk.vars.begin(), nk.vars.end());
                            PuiseuxPoly c = coeff * cim;
                            c *= em * Rational(-mult);
                            out.add_term(std::move(nk), c);
                        }
                    }
                    p = q;
                }

                // hbar (|G|^2/2) (-1)^{l+1+m} d2/du^alpha_l du^beta_{m-1-l}
                for (unsigned l = 0; l < m; ++l) {
                    unsigned b = m - 1 - l;
                    Rational sign = ((l + 1 + m) % 2 == 0) ? Rational(1) : Rational(-1);
                    for (size_t alpha = 0; alpha < n_char; ++alpha) {
                        std::pair<unsigned, unsigned> vx{static_cast<unsigned>(alpha), l};
                        auto lo = std::lower_bound(key.vars.begin(), key.vars.end(), vx);
                        if (lo == key.vars.end() || *lo != vx) continue;
                        auto hi = std::upper_bound(lo, key.vars.end(), vx);
                        long mx = hi - lo;
                        for (size_t beta = 0; beta < n_char; ++beta) {
                            const CycRational& em = op.e_entry(i, m + 1, alpha, beta);
                            if (em.is_zero()) continue;
                            std::pair<unsigned, unsigned> vy{static_cast<unsigned>(beta), b};
                            PotentialKey nk;
                            nk.hbar = key.hbar + 1;
                            nk.vars = key.vars;
                            auto it1 = std::find(nk.vars.begin(), nk.vars.end(), vx);
                            nk.vars.erase(it1);
                            auto it2 = std::find(nk.vars.begin(), nk.vars.end(), vy);
                            if (it2 == nk.vars.end()) continue;
                            long my = static_cast<long>(std::count(
                                nk.vars.begin(), nk.vars.end(), vy));
                            nk.vars.erase(it2);
                            PuiseuxPoly c = coeff * cim;
                            c *= em * (sign * half_g2 * Rational(mx) * Rational(my));
                            out.add_term(std::move(nk), c);
                        }
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

Potential qrr_apply(const QuantizedOperator& op, const Potential& log_bg,
                    unsigned depth_cap) {
    const OrbifoldData& orb = op.orbifold();
    size_t n_char = orb.order();
    Rational half_g2(static_cast<long>(n_char * n_char), 2);
    half_g2.canonicalize();

    std::vector<Potential> m_coeffs;  // Taylor coefficients M_k of L(s)
    m_coeffs.push_back(log_bg);
    Potential result = log_bg;

    // first-derivative slices of every M_k, filled lazily
    std::vector<std::map<std::pair<unsigned, unsigned>, std::vector<SliceTerm>>> slices(1);
    auto slice = [&](size_t j, unsigned gamma, unsigned a) -> const std::vector<SliceTerm>& {
        auto [it, inserted] = slices[j].try_emplace({gamma, a});
        if (inserted) it->second = derivative_slice(m_coeffs[j], gamma, a);
        return it->second;
    };

    for (unsigned k = 0;; ++k) {
        if (k >= depth_cap) {
            if (!m_coeffs.back().is_zero())
                throw std::runtime_error(
                    "qrr_apply: flow did not stabilize within the depth cap");
            break;
        }
        Potential next = flow_linear(op, m_coeffs[k]);

        // quadratic part: sum over splittings a+b=k of the derivative products
        for (unsigned i = 0; i < orb.rank(); ++i) {
            for (unsigned m = 1; m <= op.max_m(); ++m) {
                const PuiseuxPoly& cim = op.component_coefficient(i, m);
                for (unsigned l = 0; l < m; ++l) {
                    unsigned b = m - 1 - l;
                    Rational sign = ((l + 1 + m) % 2 == 0) ? Rational(1) : Rational(-1);
                    for (size_t alpha = 0; alpha < n_char; ++alpha) {
                        for (size_t beta = 0; beta < n_char; ++beta) {
                            const CycRational& em = op.e_entry(i, m + 1, alpha, beta);
                            if (em.is_zero()) continue;
                            CycRational scale = em * (sign * half_g2);
                            for (unsigned ka = 0; ka <= k; ++ka) {
                                unsigned kb = k - ka;
                                const auto& sa =
                                    slice(ka, static_cast<unsigned>(alpha), l);
                                if (sa.empty()) continue;
                                const auto& sb =
                                    slice(kb, static_cast<unsigned>(beta), b);
                                if (sb.empty()) continue;
                                for (const auto& [key_a, ca] : sa) {
                                    for (const auto& [key_b, cb] : sb) {
                                        PotentialKey nk;
                                        nk.hbar = key_a.hbar + key_b.hbar + 1;
                                        nk.vars.reserve(key_a.vars.size() +
                                                        key_b.vars.size());
                                        std::merge(key_a.vars.begin(), key_a.vars.end(),
                                                   key_b.vars.begin(), key_b.vars.end(),
                                                   std::back_inserter(nk.vars));
                                        if (!next.admits(nk)) continue;
                                        PuiseuxPoly c = ca * cb * cim;
                                        c *= scale;
                                        next.add_term(std::move(nk), c);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }

        next *= Rational(1, static_cast<long>(k) + 1);
        if (next.is_zero()) break;
        result += next;
        m_coeffs.push_back(std::move(next));
        slices.emplace_back();
    }
    return result;
}

PuiseuxPoly qrr_extract(const Potential& twisted_log, unsigned g,
                        std::vector<std::pair<unsigned, unsigned>> insertions) {
    PotentialKey key;
    key.hbar = static_cast<int>(g) - 1;
    key.vars = std::move(insertions);
    std::sort(key.vars.begin(), key.vars.end());
    if (!twisted_log.admits(key))
        throw std::out_of_range("qrr_extract: key outside potential bounds");
    PuiseuxPoly c = twisted_log.coefficient(key);
    c *= Rational(key.automorphisms());
    return c;
}

namespace {

void enumerate_insertions(size_t n_char, unsigned n, unsigned a_budget,
                          std::pair<unsigned, unsigned> min_var,
                          std::vector<std::pair<unsigned, unsigned>>& acc,
                          const std::function<void()>& emit) {
    if (n == 0) {
        emit();
        return;
    }
    for (unsigned gamma = min_var.first; gamma < n_char; ++gamma) {
        unsigned a0 = (gamma == min_var.first) ? min_var.second : 0;
        for (unsigned a = a0; a <= a_budget; ++a) {
            acc.emplace_back(gamma, a);
            enumerate_insertions(n_char, n - 1, a_budget - a, {gamma, a}, acc, emit);
            acc.pop_back();
        }
    }
}

}  // namespace

std::map<std::vector<std::pair<unsigned, unsigned>>, PuiseuxPoly> oracle_correlator_table(
    const OrbifoldData& orb, unsigned g, unsigned n, unsigned a_sum_max, PsiCache& psi) {
    PotentialBounds bounds = PotentialBounds::for_cell(g, n);
    unsigned budget = static_cast<unsigned>(-bounds.delta_min);
    Potential log_bg = bg_log_potential(orb, bounds, g, bounds.n_max, psi);
    Potential twisted = log_bg;
    if (budget > 0) {
        QuantizedOperator op(orb, budget);
        twisted = qrr_apply(op, log_bg, budget + 2);
    }

    std::map<std::vector<std::pair<unsigned, unsigned>>, PuiseuxPoly> table;
    std::vector<std::pair<unsigned, unsigned>> acc;
    enumerate_insertions(orb.order(), n, a_sum_max, {0, 0}, acc, [&]() {
        PuiseuxPoly v = qrr_extract(twisted, g, acc);
        if (!v.is_zero()) table.emplace(acc, v);
    });
    return table;
}

}  // namespace orbgw
