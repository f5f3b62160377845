#include "orbgw/rmatrix.hpp"

#include "orbgw/bernoulli.hpp"

#include <stdexcept>

namespace orbgw {

PuiseuxPoly s_coefficient(const OrbifoldData& orb, unsigned i, unsigned k) {
    if (k == 0) throw std::invalid_argument("s_coefficient: k >= 1 required");
    if (i >= orb.rank()) throw std::out_of_range("s_coefficient: axis index");
    std::vector<Rational> exps(orb.rank(), Rational(0));
    exps[i] = Rational(-static_cast<long>(k));
    Rational c(factorial(k - 1));
    if (k % 2 == 1) c = -c;
    return PuiseuxPoly::monomial(
        PuiseuxMonomial(std::move(exps)),
        CycRational::from_rational(static_cast<unsigned>(orb.exponent()), c));
}

TruncSeries diagonal_entry(const OrbifoldData& orb, size_t h_idx, unsigned K) {
    unsigned N = static_cast<unsigned>(orb.exponent());
    TruncSeries arg(1, K, orb.rank(), N);
    for (unsigned m = 1; m <= K; ++m) {
        Rational outer(1, static_cast<long>(m) * (m + 1));
        if (m % 2 == 1) outer = -outer;
        PuiseuxPoly coeff(orb.rank(), N);
        for (unsigned i = 0; i < orb.rank(); ++i) {
            Rational b = bernoulli_eval(m + 1, orb.rotation(i, h_idx));
            if (b == 0) continue;
            std::vector<Rational> exps(orb.rank(), Rational(0));
            exps[i] = Rational(-static_cast<long>(m));
            coeff.add_term(PuiseuxMonomial(std::move(exps)),
                           CycRational::from_rational(N, outer * b));
        }
        arg.set_coeff(m, 0, coeff);
    }
    return series_exp(arg);
}

RMatrix::RMatrix(const OrbifoldData& orb, unsigned order) : orb_(&orb), order_(order) {
    diag_.reserve(orb.order());
    for (size_t h = 0; h < orb.order(); ++h)
        diag_.push_back(diagonal_entry(orb, h, order));
}

const TruncSeries& RMatrix::entry(size_t upper_idx, size_t lower_idx) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = entries_.find({upper_idx, lower_idx});
    if (it != entries_.end()) return it->second;

    unsigned N = static_cast<unsigned>(orb_->exponent());
    TruncSeries sum(1, order_, orb_->rank(), N);
    for (size_t h = 0; h < orb_->order(); ++h) {
        CycRational scale = orb_->chi_index(upper_idx, h) *
                            orb_->chi_index(lower_idx, orb_->inverse_index(h));
        if (scale.is_zero()) continue;
        TruncSeries term = diag_[h];
        term *= PuiseuxPoly::constant(orb_->rank(), scale);
        sum += term;
    }
    sum *= Rational(1, static_cast<long>(orb_->order()));
    return entries_.emplace(std::make_pair(upper_idx, lower_idx), std::move(sum))
        .first->second;
}

TruncSeries RMatrix::entry_neg(size_t upper_idx, size_t lower_idx) const {
    return entry(upper_idx, lower_idx).negate_variables();
}

PuiseuxPoly RMatrix::coeff_neg(size_t upper_idx, size_t lower_idx, unsigned k) const {
    PuiseuxPoly c = entry(upper_idx, lower_idx).coeff(k);
    if (k % 2 == 1) return -c;
    return c;
}

}  // namespace orbgw
