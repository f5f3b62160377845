#include "orbgw/series.hpp"

#include <sstream>
#include <stdexcept>

namespace orbgw {

TruncSeries::TruncSeries(unsigned nvars, unsigned order, unsigned r, unsigned conductor)
    : nvars_(nvars), order_(order), r_(r), conductor_(conductor) {
    if (nvars != 1 && nvars != 2)
        throw std::invalid_argument("TruncSeries: one or two variables only");
}

TruncSeries TruncSeries::one(unsigned nvars, unsigned order, unsigned r, unsigned conductor) {
    TruncSeries s(nvars, order, r, conductor);
    s.set_coeff(0, 0, PuiseuxPoly::constant(r, conductor, Rational(1)));
    return s;
}

const PuiseuxPoly& TruncSeries::coeff(unsigned i, unsigned j) const {
    if (nvars_ == 1 && j != 0)
        throw std::out_of_range("TruncSeries::coeff: univariate series");
    if (i + j > order_) throw std::out_of_range("TruncSeries::coeff: beyond order");
    static thread_local std::map<std::pair<unsigned, unsigned>, PuiseuxPoly> zeros;
    auto it = coeffs_.find({i, j});
    if (it != coeffs_.end()) return it->second;
    auto [zit, ins] = zeros.try_emplace({r_, conductor_}, PuiseuxPoly(r_, conductor_));
    return zit->second;
}

void TruncSeries::set_coeff(unsigned i, unsigned j, const PuiseuxPoly& p) {
    if (nvars_ == 1 && j != 0)
        throw std::out_of_range("TruncSeries::set_coeff: univariate series");
    if (i + j > order_) return;  // beyond truncation: drop
    if (p.is_zero())
        coeffs_.erase({i, j});
    else
        coeffs_[{i, j}] = p;
}

void TruncSeries::add_coeff(unsigned i, unsigned j, const PuiseuxPoly& p) {
    if (i + j > order_ || p.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace({i, j}, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void TruncSeries::check_compatible(const TruncSeries& rhs) const {
    if (nvars_ != rhs.nvars_ || r_ != rhs.r_)
        throw std::invalid_argument("TruncSeries: shape mismatch");
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries s = *this;
    for (auto& [k, p] : s.coeffs_) p = -p;
    return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
    check_compatible(rhs);
    if (rhs.order_ < order_) order_ = rhs.order_;  // intersection of knowledge
    std::erase_if(coeffs_, [&](const auto& kv) {
        return kv.first.first + kv.first.second > order_;
    });
    for (const auto& [k, p] : rhs.coeffs_) add_coeff(k.first, k.second, p);
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
    check_compatible(rhs);
    if (rhs.order_ < order_) order_ = rhs.order_;
    std::erase_if(coeffs_, [&](const auto& kv) {
        return kv.first.first + kv.first.second > order_;
    });
    for (const auto& [k, p] : rhs.coeffs_) add_coeff(k.first, k.second, -p);
    return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& rhs) {
    check_compatible(rhs);
    unsigned order = std::min(order_, rhs.order_);
    TruncSeries out(nvars_, order, r_, conductor_ == 1 ? rhs.conductor_ : conductor_);
    for (const auto& [ka, pa] : coeffs_) {
        if (ka.first + ka.second > order) continue;
        for (const auto& [kb, pb] : rhs.coeffs_) {
            unsigned i = ka.first + kb.first, j = ka.second + kb.second;
            if (i + j > order) continue;
            out.add_coeff(i, j, pa * pb);
        }
    }
    *this = std::move(out);
    return *this;
}

TruncSeries& TruncSeries::operator*=(const PuiseuxPoly& s) {
    if (conductor_ == 1 && s.conductor() != 1) conductor_ = s.conductor();
    for (auto& [k, p] : coeffs_) p *= s;
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [k, p] : coeffs_) p *= s;
    return *this;
}

TruncSeries TruncSeries::negate_variables() const {
    TruncSeries s = *this;
    for (auto& [k, p] : s.coeffs_)
        if ((k.first + k.second) % 2 == 1) p = -p;
    return s;
}

TruncSeries TruncSeries::truncated(unsigned new_order) const {
    if (new_order > order_)
        throw std::invalid_argument("TruncSeries::truncated: cannot raise order");
    TruncSeries s(nvars_, new_order, r_, conductor_);
    for (const auto& [k, p] : coeffs_)
        if (k.first + k.second <= new_order) s.coeffs_.emplace(k, p);
    return s;
}

bool TruncSeries::operator==(const TruncSeries& rhs) const {
    if (nvars_ != rhs.nvars_ || order_ != rhs.order_ || r_ != rhs.r_) return false;
    return coeffs_ == rhs.coeffs_;
}

std::string TruncSeries::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, p] : coeffs_) {
        if (!first) os << " + ";
        os << "[" << p.str() << "]";
        if (k.first > 0) os << "*z^" << k.first;
        if (k.second > 0) os << "*zeta^" << k.second;
        first = false;
    }
    os << " + O(" << (order_ + 1) << ")";
    return os.str();
}

TruncSeries series_exp(const TruncSeries& s) {
    if (!s.coeff(0, 0).is_zero())
        throw std::invalid_argument("series_exp: nonzero constant term");
    TruncSeries result = TruncSeries::one(s.nvars(), s.order(), s.r(), s.conductor());
    TruncSeries power = result;
    Rational fact(1);
    for (unsigned j = 1; j <= s.order(); ++j) {
        power *= s;
        if (power.is_zero()) break;
        fact *= Rational(j);
        TruncSeries term = power;
        term *= Rational(1) / fact;
        result += term;
    }
    return result;
}

TruncSeries outer_product(const TruncSeries& a, const TruncSeries& b, unsigned order) {
    if (a.nvars() != 1 || b.nvars() != 1)
        throw std::invalid_argument("outer_product: univariate factors required");
    TruncSeries out(2, order, a.r(),
                    a.conductor() == 1 ? b.conductor() : a.conductor());
    for (const auto& [ka, pa] : a.coeffs()) {
        if (ka.first > order) continue;
        for (const auto& [kb, pb] : b.coeffs()) {
            if (ka.first + kb.first > order) continue;
            out.add_coeff(ka.first, kb.first, pa * pb);
        }
    }
    return out;
}

TruncSeries divide_by_z_plus_zeta(const TruncSeries& n) {
    if (n.nvars() != 2)
        throw std::invalid_argument("divide_by_z_plus_zeta: bivariate series required");
    if (n.order() == 0) {
        if (!n.coeff(0, 0).is_zero())
            throw std::domain_error(
                "divide_by_z_plus_zeta: coefficient [z^0 zeta^0] obstructs divisibility");
        return TruncSeries(2, 0, n.r(), n.conductor());
    }
    unsigned K = n.order();
    TruncSeries q(2, K - 1, n.r(), n.conductor());
    // q_{a,b} = n_{a+1,b} - q_{a+1,b-1}, filled by increasing zeta-degree b.
    for (unsigned b = 0; b + 1 <= K; ++b) {
        for (unsigned a = 0; a + b + 1 <= K; ++a) {
            PuiseuxPoly v = n.coeff(a + 1, b);
            if (b > 0) v -= q.coeff(a + 1, b - 1);
            q.set_coeff(a, b, v);
        }
    }
    // Verify q*(z+zeta) == n on every coefficient with total degree <= K;
    // the relations not used above are exactly the divisibility constraints.
    for (unsigned a = 0; a <= K; ++a) {
        for (unsigned b = 0; a + b <= K; ++b) {
            PuiseuxPoly lhs(n.r(), n.conductor());
            if (a >= 1) lhs += q.coeff(a - 1, b);
            if (b >= 1) lhs += q.coeff(a, b - 1);
            if (!(lhs == n.coeff(a, b))) {
                std::ostringstream os;
                os << "divide_by_z_plus_zeta: coefficient [z^" << a << " zeta^" << b
                   << "] obstructs divisibility; defect = "
                   << (lhs - n.coeff(a, b)).str();
                throw std::domain_error(os.str());
            }
        }
    }
    return q;
}

}  // namespace orbgw
