#include "orbgw/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace orbgw {

namespace {

// Monic integer polynomials as coefficient vectors, constant term first.
using ZPoly = std::vector<Integer>;

// Exact division assuming divisor is monic and divides evenly.
ZPoly divide_monic(ZPoly num, const ZPoly& den) {
    if (num.size() < den.size()) throw std::logic_error("divide_monic: degree underflow");
    ZPoly quot(num.size() - den.size() + 1, Integer(0));
    for (size_t i = quot.size(); i-- > 0;) {
        Integer c = num[i + den.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (size_t j = 0; j + 1 < den.size(); ++j)
        if (num[j] != 0) throw std::logic_error("divide_monic: nonzero remainder");
    return quot;
}

const ZPoly& cyclotomic_poly(unsigned N) {
    static std::mutex mutex;
    static std::map<unsigned, ZPoly> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d, computed bottom-up so the
    // recursion never re-enters the lock.
    for (unsigned n = 1; n <= N; ++n) {
        if (cache.count(n) || N % n != 0) continue;
        ZPoly p(n + 1, Integer(0));
        p[0] = -1;
        p[n] = 1;
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) p = divide_monic(std::move(p), cache.at(d));
        cache.emplace(n, std::move(p));
    }
    return cache.at(N);
}

}  // namespace

CycField::CycField(unsigned N) : N_(N) {
    if (N == 0) throw std::invalid_argument("CycField: conductor must be positive");
    phi_ = cyclotomic_poly(N);
    degree_ = static_cast<unsigned>(phi_.size() - 1);

    // x^k mod Phi for k = degree .. 2*degree-2, by repeated shift-reduce.
    // Row 0 is x^degree = -(low-order part of Phi).
    if (degree_ >= 1) {
        std::vector<Integer> row(degree_, Integer(0));
        for (unsigned j = 0; j < degree_; ++j) row[j] = -phi_[j];
        reduction_.push_back(row);
        for (unsigned k = degree_ + 1; k + 1 <= 2 * degree_ - 1; ++k) {
            const std::vector<Integer>& prev = reduction_.back();
            std::vector<Integer> next(degree_, Integer(0));
            Integer top = prev[degree_ - 1];
            for (unsigned j = 1; j < degree_; ++j) next[j] = prev[j - 1];
            if (top != 0)
                for (unsigned j = 0; j < degree_; ++j) next[j] += top * reduction_[0][j];
            reduction_.push_back(std::move(next));
        }
    }

    zeta_powers_.resize(N);
    for (unsigned t = 0; t < N; ++t) {
        std::vector<Rational> coords(degree_, Rational(0));
        if (t < degree_) {
            coords[t] = 1;
        } else {
            // reduce x^t: start from the reduction row for x^degree and shift up
            std::vector<Rational> acc(degree_, Rational(0));
            for (unsigned j = 0; j < degree_; ++j) acc[j] = Rational(reduction_[0][j]);
            for (unsigned k = degree_ + 1; k <= t; ++k) {
                std::vector<Rational> next(degree_, Rational(0));
                Rational top = acc[degree_ - 1];
                for (unsigned j = 1; j < degree_; ++j) next[j] = acc[j - 1];
                if (top != 0)
                    for (unsigned j = 0; j < degree_; ++j)
                        next[j] += top * Rational(reduction_[0][j]);
                acc = std::move(next);
            }
            coords = std::move(acc);
        }
        zeta_powers_[t] = std::move(coords);
    }
}

const CycField& CycField::get(unsigned N) {
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<CycField>> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = registry[N];
    if (!slot) slot.reset(new CycField(N));
    return *slot;
}

const std::vector<Rational>& CycField::zeta_power(long t) const {
    long m = t % static_cast<long>(N_);
    if (m < 0) m += N_;
    return zeta_powers_[static_cast<size_t>(m)];
}

const std::vector<Integer>& CycField::reduction_row(unsigned k) const {
    if (k < degree_ || k > 2 * degree_ - 2)
        throw std::out_of_range("CycField::reduction_row");
    return reduction_[k - degree_];
}

CycRational CycRational::zero(unsigned N) {
    return CycRational(N, std::vector<Rational>(CycField::get(N).degree(), Rational(0)));
}

CycRational CycRational::one(unsigned N) { return from_rational(N, Rational(1)); }

CycRational CycRational::from_rational(unsigned N, const Rational& q) {
    std::vector<Rational> coords(CycField::get(N).degree(), Rational(0));
    coords[0] = q;
    return CycRational(N, std::move(coords));
}

CycRational CycRational::zeta(unsigned N, long t) {
    return CycRational(N, CycField::get(N).zeta_power(t));
}

CycRational CycRational::from_coords(unsigned N, std::vector<Rational> coords) {
    if (coords.size() != CycField::get(N).degree())
        throw std::invalid_argument("CycRational::from_coords: wrong coordinate count");
    return CycRational(N, std::move(coords));
}

bool CycRational::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CycRational::is_rational() const {
    for (size_t j = 1; j < coords_.size(); ++j)
        if (coords_[j] != 0) return false;
    return true;
}

void CycRational::align(CycRational& a, CycRational& b) {
    if (a.conductor_ == b.conductor_) return;
    if (a.conductor_ == 1) {
        a = from_rational(b.conductor_, a.coords_[0]);
        return;
    }
    if (b.conductor_ == 1) {
        b = from_rational(a.conductor_, b.coords_[0]);
        return;
    }
    throw std::invalid_argument("CycRational: conductor mismatch");
}

CycRational CycRational::operator-() const {
    CycRational r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

CycRational& CycRational::operator+=(const CycRational& rhs) {
    CycRational b = rhs;
    align(*this, b);
    for (size_t j = 0; j < coords_.size(); ++j) coords_[j] += b.coords_[j];
    return *this;
}

CycRational& CycRational::operator-=(const CycRational& rhs) {
    CycRational b = rhs;
    align(*this, b);
    for (size_t j = 0; j < coords_.size(); ++j) coords_[j] -= b.coords_[j];
    return *this;
}

CycRational& CycRational::operator*=(const CycRational& rhs) {
    CycRational b = rhs;
    align(*this, b);
    const CycField& field = CycField::get(conductor_);
    unsigned d = field.degree();
    std::vector<Rational> conv(2 * d - 1, Rational(0));
    for (unsigned i = 0; i < d; ++i) {
        if (coords_[i] == 0) continue;
        for (unsigned j = 0; j < d; ++j) {
            if (b.coords_[j] == 0) continue;
            conv[i + j] += coords_[i] * b.coords_[j];
        }
    }
    std::vector<Rational> out(d, Rational(0));
    for (unsigned k = 0; k < d; ++k) out[k] = conv[k];
    for (unsigned k = d; k < 2 * d - 1; ++k) {
        if (conv[k] == 0) continue;
        const std::vector<Integer>& row = field.reduction_row(k);
        for (unsigned j = 0; j < d; ++j)
            if (row[j] != 0) out[j] += conv[k] * Rational(row[j]);
    }
    coords_ = std::move(out);
    return *this;
}

CycRational& CycRational::operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

CycRational& CycRational::operator/=(const Rational& s) {
    if (s == 0) throw std::invalid_argument("CycRational: division by zero rational");
    for (auto& c : coords_) c /= s;
    return *this;
}

bool CycRational::operator==(const CycRational& rhs) const {
    if (conductor_ != rhs.conductor_) {
        if (is_rational() && rhs.is_rational()) return coords_[0] == rhs.coords_[0];
        return false;
    }
    return coords_ == rhs.coords_;
}

bool CycRational::operator<(const CycRational& rhs) const {
    if (conductor_ != rhs.conductor_) return conductor_ < rhs.conductor_;
    for (size_t j = 0; j < coords_.size(); ++j) {
        int c = cmp(coords_[j], rhs.coords_[j]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string CycRational::str() const {
    if (is_rational()) return to_string(coords_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j] == 0) continue;
        if (!first) os << " + ";
        os << "(" << to_string(coords_[j]) << ")";
        if (j == 1) os << "*z" << conductor_;
        if (j > 1) os << "*z" << conductor_ << "^" << j;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace orbgw
