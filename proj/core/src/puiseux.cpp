#include "orbgw/puiseux.hpp"

#include <sstream>
#include <stdexcept>

namespace orbgw {

PuiseuxMonomial& PuiseuxMonomial::operator*=(const PuiseuxMonomial& rhs) {
    if (exps_.size() != rhs.exps_.size())
        throw std::invalid_argument("PuiseuxMonomial: variable count mismatch");
    for (size_t i = 0; i < exps_.size(); ++i) exps_[i] += rhs.exps_[i];
    return *this;
}

PuiseuxMonomial PuiseuxMonomial::inverse() const {
    PuiseuxMonomial m = *this;
    for (auto& e : m.exps_) e = -e;
    return m;
}

PuiseuxMonomial PuiseuxMonomial::pow(const Rational& e) const {
    PuiseuxMonomial m = *this;
    for (auto& q : m.exps_) q *= e;
    return m;
}

bool PuiseuxMonomial::is_unit() const {
    for (const auto& e : exps_)
        if (e != 0) return false;
    return true;
}

bool PuiseuxMonomial::operator<(const PuiseuxMonomial& rhs) const {
    if (exps_.size() != rhs.exps_.size()) return exps_.size() < rhs.exps_.size();
    for (size_t i = 0; i < exps_.size(); ++i) {
        int c = cmp(exps_[i], rhs.exps_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string PuiseuxMonomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) os << "*";
        os << "w" << (i + 1);
        if (exps_[i] != 1) os << "^" << to_string(exps_[i]);
        first = false;
    }
    if (first) return "1";
    return os.str();
}

PuiseuxPoly PuiseuxPoly::constant(unsigned nvars, unsigned conductor, const Rational& q) {
    return monomial(PuiseuxMonomial::unit(nvars), CycRational::from_rational(conductor, q));
}

PuiseuxPoly PuiseuxPoly::constant(unsigned nvars, const CycRational& c) {
    return monomial(PuiseuxMonomial::unit(nvars), c);
}

PuiseuxPoly PuiseuxPoly::monomial(const PuiseuxMonomial& m, const CycRational& c) {
    PuiseuxPoly p(m.nvars(), c.conductor());
    p.add_term(m, c);
    return p;
}

CycRational PuiseuxPoly::coefficient(const PuiseuxMonomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return CycRational::zero(conductor_);
    return it->second;
}

bool PuiseuxPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_unit();
}

CycRational PuiseuxPoly::constant_part() const {
    return coefficient(PuiseuxMonomial::unit(nvars_));
}

bool PuiseuxPoly::has_rational_coefficients() const {
    for (const auto& [m, c] : terms_)
        if (!c.is_rational()) return false;
    return true;
}

void PuiseuxPoly::add_term(const PuiseuxMonomial& m, const CycRational& c) {
    if (m.nvars() != nvars_)
        throw std::invalid_argument("PuiseuxPoly::add_term: variable count mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void PuiseuxPoly::check_compatible(const PuiseuxPoly& rhs) const {
    if (nvars_ != rhs.nvars_)
        throw std::invalid_argument("PuiseuxPoly: variable count mismatch");
    if (conductor_ != rhs.conductor_ && conductor_ != 1 && rhs.conductor_ != 1)
        throw std::invalid_argument("PuiseuxPoly: conductor mismatch");
}

PuiseuxPoly PuiseuxPoly::operator-() const {
    PuiseuxPoly p(nvars_, conductor_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

PuiseuxPoly& PuiseuxPoly::operator+=(const PuiseuxPoly& rhs) {
    check_compatible(rhs);
    if (conductor_ == 1 && rhs.conductor_ != 1) conductor_ = rhs.conductor_;
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

PuiseuxPoly& PuiseuxPoly::operator-=(const PuiseuxPoly& rhs) {
    check_compatible(rhs);
    if (conductor_ == 1 && rhs.conductor_ != 1) conductor_ = rhs.conductor_;
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

PuiseuxPoly& PuiseuxPoly::operator*=(const PuiseuxPoly& rhs) {
    check_compatible(rhs);
    unsigned conductor = conductor_ == 1 ? rhs.conductor_ : conductor_;
    PuiseuxPoly out(nvars_, conductor);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
    *this = std::move(out);
    return *this;
}

PuiseuxPoly& PuiseuxPoly::operator*=(const CycRational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (conductor_ == 1 && s.conductor() != 1) conductor_ = s.conductor();
    std::map<PuiseuxMonomial, CycRational> out;
    for (const auto& [m, c] : terms_) {
        CycRational v = c * s;
        if (!v.is_zero()) out.emplace(m, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
}

PuiseuxPoly& PuiseuxPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

PuiseuxPoly& PuiseuxPoly::operator/=(const Rational& s) {
    if (s == 0) throw std::invalid_argument("PuiseuxPoly: division by zero");
    for (auto& [m, c] : terms_) c /= s;
    return *this;
}

PuiseuxPoly& PuiseuxPoly::shift(const PuiseuxMonomial& m) {
    if (m.nvars() != nvars_)
        throw std::invalid_argument("PuiseuxPoly::shift: variable count mismatch");
    if (m.is_unit()) return *this;
    std::map<PuiseuxMonomial, CycRational> out;
    for (const auto& [mono, c] : terms_) out.emplace(mono * m, c);
    terms_ = std::move(out);
    return *this;
}

bool PuiseuxPoly::operator==(const PuiseuxPoly& rhs) const {
    if (nvars_ != rhs.nvars_) return false;
    if (terms_.size() != rhs.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first)) return false;
        if (it->second != jt->second) return false;
    }
    return true;
}

std::string PuiseuxPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        if (!m.is_unit()) os << "*" << m.str();
        first = false;
    }
    return os.str();
}

}  // namespace orbgw
