// Sparse Laurent-Puiseux polynomials in the equivariant parameters
// w_1, ..., w_r: finite sums of monomials prod_i w_i^{q_i} with rational
// exponents and cyclotomic-rational coefficients. Exponent denominators stay
// bounded in practice (2*l_i per variable); the bound is validated where the
// orbifold data is built, not per operation.

#pragma once

#include "orbgw/cyclotomic.hpp"
#include "orbgw/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace orbgw {

class PuiseuxMonomial {
public:
    PuiseuxMonomial() = default;
    explicit PuiseuxMonomial(std::vector<Rational> exps) : exps_(std::move(exps)) {}
    static PuiseuxMonomial unit(unsigned nvars) {
        return PuiseuxMonomial(std::vector<Rational>(nvars, Rational(0)));
    }

    unsigned nvars() const { return static_cast<unsigned>(exps_.size()); }
    const std::vector<Rational>& exponents() const { return exps_; }
    const Rational& exponent(unsigned i) const { return exps_[i]; }

    PuiseuxMonomial& operator*=(const PuiseuxMonomial& rhs);
    friend PuiseuxMonomial operator*(PuiseuxMonomial a, const PuiseuxMonomial& b) {
        return a *= b;
    }
    PuiseuxMonomial inverse() const;
    PuiseuxMonomial pow(const Rational& e) const;

    bool is_unit() const;
    bool operator==(const PuiseuxMonomial& rhs) const { return exps_ == rhs.exps_; }
    bool operator<(const PuiseuxMonomial& rhs) const;  // lexicographic

    std::string str() const;  // e.g. "w1^-1*w3^1/2", "1" for the unit

private:
    std::vector<Rational> exps_;
};

class PuiseuxPoly {
public:
    PuiseuxPoly() : nvars_(0), conductor_(1) {}
    PuiseuxPoly(unsigned nvars, unsigned conductor)
        : nvars_(nvars), conductor_(conductor) {}

    static PuiseuxPoly zero(unsigned nvars, unsigned conductor) {
        return PuiseuxPoly(nvars, conductor);
    }
    static PuiseuxPoly constant(unsigned nvars, unsigned conductor, const Rational& q);
    static PuiseuxPoly constant(unsigned nvars, const CycRational& c);
    static PuiseuxPoly monomial(const PuiseuxMonomial& m, const CycRational& c);

    unsigned nvars() const { return nvars_; }
    unsigned conductor() const { return conductor_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<PuiseuxMonomial, CycRational>& terms() const { return terms_; }

    // Coefficient of a monomial (zero if absent).
    CycRational coefficient(const PuiseuxMonomial& m) const;
    // True when the polynomial is a constant (possibly zero).
    bool is_constant() const;
    CycRational constant_part() const;
    // True when every coefficient lies in Q (no nonconstant cyclotomic coords).
    bool has_rational_coefficients() const;

    void add_term(const PuiseuxMonomial& m, const CycRational& c);

    PuiseuxPoly operator-() const;
    PuiseuxPoly& operator+=(const PuiseuxPoly& rhs);
    PuiseuxPoly& operator-=(const PuiseuxPoly& rhs);
    PuiseuxPoly& operator*=(const PuiseuxPoly& rhs);
    PuiseuxPoly& operator*=(const CycRational& s);
    PuiseuxPoly& operator*=(const Rational& s);
    PuiseuxPoly& operator/=(const Rational& s);
    // Multiply by a (possibly negative-exponent) monomial: exact.
    PuiseuxPoly& shift(const PuiseuxMonomial& m);

    friend PuiseuxPoly operator+(PuiseuxPoly a, const PuiseuxPoly& b) { return a += b; }
    friend PuiseuxPoly operator-(PuiseuxPoly a, const PuiseuxPoly& b) { return a -= b; }
    friend PuiseuxPoly operator*(PuiseuxPoly a, const PuiseuxPoly& b) { return a *= b; }
    friend PuiseuxPoly operator*(PuiseuxPoly a, const CycRational& s) { return a *= s; }
    friend PuiseuxPoly operator*(PuiseuxPoly a, const Rational& s) { return a *= s; }
    friend PuiseuxPoly operator/(PuiseuxPoly a, const Rational& s) { return a /= s; }

    bool operator==(const PuiseuxPoly& rhs) const;
    bool operator!=(const PuiseuxPoly& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    void check_compatible(const PuiseuxPoly& rhs) const;

    unsigned nvars_;
    unsigned conductor_;
    std::map<PuiseuxMonomial, CycRational> terms_;  // no zero coefficients stored
};

}  // namespace orbgw
