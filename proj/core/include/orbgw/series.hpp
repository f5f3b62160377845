// Truncated formal power series over PuiseuxPoly coefficients, in one formal
// variable z or two variables (z, zeta), cut off at a fixed total order K.
// Series products, exponentials and the division by (z + zeta) used by the
// edge weights are all exact below the cutoff.

#pragma once

#include "orbgw/puiseux.hpp"

#include <map>
#include <utility>

namespace orbgw {

class TruncSeries {
public:
    TruncSeries() : nvars_(1), order_(0), r_(0), conductor_(1) {}
    TruncSeries(unsigned nvars, unsigned order, unsigned r, unsigned conductor);

    static TruncSeries one(unsigned nvars, unsigned order, unsigned r, unsigned conductor);

    unsigned nvars() const { return nvars_; }
    unsigned order() const { return order_; }
    unsigned r() const { return r_; }
    unsigned conductor() const { return conductor_; }

    // Coefficient accessors; out-of-range exponents are an error, absent
    // in-range coefficients are zero.
    const PuiseuxPoly& coeff(unsigned i, unsigned j = 0) const;
    void set_coeff(unsigned i, unsigned j, const PuiseuxPoly& p);
    void add_coeff(unsigned i, unsigned j, const PuiseuxPoly& p);
    void set_coeff(unsigned i, const PuiseuxPoly& p) { set_coeff(i, 0, p); }
    const std::map<std::pair<unsigned, unsigned>, PuiseuxPoly>& coeffs() const {
        return coeffs_;
    }

    bool is_zero() const { return coeffs_.empty(); }

    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& rhs);
    TruncSeries& operator-=(const TruncSeries& rhs);
    TruncSeries& operator*=(const TruncSeries& rhs);
    TruncSeries& operator*=(const PuiseuxPoly& s);
    TruncSeries& operator*=(const Rational& s);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const TruncSeries& b) { return a *= b; }
    friend TruncSeries operator*(TruncSeries a, const PuiseuxPoly& s) { return a *= s; }

    // z -> -z (and zeta -> -zeta for bivariate series).
    TruncSeries negate_variables() const;
    // Lower the truncation order.
    TruncSeries truncated(unsigned new_order) const;

    bool operator==(const TruncSeries& rhs) const;
    bool operator!=(const TruncSeries& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    void check_compatible(const TruncSeries& rhs) const;

    unsigned nvars_;   // 1 or 2
    unsigned order_;   // keep exponents with i+j <= order_
    unsigned r_;       // Puiseux variable count of coefficients
    unsigned conductor_;
    std::map<std::pair<unsigned, unsigned>, PuiseuxPoly> coeffs_;  // nonzero only
};

// exp(s) truncated at the order of s; requires vanishing constant term.
TruncSeries series_exp(const TruncSeries& s);

// a(z) * b(zeta) as a bivariate series truncated at `order`.
TruncSeries outer_product(const TruncSeries& a, const TruncSeries& b, unsigned order);

// The unique q with q*(z+zeta) = n up to the order of n; q has order-1.
// Throws std::domain_error naming the offending coefficient if n is not
// divisible, i.e. if n does not vanish on the line zeta = -z.
TruncSeries divide_by_z_plus_zeta(const TruncSeries& n);

}  // namespace orbgw
