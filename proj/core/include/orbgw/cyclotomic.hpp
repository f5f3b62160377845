// Exact arithmetic in the cyclotomic field Q(zeta_N).
//
// Elements are stored in the power basis 1, zeta, ..., zeta^{phi(N)-1} modulo
// the N-th cyclotomic polynomial Phi_N. The per-conductor data (Phi_N, the
// reduction table for zeta^k with k >= phi(N), and the table of all zeta^t)
// lives in a shared registry so values themselves stay small. Multiplicative
// inverses are deliberately absent: every division in this library is by a
// rational or by a monomial.

#pragma once

#include "orbgw/rational.hpp"

#include <vector>

namespace orbgw {

class CycField {
public:
    // Shared immutable per-N context; write-once registry, thread-safe.
    static const CycField& get(unsigned N);

    unsigned conductor() const { return N_; }
    unsigned degree() const { return degree_; }  // phi(N)

    // Coordinates of zeta_N^t (t taken mod N) in the power basis.
    const std::vector<Rational>& zeta_power(long t) const;

    // x^k mod Phi_N for k in [degree, 2*degree-2].
    const std::vector<Integer>& reduction_row(unsigned k) const;

    const std::vector<Integer>& cyclotomic_polynomial() const { return phi_; }

private:
    explicit CycField(unsigned N);

    unsigned N_;
    unsigned degree_;
    std::vector<Integer> phi_;                        // monic, length degree_+1
    std::vector<std::vector<Integer>> reduction_;     // rows for k-degree_ in [0, degree_-2]
    std::vector<std::vector<Rational>> zeta_powers_;  // t in [0, N)
};

class CycRational {
public:
    CycRational() : conductor_(1), coords_(1, Rational(0)) {}

    static CycRational zero(unsigned N);
    static CycRational one(unsigned N);
    static CycRational from_rational(unsigned N, const Rational& q);
    // zeta_N^t, t arbitrary integer (reduced mod N).
    static CycRational zeta(unsigned N, long t);
    static CycRational from_coords(unsigned N, std::vector<Rational> coords);

    unsigned conductor() const { return conductor_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    // True when all coordinates beyond the constant one vanish.
    bool is_rational() const;
    const Rational& rational_part() const { return coords_[0]; }

    CycRational operator-() const;
    CycRational& operator+=(const CycRational& rhs);
    CycRational& operator-=(const CycRational& rhs);
    CycRational& operator*=(const CycRational& rhs);
    CycRational& operator*=(const Rational& s);
    CycRational& operator/=(const Rational& s);

    friend CycRational operator+(CycRational a, const CycRational& b) { return a += b; }
    friend CycRational operator-(CycRational a, const CycRational& b) { return a -= b; }
    friend CycRational operator*(CycRational a, const CycRational& b) { return a *= b; }
    friend CycRational operator*(CycRational a, const Rational& s) { return a *= s; }
    friend CycRational operator*(const Rational& s, CycRational a) { return a *= s; }
    friend CycRational operator/(CycRational a, const Rational& s) { return a /= s; }

    bool operator==(const CycRational& rhs) const;
    bool operator!=(const CycRational& rhs) const { return !(*this == rhs); }
    // Total order for use as a map key (lexicographic on coords after
    // conductor); not a meaningful field order.
    bool operator<(const CycRational& rhs) const;

    std::string str() const;

private:
    CycRational(unsigned N, std::vector<Rational> coords)
        : conductor_(N), coords_(std::move(coords)) {}

    // Promotes a conductor-1 operand to the other side's field; any other
    // mismatch throws.
    static void align(CycRational& a, CycRational& b);

    unsigned conductor_;
    std::vector<Rational> coords_;  // length phi(conductor_)
};

}  // namespace orbgw
