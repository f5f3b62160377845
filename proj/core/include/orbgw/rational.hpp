// Exact rational scalars. Thin layer over GMP's mpz/mpq classes: mpq_class
// keeps fractions in lowest terms with positive denominator, which is exactly
// the canonical form assumed everywhere else in this library.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbgw {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "p/q" or "-p/q" with arbitrary-precision parts.
inline Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("rational_from_string: bad literal '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational_from_string: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

// "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Integer& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("to_long: value out of range");
    return n.get_si();
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// (2k+1)!! for k >= 0, with the empty-product convention (-1)!! = 1 handled
// by odd_double_factorial(-1) callers passing k through as a signed value.
inline Integer odd_double_factorial(long k) {
    if (k <= 0) return Integer(1);
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(2 * k + 1));
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::invalid_argument("pow_rational: 0 to negative power");
        return Rational(0);
    }
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), a);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), a);
    out.canonicalize();
    if (e < 0) out = Rational(1) / out;
    return out;
}

// Fractional part in [0,1).
inline Rational frac_part(const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - Rational(fl);
}

inline long lcm_long(long a, long b) {
    Integer r;
    mpz_lcm_ui(r.get_mpz_t(), Integer(a).get_mpz_t(), static_cast<unsigned long>(b));
    return to_long(r);
}

inline long gcd_long(long a, long b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), Integer(a).get_mpz_t(), Integer(b).get_mpz_t());
    return to_long(r);
}

}  // namespace orbgw
