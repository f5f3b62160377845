// Bernoulli numbers and Bernoulli polynomials B_m(x), exact over Q.
// Convention: B_1 = -1/2, i.e. B_1(x) = x - 1/2, so that the reflection
// B_m(1-x) = (-1)^m B_m(x) holds for all m.

#pragma once

#include "orbgw/rational.hpp"

namespace orbgw {

// m-th Bernoulli number. Values are computed once per degree via the
// recursive sum formula and cached; the cache behaves as a write-once
// table under concurrent access.
const Rational& bernoulli_number(unsigned m);

// B_m(x) = sum_k C(m,k) B_k x^{m-k}.
Rational bernoulli_eval(unsigned m, const Rational& x);

}  // namespace orbgw
