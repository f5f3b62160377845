// Exact psi-class intersection numbers <tau_{a_1} ... tau_{a_n}>_g over the
// moduli of stable curves. Values are zero unless 2g-2+n > 0 and
// sum a_i = 3g-3+n. Computed by the Witten-Kontsevich/DVV recursion on the
// largest descendant index, with the string and dilaton equations applied
// first and genus zero served by the closed form (n-3)!/prod(a_i!) unless
// the cache is built recursion-only for cross-checking.

#pragma once

#include "orbgw/rational.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace orbgw {

class PsiCache {
public:
    explicit PsiCache(bool use_genus0_closed_form = true)
        : closed_form_g0_(use_genus0_closed_form) {}

    // Exponent order is irrelevant; unstable or dimension-violating queries
    // return 0 rather than erroring.
    Rational integral(unsigned g, std::vector<unsigned> exponents);

    size_t memo_size() const;

private:
    Rational lookup_or_compute(unsigned g, std::vector<unsigned> sorted);
    Rational compute(unsigned g, const std::vector<unsigned>& a);

    bool closed_form_g0_;
    mutable std::mutex mutex_;
    std::map<std::vector<unsigned>, Rational> memo_;  // key: {g, sorted exps...}
};

// Shared process-wide cache.
PsiCache& psi_cache();
Rational psi_integral(unsigned g, std::vector<unsigned> exponents);

}  // namespace orbgw
