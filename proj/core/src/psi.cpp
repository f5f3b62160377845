#include "orbgw/psi.hpp"

#include <algorithm>
#include <numeric>

namespace orbgw {

namespace {

bool stable(unsigned g, size_t n) { return 2 * static_cast<long>(g) - 2 + static_cast<long>(n) > 0; }

}  // namespace

Rational PsiCache::integral(unsigned g, std::vector<unsigned> exponents) {
    size_t n = exponents.size();
    if (!stable(g, n)) return Rational(0);
    unsigned long dim = 3ul * g - 3 + n;
    unsigned long total = std::accumulate(exponents.begin(), exponents.end(), 0ul);
    if (total != dim) return Rational(0);
    std::sort(exponents.begin(), exponents.end());
    return lookup_or_compute(g, std::move(exponents));
}

size_t PsiCache::memo_size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.size();
}

Rational PsiCache::lookup_or_compute(unsigned g, std::vector<unsigned> sorted) {
    std::vector<unsigned> key;
    key.reserve(sorted.size() + 1);
    key.push_back(g);
    key.insert(key.end(), sorted.begin(), sorted.end());
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Rational value = compute(g, sorted);
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(std::move(key), value);  // idempotent under races
    return value;
}

Rational PsiCache::compute(unsigned g, const std::vector<unsigned>& a) {
    size_t n = a.size();

    if (g == 0 && n == 3) return Rational(1);
    if (g == 1 && n == 1) return Rational(1, 24);  // <tau_1>_1, KdV base case

    if (g == 0 && closed_form_g0_) {
        Rational v(factorial(n - 3));
        for (unsigned e : a) v /= Rational(factorial(e));
        return v;
    }

    // String equation: remove a tau_0, lower one other index.
    if (a.front() == 0) {
        std::vector<unsigned> rest(a.begin() + 1, a.end());
        Rational sum(0);
        for (size_t j = 0; j < rest.size(); ++j) {
            if (rest[j] == 0) continue;
            std::vector<unsigned> sub = rest;
            --sub[j];
            sum += integral(g, std::move(sub));
        }
        return sum;
    }

    // Dilaton equation: remove a tau_1.
    if (a.front() == 1) {
        std::vector<unsigned> rest(a.begin() + 1, a.end());
        Rational factor(2 * static_cast<long>(g) - 2 + static_cast<long>(rest.size()));
        return factor * integral(g, std::move(rest));
    }

    // All indices >= 2: DVV recursion on the largest index a_max = k+1.
    unsigned k = a.back() - 1;
    std::vector<unsigned> rest(a.begin(), a.end() - 1);
    size_t m = rest.size();

    Rational sum(0);
    // Joining term: tau_{k+1} merges with one remaining insertion.
    for (size_t j = 0; j < m; ++j) {
        std::vector<unsigned> sub = rest;
        sub.erase(sub.begin() + static_cast<long>(j));
        sub.push_back(k + rest[j]);
        Rational coeff(odd_double_factorial(static_cast<long>(k + rest[j])),
                       odd_double_factorial(static_cast<long>(rest[j]) - 1));
        coeff.canonicalize();
        sum += coeff * integral(g, std::move(sub));
    }

    // Splitting terms: tau_{k+1} opens into tau_b tau_c with b+c = k-1,
    // either lowering the genus or cutting the surface in two.
    Rational half(1, 2);
    for (unsigned b = 0; b + 1 <= k; ++b) {
        unsigned c = k - 1 - b;
        Rational dd(odd_double_factorial(b) * odd_double_factorial(c));

        if (g >= 1) {
            std::vector<unsigned> sub = rest;
            sub.push_back(b);
            sub.push_back(c);
            sum += half * dd * integral(g - 1, std::move(sub));
        }

        for (unsigned g1 = 0; g1 <= g; ++g1) {
            unsigned g2 = g - g1;
            for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
                std::vector<unsigned> left{b}, right{c};
                for (size_t j = 0; j < m; ++j)
                    ((mask >> j) & 1 ? left : right).push_back(rest[j]);
                if (!stable(g1, left.size()) || !stable(g2, right.size())) continue;
                Rational lv = integral(g1, std::move(left));
                if (lv == 0) continue;
                sum += half * dd * lv * integral(g2, std::move(right));
            }
        }
    }
    return sum / Rational(odd_double_factorial(k + 1));
}

PsiCache& psi_cache() {
    static PsiCache cache;
    return cache;
}

Rational psi_integral(unsigned g, std::vector<unsigned> exponents) {
    return psi_cache().integral(g, std::move(exponents));
}

}  // namespace orbgw
