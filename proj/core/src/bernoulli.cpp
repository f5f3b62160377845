#include "orbgw/bernoulli.hpp"

#include <deque>
#include <mutex>

namespace orbgw {

namespace {
std::mutex g_mutex;
// deque: growth never moves already-published entries, so references handed
// out earlier stay valid while another thread extends the table
std::deque<Rational> g_numbers;  // g_numbers[m] = B_m once computed
}  // namespace

const Rational& bernoulli_number(unsigned m) {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (g_numbers.empty()) g_numbers.emplace_back(1);
    while (g_numbers.size() <= m) {
        // sum_{j=0}^{n} C(n+1,j) B_j = 0 for n >= 1
        unsigned n = static_cast<unsigned>(g_numbers.size());
        Rational acc(0);
        for (unsigned j = 0; j < n; ++j)
            acc += Rational(binomial(n + 1, j)) * g_numbers[j];
        g_numbers.push_back(-acc / Rational(n + 1));
    }
    return g_numbers[m];
}

Rational bernoulli_eval(unsigned m, const Rational& x) {
    bernoulli_number(m);  // fill cache up to m
    Rational result(0);
    Rational xpow(1);
    // iterate k = m down to 0 so x-powers build up incrementally
    for (unsigned k = 0; k <= m; ++k) {
        unsigned idx = m - k;  // Bernoulli index
        Rational term = Rational(binomial(m, idx)) * bernoulli_number(idx) * xpow;
        result += term;
        xpow *= x;
    }
    return result;
}

}  // namespace orbgw
