// The Givental-style R-matrix attached to [C^r/G]. Diagonal in the sector
// basis:
//
//   d_h(z) = exp( sum_{m>=1} (-1)^m/(m(m+1)) sum_i B_{m+1}(c_i(h)) (z/w_i)^m ),
//
// truncated at a caller-chosen order; canonical-basis entries
//
//   R(z)^a_b = (1/|G|) sum_h chi_a(h) chi_b(h^{-1}) d_h(z)
//
// are materialized lazily, since the graph sum often contracts over them
// before most entries are touched. The constant term is the identity matrix,
// and R(z)R(-z)^T = 1 up to truncation (the Bernoulli reflection in action);
// edge-weight division checks the latter on every use.

#pragma once

#include "orbgw/groupchar.hpp"
#include "orbgw/series.hpp"

#include <map>
#include <mutex>

namespace orbgw {

// s^i_k = (k-1)! (-w_i)^{-k}; k >= 1.
PuiseuxPoly s_coefficient(const OrbifoldData& orb, unsigned i, unsigned k);

// The exponent argument of d_h(z) and its exponential, truncated at order K.
TruncSeries diagonal_entry(const OrbifoldData& orb, size_t h_idx, unsigned K);

class RMatrix {
public:
    RMatrix(const OrbifoldData& orb, unsigned order);

    const OrbifoldData& orbifold() const { return *orb_; }
    unsigned order() const { return order_; }

    const TruncSeries& diagonal(size_t h_idx) const { return diag_[h_idx]; }

    // R(z)^{upper}_{lower} in the canonical basis; lazily cached.
    const TruncSeries& entry(size_t upper_idx, size_t lower_idx) const;
    // R(-z)^{upper}_{lower}.
    TruncSeries entry_neg(size_t upper_idx, size_t lower_idx) const;
    // Single coefficient [z^k] R(-z)^{upper}_{lower}.
    PuiseuxPoly coeff_neg(size_t upper_idx, size_t lower_idx, unsigned k) const;

private:
    const OrbifoldData* orb_;
    unsigned order_;
    std::vector<TruncSeries> diag_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<size_t, size_t>, TruncSeries> entries_;
};

}  // namespace orbgw
