// Invariant suites over every module, runnable at desk scale. The CLI
// `selfcheck` command executes a quick or full preset; the acceptance suite
// drives the same checks at its own sizes. Each check reports pass/fail with
// a localized detail string for the first failure.

#pragma once

#include "orbgw/groupchar.hpp"
#include "orbgw/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace orbgw {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;  // first failing instance, empty when passing
    double seconds = 0.0;
};

enum class CheckLevel { quick, full };

// The standard orbifold test set: groups {1, Z/2, Z/3, Z/2xZ/2}, every action
// with r <= r_max axes (all character assignments; their orders automatically
// divide 3 or 2).
std::vector<OrbifoldData> standard_orbifold_set(unsigned r_max);

// psi-integral table: <tau_0^3>_0 = 1, genus-0 closed form against the
// recursion for n <= n_max, <tau_1>_1 = 1/24, <tau_4>_2 = 1/1152.
CheckResult check_psi_table(unsigned n_max);

// Character orthogonality (both relations) for every abelian group with
// |G| <= max_order.
CheckResult check_orthogonality(long max_order);

// B_m(x+1)-B_m(x) = m x^{m-1} and B_m(1-x) = (-1)^m B_m(x) for m <= m_max and
// `trials` random rational x. The evaluator is injectable so a perturbed
// table is caught and localized.
CheckResult check_bernoulli_identities(
    unsigned m_max, unsigned trials,
    const std::function<Rational(unsigned, const Rational&)>& eval);

// Exact ring axioms on random Puiseux polynomial triples.
CheckResult check_ring_axioms(unsigned trials, unsigned seed);

// series_exp(s)*series_exp(-s) = 1 and divide_by_z_plus_zeta(q*(z+zeta)) = q
// on random series.
CheckResult check_series_identities(unsigned trials, unsigned seed);

// sum_g R(z)^g_a R(-z)^g_b = delta_ab up to order K, entrywise.
CheckResult check_r_symplectic(const std::vector<OrbifoldData>& orbs, unsigned order);

// Edge-numerator divisibility by z+zeta up to total order K for all markings.
CheckResult check_edge_divisibility(const std::vector<OrbifoldData>& orbs,
                                    unsigned order);

// Dilaton-leaf weight is independent of the marking and equals the identity
// sector column sum.
CheckResult check_dilaton_identity(const std::vector<OrbifoldData>& orbs);

// Graph-sum twisted correlators equal quantized-operator extractions for
// every insertion multiset of the listed (g,n) cells.
CheckResult check_oracle_equality(const std::vector<OrbifoldData>& orbs,
                                  const std::vector<std::pair<unsigned, unsigned>>& cells);

// Known Hodge constants on C^1: <tau_0(1bar)>_{1,1} = -1/(24w),
// <tau_1(1bar)>_{1,1} = 1/24.
CheckResult check_hodge_constants();

// Per-graph normalization bridge w = e1^{g-1} wtilde for every generated
// graph with 2g+n <= budget.
CheckResult check_normalization_bridge(const std::vector<OrbifoldData>& orbs,
                                       unsigned budget);

// Correlators with all insertions in the unit-bar basis are rational
// (vanishing nonconstant cyclotomic coordinates), for Z/3 and Z/4 actions.
CheckResult check_rationality();

// Ordered correlator with equal series times 1/n! equals the unordered sum.
CheckResult check_ordered_consistency();

std::vector<CheckResult> run_selfcheck(CheckLevel level);

}  // namespace orbgw
