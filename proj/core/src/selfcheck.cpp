#include "orbgw/selfcheck.hpp"

#include "orbgw/bernoulli.hpp"
#include "orbgw/bgpotential.hpp"
#include "orbgw/graphsum.hpp"
#include "orbgw/qrr.hpp"
#include "orbgw/serialize.hpp"
#include "orbgw/series.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace orbgw {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

CheckResult finish(CheckResult r, const Stopwatch& sw) {
    r.seconds = sw.seconds();
    return r;
}

std::string orb_label(const OrbifoldData& orb) {
    std::ostringstream os;
    os << "G=[";
    for (size_t k = 0; k < orb.orders().size(); ++k)
        os << (k ? "," : "") << orb.orders()[k];
    os << "] action=[";
    for (unsigned i = 0; i < orb.rank(); ++i) {
        os << (i ? ";" : "");
        for (size_t k = 0; k < orb.action()[i].size(); ++k)
            os << (k ? "," : "") << orb.action()[i][k];
    }
    os << "]";
    return os.str();
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    return rational(num(rng), den(rng));
}

PuiseuxPoly random_poly(std::mt19937& rng, unsigned nvars, unsigned conductor) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<long> expo(-2, 2);
    std::uniform_int_distribution<int> halves(0, 1);
    unsigned degree = CycField::get(conductor).degree();
    PuiseuxPoly p(nvars, conductor);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<Rational> exps(nvars);
        for (auto& e : exps) e = Rational(expo(rng)) + rational(halves(rng), 2);
        std::vector<Rational> coords(degree);
        for (auto& c : coords) c = random_rational(rng);
        p.add_term(PuiseuxMonomial(std::move(exps)),
                   CycRational::from_coords(conductor, std::move(coords)));
    }
    return p;
}

TruncSeries random_series(std::mt19937& rng, unsigned nvars, unsigned order, unsigned r,
                          unsigned conductor, bool zero_constant) {
    TruncSeries s(nvars, order, r, conductor);
    for (unsigned i = 0; i <= order; ++i) {
        for (unsigned j = 0; j + i <= order; ++j) {
            if (nvars == 1 && j > 0) break;
            if (zero_constant && i == 0 && j == 0) continue;
            s.set_coeff(i, j, random_poly(rng, r, conductor));
        }
    }
    return s;
}

}  // namespace

std::vector<OrbifoldData> standard_orbifold_set(unsigned r_max) {
    std::vector<OrbifoldData> orbs;
    std::vector<std::vector<long>> groups = {{}, {2}, {3}, {2, 2}};
    for (const auto& orders : groups) {
        size_t n = 1;
        for (long x : orders) n *= static_cast<size_t>(x);
        // character tuples of length r
        for (unsigned r = 1; r <= r_max; ++r) {
            std::vector<size_t> pick(r, 0);
            while (true) {
                std::vector<std::vector<long>> action;
                OrbifoldData probe = OrbifoldData::build(
                    orders, std::vector<std::vector<long>>(
                                1, std::vector<long>(orders.size(), 0)));
                for (unsigned i = 0; i < r; ++i)
                    action.push_back(probe.character_at(pick[i]).residues);
                orbs.push_back(OrbifoldData::build(orders, action));
                unsigned j = 0;
                while (j < r && ++pick[j] == n) pick[j++] = 0;
                if (j == r) break;
            }
        }
    }
    return orbs;
}

CheckResult check_psi_table(unsigned n_max) {
    Stopwatch sw;
    CheckResult r{.name = "psi-table"};
    PsiCache closed(true), recursive(false);

    if (closed.integral(0, {0, 0, 0}) != 1) {
        r.pass = false;
        r.detail = "<tau_0^3>_0 != 1";
        return finish(r, sw);
    }
    // closed form vs pure recursion for all genus-0 multisets, n <= n_max
    for (unsigned n = 3; n <= n_max && r.pass; ++n) {
        std::vector<unsigned> exps(n, 0);
        std::function<void(unsigned, unsigned, unsigned)> rec = [&](unsigned pos,
                                                                    unsigned left,
                                                                    unsigned minv) {
            if (!r.pass) return;
            if (pos == n) {
                if (left != 0) return;
                Rational a = closed.integral(0, exps);
                Rational b = recursive.integral(0, exps);
                if (a != b) {
                    r.pass = false;
                    std::ostringstream os;
                    os << "genus-0 closed form vs recursion at n=" << n << ": " << a
                       << " vs " << b;
                    r.detail = os.str();
                }
                return;
            }
            for (unsigned a = minv; a <= left; ++a) {
                exps[pos] = a;
                rec(pos + 1, left - a, a);
            }
        };
        rec(0, n - 3, 0);
    }
    if (r.pass && recursive.integral(1, {1}) != Rational(1, 24)) {
        r.pass = false;
        r.detail = "<tau_1>_1 != 1/24";
    }
    if (r.pass && recursive.integral(2, {4}) != Rational(1, 1152)) {
        r.pass = false;
        r.detail = "<tau_4>_2 != 1/1152";
    }
    return finish(r, sw);
}

CheckResult check_orthogonality(long max_order) {
    Stopwatch sw;
    CheckResult r{.name = "character-orthogonality"};
    // all abelian groups with |G| <= max_order: multisets of factors >= 2
    std::vector<std::vector<long>> groups = {{}};
    std::function<void(long, long, std::vector<long>&)> gen =
        [&](long min_factor, long budget, std::vector<long>& acc) {
            for (long f = min_factor; f <= budget; ++f) {
                if (budget / f < 1) break;
                acc.push_back(f);
                groups.push_back(acc);
                gen(f, budget / f, acc);
                acc.pop_back();
            }
        };
    std::vector<long> acc;
    gen(2, max_order, acc);

    for (const auto& orders : groups) {
        OrbifoldData orb = OrbifoldData::build(
            orders, std::vector<std::vector<long>>(1, std::vector<long>(orders.size(), 0)));
        size_t n = orb.order();
        unsigned N = static_cast<unsigned>(orb.exponent());
        Rational inv(1, static_cast<long>(n));
        for (size_t a = 0; a < n; ++a) {
            for (size_t b = 0; b < n; ++b) {
                CycRational first = CycRational::zero(N), second = CycRational::zero(N);
                for (size_t h = 0; h < n; ++h) {
                    first += orb.chi_index(a, orb.inverse_index(h)) * orb.chi_index(b, h);
                    second += orb.chi_index(h, orb.inverse_index(a)) * orb.chi_index(h, b);
                }
                first *= inv;
                second *= inv;
                CycRational want =
                    a == b ? CycRational::one(N) : CycRational::zero(N);
                if (!(first == want) || !(second == want)) {
                    r.pass = false;
                    std::ostringstream os;
                    os << "orthogonality fails for " << orb_label(orb) << " at pair ("
                       << a << "," << b << ")";
                    r.detail = os.str();
                    return finish(r, sw);
                }
            }
        }
    }
    return finish(r, sw);
}

CheckResult check_bernoulli_identities(
    unsigned m_max, unsigned trials,
    const std::function<Rational(unsigned, const Rational&)>& eval) {
    Stopwatch sw;
    CheckResult r{.name = "bernoulli-identities"};
    std::mt19937 rng(20240811);
    for (unsigned m = 0; m <= m_max && r.pass; ++m) {
        for (unsigned t = 0; t < trials && r.pass; ++t) {
            Rational x = random_rational(rng);
            Rational diff = eval(m, x + 1) - eval(m, x);
            Rational want = m == 0 ? Rational(0)
                                   : Rational(m) * pow_rational(x, static_cast<long>(m) - 1);
            if (diff != want) {
                r.pass = false;
                std::ostringstream os;
                os << "difference identity fails in exactalg at m=" << m
                   << ", x=" << to_string(x);
                r.detail = os.str();
                break;
            }
            Rational refl = eval(m, Rational(1) - x);
            Rational want2 = (m % 2 == 0) ? eval(m, x) : -eval(m, x);
            if (refl != want2) {
                r.pass = false;
                std::ostringstream os;
                os << "reflection identity fails in exactalg at m=" << m
                   << ", x=" << to_string(x);
                r.detail = os.str();
            }
        }
    }
    return finish(r, sw);
}

CheckResult check_ring_axioms(unsigned trials, unsigned seed) {
    Stopwatch sw;
    CheckResult r{.name = "puiseux-ring-axioms"};
    std::mt19937 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        unsigned conductor = (t % 2 == 0) ? 3u : 4u;
        PuiseuxPoly a = random_poly(rng, 2, conductor);
        PuiseuxPoly b = random_poly(rng, 2, conductor);
        PuiseuxPoly c = random_poly(rng, 2, conductor);
        if (!((a * b) * c == a * (b * c)) || !(a * (b + c) == a * b + a * c) ||
            !(a + b == b + a)) {
            r.pass = false;
            r.detail = "ring axiom fails on random triple, trial " + std::to_string(t);
            break;
        }
    }
    return finish(r, sw);
}

CheckResult check_series_identities(unsigned trials, unsigned seed) {
    Stopwatch sw;
    CheckResult r{.name = "series-identities"};
    std::mt19937 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        unsigned order = 3 + t % 3;
        TruncSeries s = random_series(rng, 1, order, 2, 3, true);
        TruncSeries prod = series_exp(s) * series_exp(-s);
        if (!(prod == TruncSeries::one(1, order, 2, 3))) {
            r.pass = false;
            r.detail = "series_exp(s)*series_exp(-s) != 1, trial " + std::to_string(t);
            break;
        }
        TruncSeries q = random_series(rng, 2, order, 2, 3, false);
        // n = q*(z+zeta), truncated one order higher
        TruncSeries n(2, order + 1, 2, 3);
        for (const auto& [k, p] : q.coeffs()) {
            n.add_coeff(k.first + 1, k.second, p);
            n.add_coeff(k.first, k.second + 1, p);
        }
        TruncSeries back = divide_by_z_plus_zeta(n);
        if (!(back == q)) {
            r.pass = false;
            r.detail = "divide_by_z_plus_zeta roundtrip fails, trial " + std::to_string(t);
            break;
        }
    }
    return finish(r, sw);
}

CheckResult check_r_symplectic(const std::vector<OrbifoldData>& orbs, unsigned order) {
    Stopwatch sw;
    CheckResult r{.name = "r-matrix-symplectic"};
    for (const auto& orb : orbs) {
        RMatrix rm(orb, order);
        unsigned N = static_cast<unsigned>(orb.exponent());
        for (size_t a = 0; a < orb.order(); ++a) {
            for (size_t b = 0; b < orb.order(); ++b) {
                TruncSeries sum(1, order, orb.rank(), N);
                for (size_t gamma = 0; gamma < orb.order(); ++gamma)
                    sum += rm.entry(gamma, a) * rm.entry(gamma, b).negate_variables();
                TruncSeries want(1, order, orb.rank(), N);
                if (a == b) want = TruncSeries::one(1, order, orb.rank(), N);
                if (!(sum == want)) {
                    r.pass = false;
                    std::ostringstream os;
                    os << "symplectic identity fails for " << orb_label(orb) << " at ("
                       << a << "," << b << ")";
                    r.detail = os.str();
                    return finish(r, sw);
                }
            }
        }
    }
    return finish(r, sw);
}

CheckResult check_edge_divisibility(const std::vector<OrbifoldData>& orbs,
                                    unsigned order) {
    Stopwatch sw;
    CheckResult r{.name = "edge-divisibility"};
    for (const auto& orb : orbs) {
        RMatrix rm(orb, order);
        unsigned N = static_cast<unsigned>(orb.exponent());
        for (size_t a = 0; a < orb.order(); ++a) {
            for (size_t b = 0; b < orb.order(); ++b) {
                TruncSeries numerator(2, order, orb.rank(), N);
                if (a == b)
                    numerator.set_coeff(
                        0, 0, PuiseuxPoly::constant(orb.rank(), N, Rational(1)));
                for (size_t gamma = 0; gamma < orb.order(); ++gamma)
                    numerator -= outer_product(rm.entry_neg(gamma, a),
                                               rm.entry_neg(gamma, b), order);
                try {
                    divide_by_z_plus_zeta(numerator);
                } catch (const std::domain_error& e) {
                    r.pass = false;
                    std::ostringstream os;
                    os << "edge numerator not divisible for " << orb_label(orb)
                       << " at (" << a << "," << b << "): " << e.what();
                    r.detail = os.str();
                    return finish(r, sw);
                }
            }
        }
    }
    return finish(r, sw);
}

CheckResult check_dilaton_identity(const std::vector<OrbifoldData>& orbs) {
    Stopwatch sw;
    CheckResult r{.name = "dilaton-leaf-identity"};
    for (const auto& orb : orbs) {
        WeightEvaluator eval(orb, 4);
        RMatrix rm(orb, 4);
        for (unsigned k = 2; k <= 4; ++k) {
            PuiseuxPoly first = eval.leaf_dilaton(0, k, Normalization::twisted);
            for (size_t alpha = 1; alpha < orb.order(); ++alpha) {
                if (!(eval.leaf_dilaton(alpha, k, Normalization::twisted) == first)) {
                    r.pass = false;
                    r.detail = "dilaton weight depends on marking for " + orb_label(orb);
                    return finish(r, sw);
                }
            }
            // column-sum identity: equals -[z^{k-1}] of the identity-sector
            // diagonal entry at -z
            PuiseuxPoly diag = rm.diagonal(0).coeff(k - 1);
            if ((k - 1) % 2 == 1) diag = -diag;
            if (!(first == -diag)) {
                r.pass = false;
                r.detail = "dilaton column-sum identity fails for " + orb_label(orb);
                return finish(r, sw);
            }
        }
    }
    return finish(r, sw);
}

CheckResult check_oracle_equality(const std::vector<OrbifoldData>& orbs,
                                  const std::vector<std::pair<unsigned, unsigned>>& cells) {
    Stopwatch sw;
    CheckResult r{.name = "oracle-equality"};
    for (const auto& orb : orbs) {
        for (auto [g, n] : cells) {
            unsigned a_sum_max = static_cast<unsigned>(
                std::max(0l, 3l * g - 3 + static_cast<long>(n)));
            auto graph_table = twisted_correlator_table(orb, g, n, a_sum_max);
            auto oracle_table = oracle_correlator_table(orb, g, n, a_sum_max);
            // compare on the union of supports
            auto mismatch = [&](const std::vector<std::pair<unsigned, unsigned>>& key)
                -> bool {
                auto it = graph_table.find(key);
                auto jt = oracle_table.find(key);
                PuiseuxPoly a = it == graph_table.end()
                                    ? PuiseuxPoly(orb.rank(),
                                                  static_cast<unsigned>(orb.exponent()))
                                    : it->second;
                PuiseuxPoly b = jt == oracle_table.end()
                                    ? PuiseuxPoly(orb.rank(),
                                                  static_cast<unsigned>(orb.exponent()))
                                    : jt->second;
                return !(a == b);
            };
            for (const auto& [key, value] : graph_table) {
                if (mismatch(key)) {
                    r.pass = false;
                    std::ostringstream os;
                    os << "graph sum vs oracle mismatch for " << orb_label(orb) << " at (g,n)=("
                       << g << "," << n << ")";
                    r.detail = os.str();
                    return finish(r, sw);
                }
            }
            for (const auto& [key, value] : oracle_table) {
                if (mismatch(key)) {
                    r.pass = false;
                    std::ostringstream os;
                    os << "oracle has extra support vs graph sum for " << orb_label(orb)
                       << " at (g,n)=(" << g << "," << n << ")";
                    r.detail = os.str();
                    return finish(r, sw);
                }
            }
        }
    }
    return finish(r, sw);
}

CheckResult check_hodge_constants() {
    Stopwatch sw;
    CheckResult r{.name = "hodge-constants"};
    OrbifoldData orb = OrbifoldData::build({}, {{}});
    unsigned N = 1;

    CorrelatorRequest req;
    req.genus = 1;
    req.norm = Normalization::equivariant;
    req.ordered.push_back(DescendantSeries::monomial(0, 0, CycRational::one(N)));
    PuiseuxPoly got = correlator(orb, req).value;
    PuiseuxPoly want = PuiseuxPoly::monomial(
        PuiseuxMonomial({Rational(-1)}),
        CycRational::from_rational(N, Rational(-1, 24)));
    if (!(got == want)) {
        r.pass = false;
        r.detail = "<tau_0(1bar)>^X_{1,1} != -1/(24w): got " + got.str();
        return finish(r, sw);
    }

    CorrelatorRequest req2;
    req2.genus = 1;
    req2.norm = Normalization::equivariant;
    req2.ordered.push_back(DescendantSeries::monomial(0, 1, CycRational::one(N)));
    PuiseuxPoly got2 = correlator(orb, req2).value;
    PuiseuxPoly want2 = PuiseuxPoly::constant(1, N, Rational(1, 24));
    if (!(got2 == want2)) {
        r.pass = false;
        r.detail = "<tau_1(1bar)>^X_{1,1} != 1/24: got " + got2.str();
    }
    return finish(r, sw);
}

CheckResult check_normalization_bridge(const std::vector<OrbifoldData>& orbs,
                                       unsigned budget) {
    Stopwatch sw;
    CheckResult r{.name = "normalization-bridge"};
    for (const auto& orb : orbs) {
        unsigned N = static_cast<unsigned>(orb.exponent());
        for (unsigned g = 0; 2 * g <= budget; ++g) {
            for (unsigned n = (g == 0 ? 3u : (g == 1 ? 1u : 0u)); 2 * g + n <= budget; ++n) {
                // generic-ish series: distinct coefficients per (gamma, a)
                CorrelatorRequest tw, eq;
                tw.genus = eq.genus = g;
                tw.norm = Normalization::twisted;
                eq.norm = Normalization::equivariant;
                for (unsigned j = 0; j < n; ++j) {
                    DescendantSeries s;
                    for (unsigned gamma = 0; gamma < orb.order(); ++gamma)
                        for (unsigned a = 0; a <= 2; ++a)
                            s.terms[{gamma, a}] = CycRational::from_rational(
                                N, rational(2 + static_cast<long>(j) + gamma, 1 + a));
                    tw.ordered.push_back(s);
                    eq.ordered.push_back(s);
                }
                unsigned order = 3 * g + n + 2;
                WeightEvaluator eval(orb, order);
                PuiseuxMonomial bridge =
                    orb.e1().pow(Rational(static_cast<long>(g) - 1));
                for (const LabeledGraph& graph :
                     enumerate_graphs(orb.order(), g, n, 0)) {
                    PuiseuxPoly wt = eval.graph_weight(graph, tw);
                    PuiseuxPoly we = eval.graph_weight(graph, eq);
                    wt.shift(bridge);
                    if (!(wt == we)) {
                        r.pass = false;
                        std::ostringstream os;
                        os << "bridge fails for " << orb_label(orb) << " graph "
                           << graph.encoding();
                        r.detail = os.str();
                        return finish(r, sw);
                    }
                }
            }
        }
    }
    return finish(r, sw);
}

CheckResult check_rationality() {
    Stopwatch sw;
    CheckResult r{.name = "unit-basis-rationality"};
    std::vector<OrbifoldData> orbs;
    orbs.push_back(OrbifoldData::build({3}, {{1}, {1}, {1}}));  // [C^3/Z_3] diagonal
    orbs.push_back(OrbifoldData::build({4}, {{1}, {3}}));
    std::vector<std::pair<unsigned, unsigned>> cells = {{0, 3}, {1, 1}, {0, 4}};
    for (const auto& orb : orbs) {
        unsigned N = static_cast<unsigned>(orb.exponent());
        for (auto [g, n] : cells) {
            // all h-multisets in the unit-bar basis, tau_0 insertions
            // (correlators are symmetric, so nondecreasing tuples suffice)
            std::vector<size_t> pick(n, 0);
            while (true) {
                if (!std::is_sorted(pick.begin(), pick.end())) {
                    unsigned j0 = 0;
                    while (j0 < n && ++pick[j0] == orb.order()) pick[j0++] = 0;
                    if (j0 == n) break;
                    continue;
                }
                CorrelatorRequest req;
                req.genus = g;
                req.norm = Normalization::equivariant;
                for (unsigned j = 0; j < n; ++j) {
                    DescendantSeries s;
                    for (unsigned gamma = 0; gamma < orb.order(); ++gamma)
                        s.terms[{gamma, 0}] =
                            orb.chi_index(gamma, pick[j]);
                    req.ordered.push_back(std::move(s));
                }
                PuiseuxPoly value = correlator(orb, req).value;
                if (!value.has_rational_coefficients()) {
                    r.pass = false;
                    std::ostringstream os;
                    os << "nonrational correlator for " << orb_label(orb) << " at (g,n)=("
                       << g << "," << n << ")";
                    r.detail = os.str();
                    return finish(r, sw);
                }
                unsigned j = 0;
                while (j < n && ++pick[j] == orb.order()) pick[j++] = 0;
                if (j == n) break;
            }
        }
    }
    return finish(r, sw);
}

CheckResult check_ordered_consistency() {
    Stopwatch sw;
    CheckResult r{.name = "ordered-vs-unordered"};
    std::vector<OrbifoldData> orbs;
    orbs.push_back(OrbifoldData::build({}, {{}}));
    orbs.push_back(OrbifoldData::build({2}, {{1}, {0}}));
    std::vector<std::pair<unsigned, unsigned>> cells = {{0, 3}, {1, 1}, {1, 2}, {0, 4}};
    for (const auto& orb : orbs) {
        unsigned N = static_cast<unsigned>(orb.exponent());
        for (auto [g, n] : cells) {
            DescendantSeries u;
            for (unsigned gamma = 0; gamma < orb.order(); ++gamma)
                for (unsigned a = 0; a <= 2; ++a)
                    u.terms[{gamma, a}] =
                        CycRational::from_rational(N, rational(1 + gamma, 1 + a));
            CorrelatorRequest ordered;
            ordered.genus = g;
            ordered.norm = Normalization::equivariant;
            ordered.ordered.assign(n, u);
            CorrelatorRequest unordered;
            unordered.genus = g;
            unordered.norm = Normalization::equivariant;
            unordered.unordered_series = u;
            unordered.n_unordered = n;
            PuiseuxPoly lhs = correlator(orb, ordered).value;
            lhs /= Rational(factorial(n));
            PuiseuxPoly rhs = correlator(orb, unordered).value;
            if (!(lhs == rhs)) {
                r.pass = false;
                std::ostringstream os;
                os << "ordered/unordered mismatch for " << orb_label(orb) << " at (g,n)=("
                   << g << "," << n << ")";
                r.detail = os.str();
                return finish(r, sw);
            }
        }
    }
    return finish(r, sw);
}

std::vector<CheckResult> run_selfcheck(CheckLevel level) {
    std::vector<CheckResult> out;
    auto eval = [](unsigned m, const Rational& x) { return bernoulli_eval(m, x); };
    if (level == CheckLevel::quick) {
        std::vector<OrbifoldData> small;
        small.push_back(OrbifoldData::build({}, {{}}));
        small.push_back(OrbifoldData::build({2}, {{1}}));
        small.push_back(OrbifoldData::build({3}, {{1}, {2}}));
        small.push_back(OrbifoldData::build({2, 2}, {{1, 0}, {0, 1}}));
        out.push_back(check_psi_table(6));
        out.push_back(check_orthogonality(8));
        out.push_back(check_bernoulli_identities(8, 8, eval));
        out.push_back(check_ring_axioms(40, 7001));
        out.push_back(check_series_identities(10, 7002));
        out.push_back(check_r_symplectic(small, 4));
        out.push_back(check_edge_divisibility(small, 4));
        out.push_back(check_dilaton_identity(small));
        std::vector<OrbifoldData> tiny;
        tiny.push_back(OrbifoldData::build({}, {{}}));
        tiny.push_back(OrbifoldData::build({2}, {{1}, {1}}));
        out.push_back(check_oracle_equality(tiny, {{0, 3}, {1, 1}, {1, 2}}));
        out.push_back(check_hodge_constants());
        out.push_back(check_normalization_bridge(tiny, 4));
        out.push_back(check_rationality());
        out.push_back(check_ordered_consistency());
    } else {
        std::vector<OrbifoldData> full = standard_orbifold_set(3);
        out.push_back(check_psi_table(7));
        out.push_back(check_orthogonality(12));
        out.push_back(check_bernoulli_identities(8, 20, eval));
        out.push_back(check_ring_axioms(200, 7001));
        out.push_back(check_series_identities(40, 7002));
        out.push_back(check_r_symplectic(full, 6));
        out.push_back(check_edge_divisibility(full, 6));
        out.push_back(check_dilaton_identity(full));
        out.push_back(check_oracle_equality(
            full, {{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {2, 1}}));
        out.push_back(check_hodge_constants());
        out.push_back(check_normalization_bridge(full, 5));
        out.push_back(check_rationality());
        out.push_back(check_ordered_consistency());
    }
    return out;
}

}  // namespace orbgw
