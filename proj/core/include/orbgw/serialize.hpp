// JSON schemas for job configs and result documents, plus the canonical
// serialization of Puiseux polynomials (records of exact "p/q" strings,
// sorted lexicographically by exponent vectors, so output is diffable).

#pragma once

#include "orbgw/graphsum.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace orbgw {

extern const char* const kVersionString;

struct InsertionTerm {
    unsigned a = 0;
    std::string basis;          // unit_h | unit_bar_h | phi | phi_bar
    std::vector<long> index;    // element or character residues
    Rational coeff = Rational(1);

    bool operator==(const InsertionTerm&) const = default;
};

struct JobConfig {
    std::vector<long> group_orders;
    std::vector<std::vector<long>> action;
    unsigned genus = 0;
    std::vector<std::vector<InsertionTerm>> ordered;  // one series per leaf
    std::vector<InsertionTerm> unordered;
    unsigned n_unordered = 0;
    Normalization norm = Normalization::twisted;
    unsigned truncation_override = 0;
    bool verify_oracle = false;
    bool emit_graphs = false;
};

JobConfig parse_config(const nlohmann::json& doc);
nlohmann::ordered_json serialize_config(const JobConfig& config);

// Canonical polynomial records: {exponents: r strings, coeff: phi(N) strings}.
nlohmann::ordered_json serialize_poly(const PuiseuxPoly& p);
PuiseuxPoly parse_poly(const nlohmann::json& doc, unsigned r, unsigned conductor);

// Resolves an insertion series against the group: unit-basis classes are
// expanded through the character transform into phi-coordinates. Bar-tagged
// classes belong to the equivariant normalization, plain ones to the twisted
// normalization; a mismatch is a config error.
DescendantSeries resolve_series(const OrbifoldData& orb,
                                const std::vector<InsertionTerm>& terms,
                                Normalization norm);

CorrelatorRequest build_request(const OrbifoldData& orb, const JobConfig& config);

struct JobOutcome {
    nlohmann::ordered_json document;
    bool ok = true;  // false on oracle mismatch
};

// Runs the graph sum (and optionally the quantized-operator comparison) and
// assembles the result document.
JobOutcome run_correlator_job(const JobConfig& config);

// Enumeration-only document for the `graphs` command.
nlohmann::ordered_json run_graphs_job(const JobConfig& config);

// Oracle value of the same request (twisted extraction, bridged through
// e1^{g-1} for equivariant requests).
PuiseuxPoly oracle_value(const OrbifoldData& orb, const CorrelatorRequest& req,
                         PsiCache& psi = psi_cache());

}  // namespace orbgw
