#include "orbgw/serialize.hpp"

#include "orbgw/qrr.hpp"

#include <functional>
#include <stdexcept>

namespace orbgw {

const char* const kVersionString = "orbgw 0.1.0";

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument("config: " + message);
}

InsertionTerm parse_term(const json& doc) {
    require(doc.is_object(), "insertion term must be an object");
    require(doc.contains("basis") && doc["basis"].is_string(), "missing basis tag");
    InsertionTerm term;
    term.basis = doc["basis"].get<std::string>();
    require(term.basis == "unit_h" || term.basis == "unit_bar_h" || term.basis == "phi" ||
                term.basis == "phi_bar",
            "unknown basis tag '" + term.basis + "'");
    require(doc.contains("a") && doc["a"].is_number_unsigned(),
            "descendant index 'a' must be a nonnegative integer");
    term.a = doc["a"].get<unsigned>();
    require(doc.contains("index") && doc["index"].is_array(), "missing residue index");
    for (const auto& x : doc["index"]) {
        require(x.is_number_integer(), "residues must be integers");
        term.index.push_back(x.get<long>());
    }
    if (doc.contains("coeff")) {
        require(doc["coeff"].is_string(), "coeff must be an exact string \"p/q\"");
        term.coeff = rational_from_string(doc["coeff"].get<std::string>());
    }
    return term;
}

std::vector<InsertionTerm> parse_series(const json& doc) {
    std::vector<InsertionTerm> terms;
    if (doc.is_object() && doc.contains("terms")) {
        require(doc["terms"].is_array(), "'terms' must be an array");
        for (const auto& t : doc["terms"]) terms.push_back(parse_term(t));
    } else {
        terms.push_back(parse_term(doc));
    }
    return terms;
}

ordered_json serialize_term(const InsertionTerm& term) {
    ordered_json t;
    t["a"] = term.a;
    t["basis"] = term.basis;
    t["index"] = term.index;
    t["coeff"] = to_string(term.coeff);
    return t;
}

bool is_bar_basis(const std::string& basis) {
    return basis == "unit_bar_h" || basis == "phi_bar";
}

}  // namespace

JobConfig parse_config(const json& doc) {
    require(doc.is_object(), "document must be an object");
    JobConfig config;
    require(doc.contains("group") && doc["group"].is_array(), "missing 'group'");
    for (const auto& x : doc["group"]) {
        require(x.is_number_integer() && x.get<long>() >= 1,
                "group orders must be positive integers");
        config.group_orders.push_back(x.get<long>());
    }
    require(doc.contains("action") && doc["action"].is_array() && !doc["action"].empty(),
            "missing 'action' (r exponent vectors)");
    for (const auto& row : doc["action"]) {
        require(row.is_array(), "action rows must be arrays");
        std::vector<long> v;
        for (const auto& x : row) {
            require(x.is_number_integer(), "action exponents must be integers");
            v.push_back(x.get<long>());
        }
        require(v.size() == config.group_orders.size(),
                "action rows must match the number of group factors");
        config.action.push_back(std::move(v));
    }
    require(doc.contains("genus") && doc["genus"].is_number_unsigned(),
            "missing nonnegative 'genus'");
    config.genus = doc["genus"].get<unsigned>();

    if (doc.contains("ordered_insertions")) {
        require(doc["ordered_insertions"].is_array(), "'ordered_insertions' must be an array");
        for (const auto& s : doc["ordered_insertions"])
            config.ordered.push_back(parse_series(s));
    }
    if (doc.contains("unordered_series")) {
        const auto& u = doc["unordered_series"];
        require(u.is_object() && u.contains("count"), "'unordered_series' needs a count");
        require(u["count"].is_number_unsigned(), "'count' must be nonnegative");
        config.n_unordered = u["count"].get<unsigned>();
        if (u.contains("terms"))
            for (const auto& t : u["terms"]) config.unordered.push_back(parse_term(t));
        require(config.n_unordered == 0 || !config.unordered.empty(),
                "nonzero unordered count requires series terms");
    }

    bool any_bar = false, any_plain = false;
    auto scan = [&](const std::vector<InsertionTerm>& terms) {
        for (const auto& t : terms) (is_bar_basis(t.basis) ? any_bar : any_plain) = true;
    };
    for (const auto& s : config.ordered) scan(s);
    scan(config.unordered);
    require(!(any_bar && any_plain),
            "cannot mix barred and unbarred basis tags in one request");

    if (doc.contains("normalization")) {
        std::string norm = doc["normalization"].get<std::string>();
        require(norm == "twisted" || norm == "equivariant",
                "normalization must be 'twisted' or 'equivariant'");
        config.norm = norm == "twisted" ? Normalization::twisted
                                        : Normalization::equivariant;
    } else {
        config.norm = any_bar ? Normalization::equivariant : Normalization::twisted;
    }
    require(!(any_bar && config.norm == Normalization::twisted),
            "barred classes require the equivariant normalization");
    require(!(any_plain && config.norm == Normalization::equivariant),
            "unbarred classes require the twisted normalization");

    if (doc.contains("truncation_order")) {
        if (!doc["truncation_order"].is_null()) {
            require(doc["truncation_order"].is_number_unsigned(),
                    "truncation_order must be a nonnegative integer or null");
            config.truncation_override = doc["truncation_order"].get<unsigned>();
        }
    }
    if (doc.contains("verify_oracle")) config.verify_oracle = doc["verify_oracle"].get<bool>();
    if (doc.contains("emit_graphs")) config.emit_graphs = doc["emit_graphs"].get<bool>();
    return config;
}

ordered_json serialize_config(const JobConfig& config) {
    ordered_json doc;
    doc["group"] = config.group_orders;
    doc["action"] = config.action;
    doc["genus"] = config.genus;
    doc["normalization"] =
        config.norm == Normalization::twisted ? "twisted" : "equivariant";
    ordered_json ordered = ordered_json::array();
    for (const auto& series : config.ordered) {
        ordered_json s;
        s["terms"] = ordered_json::array();
        for (const auto& t : series) s["terms"].push_back(serialize_term(t));
        ordered.push_back(s);
    }
    doc["ordered_insertions"] = std::move(ordered);
    ordered_json u;
    u["count"] = config.n_unordered;
    u["terms"] = ordered_json::array();
    for (const auto& t : config.unordered) u["terms"].push_back(serialize_term(t));
    doc["unordered_series"] = std::move(u);
    if (config.truncation_override)
        doc["truncation_order"] = config.truncation_override;
    else
        doc["truncation_order"] = nullptr;
    doc["verify_oracle"] = config.verify_oracle;
    doc["emit_graphs"] = config.emit_graphs;
    return doc;
}

ordered_json serialize_poly(const PuiseuxPoly& p) {
    ordered_json out = ordered_json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        ordered_json rec;
        rec["exponents"] = ordered_json::array();
        for (const auto& e : mono.exponents()) rec["exponents"].push_back(to_string(e));
        rec["coeff"] = ordered_json::array();
        for (const auto& c : coeff.coords()) rec["coeff"].push_back(to_string(c));
        out.push_back(std::move(rec));
    }
    return out;
}

PuiseuxPoly parse_poly(const json& doc, unsigned r, unsigned conductor) {
    require(doc.is_array(), "polynomial must be an array of records");
    PuiseuxPoly p(r, conductor);
    unsigned degree = CycField::get(conductor).degree();
    for (const auto& rec : doc) {
        require(rec.contains("exponents") && rec["exponents"].is_array() &&
                    rec["exponents"].size() == r,
                "record needs r exponent strings");
        require(rec.contains("coeff") && rec["coeff"].is_array() &&
                    rec["coeff"].size() == degree,
                "record needs phi(N) coefficient strings");
        std::vector<Rational> exps;
        for (const auto& s : rec["exponents"])
            exps.push_back(rational_from_string(s.get<std::string>()));
        std::vector<Rational> coords;
        for (const auto& s : rec["coeff"])
            coords.push_back(rational_from_string(s.get<std::string>()));
        p.add_term(PuiseuxMonomial(std::move(exps)),
                   CycRational::from_coords(conductor, std::move(coords)));
    }
    return p;
}

DescendantSeries resolve_series(const OrbifoldData& orb,
                                const std::vector<InsertionTerm>& terms,
                                Normalization norm) {
    unsigned N = static_cast<unsigned>(orb.exponent());
    DescendantSeries series;
    for (const InsertionTerm& term : terms) {
        bool bar = is_bar_basis(term.basis);
        if (bar && norm != Normalization::equivariant)
            throw std::invalid_argument("config: barred class under twisted normalization");
        if (!bar && norm != Normalization::twisted)
            throw std::invalid_argument("config: unbarred class under equivariant normalization");
        if (term.index.size() != orb.num_factors())
            throw std::invalid_argument("config: residue index has wrong length");
        CycRational c = CycRational::from_rational(N, term.coeff);
        if (term.basis == "phi" || term.basis == "phi_bar") {
            size_t gamma = orb.character_index(Character{term.index});
            auto key = std::make_pair(static_cast<unsigned>(gamma), term.a);
            auto [it, inserted] = series.terms.try_emplace(key, c);
            if (!inserted) it->second += c;
        } else {
            size_t h = orb.element_index(Element{term.index});
            for (size_t gamma = 0; gamma < orb.order(); ++gamma) {
                CycRational v = orb.chi_index(gamma, h) * c;
                if (v.is_zero()) continue;
                auto key = std::make_pair(static_cast<unsigned>(gamma), term.a);
                auto [it, inserted] = series.terms.try_emplace(key, v);
                if (!inserted) it->second += v;
            }
        }
    }
    std::erase_if(series.terms, [](const auto& kv) { return kv.second.is_zero(); });
    return series;
}

CorrelatorRequest build_request(const OrbifoldData& orb, const JobConfig& config) {
    CorrelatorRequest req;
    req.genus = config.genus;
    req.norm = config.norm;
    req.order_override = config.truncation_override;
    req.n_unordered = config.n_unordered;
    for (const auto& series : config.ordered)
        req.ordered.push_back(resolve_series(orb, series, config.norm));
    req.unordered_series = resolve_series(orb, config.unordered, config.norm);
    return req;
}

PuiseuxPoly oracle_value(const OrbifoldData& orb, const CorrelatorRequest& req,
                         PsiCache& psi) {
    unsigned n = static_cast<unsigned>(req.ordered.size());
    unsigned n_total = n + req.n_unordered;
    unsigned N = static_cast<unsigned>(orb.exponent());

    PotentialBounds bounds = PotentialBounds::for_cell(req.genus, n_total);
    unsigned budget = static_cast<unsigned>(-bounds.delta_min);
    Potential log_bg = bg_log_potential(orb, bounds, req.genus, bounds.n_max, psi);
    Potential twisted = log_bg;
    if (budget > 0) {
        QuantizedOperator op(orb, budget);
        twisted = qrr_apply(op, log_bg, budget + 2);
    }

    PuiseuxPoly total(orb.rank(), N);

    // expand ordered series multilinearly, unordered series multinomially:
    // (1/n'!) <..., u,...,u> = sum over multisets M' of size n' of
    // prod_t c_t^{m_t} / prod_t m_t! times the monomial correlator
    std::vector<std::pair<unsigned, unsigned>> picks;
    using SeriesIt = std::map<std::pair<unsigned, unsigned>, CycRational>::const_iterator;
    long dim_budget = 3l * req.genus - 3 + static_cast<long>(n_total);

    std::function<void(SeriesIt, unsigned, CycRational, Rational)> expand_unordered =
        [&](SeriesIt it, unsigned left, CycRational scale, Rational aut_den) {
            if (it == req.unordered_series.terms.end()) {
                if (left != 0) return;
                long have = 0;
                for (auto [gamma, a] : picks) have += a;
                if (have > dim_budget) return;  // vanishes beyond the grading budget
                PuiseuxPoly v = qrr_extract(twisted, req.genus, picks);
                if (v.is_zero()) return;
                v *= scale;
                v /= aut_den;
                total += v;
                return;
            }
            SeriesIt next = std::next(it);
            expand_unordered(next, left, scale, aut_den);
            CycRational s = scale;
            Rational d = aut_den;
            unsigned taken = 0;
            for (unsigned m = 1; m <= left; ++m) {
                s *= it->second;
                d *= Rational(m);
                picks.push_back(it->first);
                ++taken;
                expand_unordered(next, left - m, s, d);
            }
            for (unsigned t = 0; t < taken; ++t) picks.pop_back();
        };

    std::function<void(size_t, CycRational)> expand_ordered = [&](size_t j,
                                                                  CycRational scale) {
        if (j == req.ordered.size()) {
            expand_unordered(req.unordered_series.terms.begin(), req.n_unordered, scale,
                             Rational(1));
            return;
        }
        for (const auto& [key, coeff] : req.ordered[j].terms) {
            picks.push_back(key);
            expand_ordered(j + 1, scale * coeff);
            picks.pop_back();
        }
    };
    expand_ordered(0, CycRational::one(N));

    if (req.norm == Normalization::equivariant) {
        // <barred classes>^X = e1^{g-1} <plain classes>^tw
        total.shift(orb.e1().pow(Rational(static_cast<long>(req.genus) - 1)));
    }
    return total;
}

JobOutcome run_correlator_job(const JobConfig& config) {
    OrbifoldData orb = OrbifoldData::build(config.group_orders, config.action);
    CorrelatorRequest req = build_request(orb, config);
    CorrelatorResult res = correlator(orb, req, config.emit_graphs);

    JobOutcome outcome;
    ordered_json& doc = outcome.document;
    doc["version"] = kVersionString;
    doc["command"] = "correlator";
    doc["group"] = config.group_orders;
    doc["action"] = config.action;
    doc["genus"] = config.genus;
    doc["normalization"] =
        config.norm == Normalization::twisted ? "twisted" : "equivariant";
    doc["result"] = serialize_poly(res.value);
    doc["graph_count"] = res.graph_count;
    doc["aut_histogram"] = res.aut_histogram;

    if (config.verify_oracle) {
        PuiseuxPoly oracle = oracle_value(orb, req);
        ordered_json o;
        o["value"] = serialize_poly(oracle);
        bool equal = oracle == res.value;
        o["equal"] = equal;
        doc["oracle"] = std::move(o);
        outcome.ok = equal;
    }
    if (config.emit_graphs) {
        ordered_json graphs = ordered_json::array();
        for (const auto& [graph, weight] : res.graphs) {
            ordered_json g;
            g["graph"] = graph.encoding();
            g["aut"] = graph.aut_order().get_str();
            g["weight"] = serialize_poly(weight);
            graphs.push_back(std::move(g));
        }
        doc["graphs"] = std::move(graphs);
    }
    return outcome;
}

nlohmann::ordered_json run_graphs_job(const JobConfig& config) {
    OrbifoldData orb = OrbifoldData::build(config.group_orders, config.action);
    std::vector<LabeledGraph> graphs =
        enumerate_graphs(orb.order(), config.genus,
                         static_cast<unsigned>(config.ordered.size()), config.n_unordered);
    ordered_json doc;
    doc["version"] = kVersionString;
    doc["command"] = "graphs";
    doc["group"] = config.group_orders;
    doc["genus"] = config.genus;
    doc["ordered_leaves"] = config.ordered.size();
    doc["unordered_leaves"] = config.n_unordered;
    doc["graph_count"] = graphs.size();
    ordered_json list = ordered_json::array();
    for (const auto& graph : graphs) {
        ordered_json g;
        g["graph"] = graph.encoding();
        g["aut"] = graph.aut_order().get_str();
        g["total_genus"] = graph.total_genus();
        list.push_back(std::move(g));
    }
    doc["graphs"] = std::move(list);
    return doc;
}

}  // namespace orbgw
