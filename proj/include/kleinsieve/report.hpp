#pragma once

// Rendering of results as aligned text tables, CSV, or JSON documents that
// follow docs/report.schema.json.

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "core/error.hpp"
#include "eliminate.hpp"
#include "hyperbolic.hpp"
#include "proper.hpp"
#include "sieve.hpp"

namespace kleinsieve::report {

using nlohmann::json;

inline constexpr const char* kSchemaId = "kleinsieve-report";
inline constexpr int kSchemaVersion = 1;

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

inline void write_table(std::ostream& os, const Table& t) {
    std::vector<std::size_t> width(t.headers.size());
    for (std::size_t c = 0; c < t.headers.size(); ++c) width[c] = t.headers[c].size();
    for (const auto& r : t.rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            s += cells[c];
            if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
        }
        os << s << '\n';
    };
    line(t.headers);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& r : t.rows) line(r);
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline void write_csv(std::ostream& os, const Table& t) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << csv_field(cells[c]);
        os << '\n';
    };
    line(t.headers);
    for (const auto& r : t.rows) line(r);
}

inline json envelope(const std::string& command) {
    return json{{"schema", kSchemaId}, {"version", kSchemaVersion}, {"command", command}};
}

// ---- catalog ---------------------------------------------------------------

inline json to_json(const RealFormRecord& r) {
    return json{{"name", r.name},
                {"type", r.complex_type.name()},
                {"dim_g", r.dims.dim_g},
                {"dim_k", r.dims.dim_k},
                {"dim_p", r.dims.dim_p},
                {"dim_a", r.dims.dim_a},
                {"dim_n", r.dims.dim_n},
                {"real_rank", r.real_rank},
                {"a_hyp_rank", r.a_hyp_rank},
                {"restricted_type", r.restricted->type_name()},
                {"compact", r.is_compact()},
                {"satake", r.satake.render()}};
}

inline Table catalog_table(const std::vector<RealFormCatalog::Ptr>& rows) {
    Table t{{"name", "type", "dim_g", "dim_k", "dim_p", "real_rank", "a_hyp_rank", "restricted", "compact", "satake"}, {}};
    for (const auto& r : rows)
        t.rows.push_back({r->name, r->complex_type.name(), std::to_string(r->dims.dim_g), std::to_string(r->dims.dim_k),
                          std::to_string(r->dims.dim_p), std::to_string(r->real_rank), std::to_string(r->a_hyp_rank),
                          r->restricted->type_name(), r->is_compact() ? "yes" : "no", r->satake.render()});
    return t;
}

inline json catalog_json(const std::vector<RealFormCatalog::Ptr>& rows) {
    json doc = envelope("catalog");
    doc["rows"] = json::array();
    for (const auto& r : rows) doc["rows"].push_back(to_json(*r));
    return doc;
}

// ---- sieve -----------------------------------------------------------------

inline json factor_names(const CompositeRealForm& c) {
    json a = json::array();
    for (const auto& f : c.factors) a.push_back(f->name);
    return a;
}

inline json to_json(const TripleCandidate& t) {
    const auto& c = t.checks;
    return json{{"g", t.g->name},
                {"h", t.h.name()},
                {"l", t.l.name()},
                {"h_factors", factor_names(t.h)},
                {"l_factors", factor_names(t.l)},
                {"real_rank", {{"g", c.rank_g}, {"h", c.rank_h}, {"l", c.rank_l}}},
                {"dim_p", {{"g", c.dim_p_g}, {"h", c.dim_p_h}, {"l", c.dim_p_l}}},
                {"checks", {{"rank_sum", c.rank_sum()}, {"dim_p_sum", c.dim_p_sum()}, {"dim_p_order", c.dim_p_order()}}}};
}

inline Table sieve_table(const std::vector<TripleCandidate>& rows) {
    Table t{{"#", "g", "h", "l", "rank g=h+l", "dim p g=h+l", "checks"}, {}};
    int i = 0;
    for (const auto& r : rows) {
        const auto& c = r.checks;
        t.rows.push_back({std::to_string(++i), r.g->name, r.h.name(), r.l.name(),
                          std::to_string(c.rank_g) + "=" + std::to_string(c.rank_h) + "+" + std::to_string(c.rank_l),
                          std::to_string(c.dim_p_g) + "=" + std::to_string(c.dim_p_h) + "+" + std::to_string(c.dim_p_l),
                          r.valid() ? "ok" : "FAILED"});
    }
    return t;
}

inline json sieve_json(const std::vector<TripleCandidate>& rows) {
    json doc = envelope("sieve");
    doc["rows"] = json::array();
    for (const auto& r : rows) doc["rows"].push_back(to_json(r));
    return doc;
}

/// Reads the triples back from a sieve JSON document; names are resolved
/// against `catalog` and the checks are recomputed.
inline std::vector<TripleCandidate> triples_from_json(const json& doc, const RealFormCatalog& catalog) {
    if (!doc.is_object() || doc.value("schema", "") != kSchemaId || doc.value("command", "") != "sieve")
        throw DataError("expected a sieve report");
    if (doc.value("version", 0) != kSchemaVersion) throw DataError("unsupported report version");
    if (!doc.contains("rows") || !doc["rows"].is_array()) throw DataError("sieve report: 'rows' must be an array");
    std::vector<TripleCandidate> out;
    for (const auto& row : doc.at("rows")) {
        auto composite = [&](const char* key) {
            CompositeRealForm c;
            for (const auto& n : json_util::get<std::vector<std::string>>(row, key, "sieve report"))
                c.factors.push_back(catalog.ptr(n));
            if (c.factors.empty()) throw DataError("sieve report: empty factor list");
            std::sort(c.factors.begin(), c.factors.end(), [](const auto& a, const auto& b) { return a->name < b->name; });
            return c;
        };
        TripleCandidate t{catalog.ptr(json_util::get<std::string>(row, "g", "sieve report")), composite("h_factors"),
                          composite("l_factors"), {}};
        t.checks = evaluate_checks(*t.g, t.h, t.l);
        out.push_back(std::move(t));
    }
    return out;
}

// ---- eliminate -------------------------------------------------------------

inline std::string witness_word(const WeylElement& w) {
    if (w.word().empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < w.word().size(); ++i) s += (i ? " " : "") + std::string("s") + std::to_string(w.word()[i] + 1);
    return s;
}

inline json evidence_json(const Evidence& e) {
    return std::visit(
        [](const auto& x) -> json {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, AhypEvidence>) {
                return {{"kind", "ahyp"}, {"g", x.g}, {"h", x.h}, {"l", x.l}};
            } else if constexpr (std::is_same_v<X, WitnessEvidence>) {
                json w = json::array();
                for (const auto& q : x.witness.weights()) w.push_back(to_string(q));
                return {{"kind", "witness"},
                        {"form", x.form},
                        {"type", x.witness.base().name()},
                        {"weights", w},
                        {"linear_classes", x.linear_classes}};
            } else {
                return {{"kind", "fact"}, {"key", x.key}, {"statement", x.statement}, {"citation", x.citation}};
            }
        },
        e);
}

inline std::string evidence_text(const Evidence& e) {
    return std::visit(
        [](const auto& x) -> std::string {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, AhypEvidence>) {
                return std::to_string(x.h) + " + " + std::to_string(x.l) + " > " + std::to_string(x.g);
            } else if constexpr (std::is_same_v<X, WitnessEvidence>) {
                return "witness " + x.witness.render() + " on " + x.form;
            } else {
                return "fact " + x.key;
            }
        },
        e);
}

inline json to_json(const EliminationOutcome& o) {
    json j = to_json(o.triple);
    j.erase("checks");
    j["eliminated"] = o.eliminated();
    if (o.eliminated()) {
        const auto& v = o.verdict();
        j["rule"] = v.rule;
        j["citation"] = rule_by_id(v.rule).citation;
        j["evidence"] = evidence_json(v.evidence);
    } else {
        j["rule"] = nullptr;
        j["citation"] = nullptr;
        j["evidence"] = nullptr;
    }
    j["applicable"] = json::array();
    for (const auto& r : o.applicable) j["applicable"].push_back({{"rule", r.rule}, {"evidence", evidence_json(r.evidence)}});
    return j;
}

inline Table eliminate_table(const EliminationResult& res) {
    Table t{{"#", "g", "h", "l", "rule", "evidence", "also"}, {}};
    int i = 0;
    for (const auto& o : res.outcomes) {
        std::string also;
        for (std::size_t k = 1; k < o.applicable.size(); ++k) also += (k > 1 ? " " : "") + o.applicable[k].rule;
        t.rows.push_back({std::to_string(++i), o.triple.g->name, o.triple.h.name(), o.triple.l.name(),
                          o.eliminated() ? o.verdict().rule : "SURVIVES",
                          o.eliminated() ? evidence_text(o.verdict().evidence) : "", also});
    }
    return t;
}

inline json eliminate_json(const EliminationResult& res, const std::vector<std::string>& facts_used) {
    json doc = envelope("eliminate");
    doc["rules"] = json::array();
    for (const auto& r : elimination_rules())
        doc["rules"].push_back({{"id", r.id}, {"description", r.description}, {"citation", r.citation}});
    doc["facts"] = facts_used;
    doc["rows"] = json::array();
    for (const auto& o : res.outcomes) doc["rows"].push_back(to_json(o));
    doc["survivors"] = res.survivors();
    return doc;
}

// ---- hyperbolic ------------------------------------------------------------

struct HyperbolicRow {
    RealFormCatalog::Ptr form;
    WeightPattern matching;
    WeightPattern invariant;
    std::optional<WeightedDynkinDiagram> witness;
};

inline HyperbolicRow hyperbolic_row(const RealFormCatalog::Ptr& r) {
    const auto auts = diagram_automorphisms(r->complex_type);
    return {r, matching_diagram_space(r->satake), invariant_pattern(r->satake, auts),
            r->is_compact() ? std::nullopt : invariant_matching_diagram(r->satake, auts)};
}

inline Table hyperbolic_table(const std::vector<HyperbolicRow>& rows) {
    Table t{{"name", "satake", "matching", "invariant", "witness"}, {}};
    for (const auto& r : rows)
        t.rows.push_back({r.form->name, r.form->satake.render(), r.matching.render(), r.invariant.render(),
                          r.witness ? r.witness->render() : "--"});
    return t;
}

inline json hyperbolic_json(const std::vector<HyperbolicRow>& rows) {
    json doc = envelope("hyperbolic");
    doc["rows"] = json::array();
    for (const auto& r : rows) {
        json w = nullptr;
        if (r.witness) {
            w = json::array();
            for (const auto& q : r.witness->weights()) w.push_back(to_string(q));
        }
        doc["rows"].push_back({{"name", r.form->name},
                               {"type", r.form->complex_type.name()},
                               {"satake", r.form->satake.render()},
                               {"matching", r.matching.render()},
                               {"invariant", r.invariant.render()},
                               {"witness", w}});
    }
    return doc;
}

// ---- proper ----------------------------------------------------------------

inline Table proper_table(const PropernessQuery& q, const PropernessResult& r) {
    return {{"ambient", "dim_a", "dim_a_h", "dim_a_l", "verdict", "witness"},
            {{q.ambient, std::to_string(q.restricted->rank()), std::to_string(q.a_h.size()), std::to_string(q.a_l.size()),
              r.proper ? "proper" : "not proper", r.witness ? witness_word(*r.witness) : "--"}}};
}

inline json proper_json(const PropernessQuery& q, const PropernessResult& r) {
    json doc = envelope("proper");
    json w = nullptr;
    if (r.witness) {
        w = json::array(); // 1-based generator indices; empty for the identity
        for (int i : r.witness->word()) w.push_back(i + 1);
    }
    doc["rows"] = json::array({json{{"ambient", q.ambient},
                                    {"dim_a", q.restricted->rank()},
                                    {"dim_a_h", q.a_h.size()},
                                    {"dim_a_l", q.a_l.size()},
                                    {"proper", r.proper},
                                    {"witness", w}}});
    return doc;
}

// ---- subalgebras -----------------------------------------------------------

inline Table subalgebra_table(const std::vector<SubalgebraRecord>& rows) {
    Table t{{"ambient", "sub", "dim", "origin", "linear_classes"}, {}};
    for (const auto& r : rows)
        t.rows.push_back({r.ambient.name(), r.sub.name(), std::to_string(r.sub.dimension()), r.origin(),
                          r.linear_class_count ? std::to_string(*r.linear_class_count) : "?"});
    return t;
}

inline json subalgebra_json(const std::vector<SubalgebraRecord>& rows) {
    json doc = envelope("subalgebras");
    doc["rows"] = json::array();
    for (const auto& r : rows)
        doc["rows"].push_back({{"ambient", r.ambient.name()},
                               {"sub", r.sub.name()},
                               {"dim", r.sub.dimension()},
                               {"origin", r.origin()},
                               {"linear_classes", r.linear_class_count ? json(*r.linear_class_count) : json(nullptr)}});
    return doc;
}

} // namespace kleinsieve::report
