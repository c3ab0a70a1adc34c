#pragma once

// Elimination rules for candidate triples.  Each rule either declines or
// returns a report carrying checkable evidence.  Rules run in a fixed order;
// the first applicable one is the verdict, and all applicable ones are listed.

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "catalog.hpp"
#include "core/error.hpp"
#include "core/json_util.hpp"
#include "hyperbolic.hpp"
#include "sieve.hpp"
#include "subalg.hpp"

namespace kleinsieve {

/// A published result used as an axiom: the symmetric pair (ambient, member + ...)
/// admits no standard compact Clifford-Klein form.
struct ExternalFact {
    std::string key;
    std::string statement;
    std::string citation;
    std::string ambient; ///< real form name of g
    std::string member;  ///< real form name that must occur as h or l
};

/// {"format": "kleinsieve-facts", "version": 1, "facts": [{"key": ..., "statement": ...,
///   "citation": ..., "ambient": "e7(7)", "member": "e6(2)"}]}
class FactSet {
public:
    FactSet() = default;

    static FactSet from_json(const nlohmann::json& doc, const std::string& source = "facts") {
        using namespace json_util;
        check_header(doc, "kleinsieve-facts", source);
        check_keys(doc, {"format", "version", "facts"}, {"note"}, source);
        FactSet set;
        for (const auto& row : doc.at("facts")) {
            const std::string where = source + ": fact";
            check_keys(row, {"key", "statement", "citation", "ambient", "member"}, {}, where);
            ExternalFact f{get<std::string>(row, "key", where), get<std::string>(row, "statement", where),
                           get<std::string>(row, "citation", where), get<std::string>(row, "ambient", where),
                           get<std::string>(row, "member", where)};
            if (f.key.empty()) throw DataError(where + ": empty key");
            if (set.find(f.key)) throw DataError(where + ": duplicate key '" + f.key + "'");
            set.facts_.push_back(std::move(f));
        }
        return set;
    }

    static FactSet load(const std::filesystem::path& file) { return from_json(json_util::read_file(file), file.string()); }

    /// Every fact must name real forms present in the catalog.
    void check_against(const RealFormCatalog& catalog) const {
        for (const auto& f : facts_)
            for (const auto& name : {f.ambient, f.member})
                if (!catalog.find(name)) throw DataError("fact '" + f.key + "' names unknown real form '" + name + "'");
    }

    const ExternalFact* find(const std::string& key) const {
        auto it = std::find_if(facts_.begin(), facts_.end(), [&](const auto& f) { return f.key == key; });
        return it == facts_.end() ? nullptr : &*it;
    }

    /// Copy without `key`; an unknown key is a usage error.
    FactSet without(const std::string& key) const {
        if (!find(key)) throw DataError("unknown fact key '" + key + "'");
        FactSet out;
        for (const auto& f : facts_)
            if (f.key != key) out.facts_.push_back(f);
        return out;
    }

    const std::vector<ExternalFact>& facts() const noexcept { return facts_; }

private:
    std::vector<ExternalFact> facts_;
};

struct EliminationRule {
    std::string id;
    std::string description;
    std::string citation;
};

namespace rule_id {
inline constexpr const char* ahyp = "ahyp-bound";
inline constexpr const char* isomorphic_pair = "isomorphic-pair";
inline constexpr const char* external_fact = "external-fact";
} // namespace rule_id

/// Rule records in evaluation order.
inline const std::vector<EliminationRule>& elimination_rules() {
    static const std::vector<EliminationRule> rules{
        {rule_id::ahyp, "a-hyperbolic ranks of h and l add up to more than that of g",
         "Benoist, Okuda: if L acts properly and cocompactly on G/H then "
         "rank_a-hyp(h) + rank_a-hyp(l) <= rank_a-hyp(g)"},
        {rule_id::isomorphic_pair,
         "h and l are isomorphic with a single linear-equivalence class of embeddings, and a nontrivial "
         "automorphism-invariant hyperbolic orbit meets both",
         "Kobayashi properness criterion: a nontrivial hyperbolic orbit meeting h and l prevents properness; "
         "Okuda: matching weighted Dynkin diagrams parametrize real hyperbolic orbits"},
        {rule_id::external_fact, "the symmetric pair containing l is known not to admit standard compact forms",
         "External classification fact; a hyperbolic orbit meeting a symmetric subalgebra meets p"},
    };
    return rules;
}

inline const EliminationRule& rule_by_id(const std::string& id) {
    for (const auto& r : elimination_rules())
        if (r.id == id) return r;
    throw PreconditionError("unknown rule '" + id + "'");
}

struct AhypEvidence {
    int g = 0, h = 0, l = 0;
};
struct WitnessEvidence {
    std::string form; ///< name of h (= l)
    WeightedDynkinDiagram witness;
    int linear_classes = 1;
};
struct FactEvidence {
    std::string key;
    std::string statement;
    std::string citation;
};
using Evidence = std::variant<AhypEvidence, WitnessEvidence, FactEvidence>;

struct EliminationReport {
    TripleCandidate triple;
    std::string rule;
    Evidence evidence;
};

/// Data the rules consult besides the triple itself.
struct EliminationContext {
    const LinearClassTable* classes = nullptr;
    const FactSet* facts = nullptr;
};

inline std::optional<EliminationReport> rule_ahyp_bound(const TripleCandidate& t) {
    const AhypEvidence e{t.g->a_hyp_rank, t.h.a_hyp_rank(), t.l.a_hyp_rank()};
    if (e.h + e.l <= e.g) return std::nullopt;
    return EliminationReport{t, rule_id::ahyp, e};
}

/// Declines unless h and l are the same simple real form other than
/// so(1,7), the embedding class is recorded as unique and is not on the
/// list of pairs where linear equivalence is weaker than conjugacy, and an
/// invariant witness exists.
inline std::optional<EliminationReport> rule_isomorphic_pair(const TripleCandidate& t, const LinearClassTable& classes) {
    if (t.h.name() != t.l.name() || !t.h.is_simple()) return std::nullopt;
    const auto& h = *t.h.factors.front();
    if (h.name == "so(1,7)" || h.is_compact()) return std::nullopt;
    const auto count = classes.count(t.g->complex_type, t.h.complex_type());
    if (!count || *count != 1) return std::nullopt;
    if (minchenko_exception(t.g->complex_type, t.h.complex_type())) return std::nullopt;
    auto witness = isomorphic_pair_obstruction(h);
    if (!witness) return std::nullopt;
    return EliminationReport{t, rule_id::isomorphic_pair, WitnessEvidence{h.name, std::move(*witness), *count}};
}

inline std::optional<EliminationReport> rule_external_fact(const TripleCandidate& t, const FactSet& facts) {
    for (const auto& f : facts.facts()) {
        if (f.ambient != t.g->name) continue;
        if (f.member != t.h.name() && f.member != t.l.name()) continue;
        return EliminationReport{t, rule_id::external_fact, FactEvidence{f.key, f.statement, f.citation}};
    }
    return std::nullopt;
}

struct EliminationOutcome {
    TripleCandidate triple;
    std::vector<EliminationReport> applicable; ///< in rule order; front() is the verdict

    bool eliminated() const noexcept { return !applicable.empty(); }
    const EliminationReport& verdict() const { return applicable.front(); }
};

inline EliminationOutcome eliminate(const TripleCandidate& t, const EliminationContext& ctx) {
    EliminationOutcome out{t, {}};
    if (auto r = rule_ahyp_bound(t)) out.applicable.push_back(std::move(*r));
    if (ctx.classes)
        if (auto r = rule_isomorphic_pair(t, *ctx.classes)) out.applicable.push_back(std::move(*r));
    if (ctx.facts)
        if (auto r = rule_external_fact(t, *ctx.facts)) out.applicable.push_back(std::move(*r));
    return out;
}

struct EliminationResult {
    std::vector<EliminationOutcome> outcomes; ///< one per input triple, input order
    std::size_t survivors() const {
        return static_cast<std::size_t>(
            std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return !o.eliminated(); }));
    }
};

inline EliminationResult eliminate_all(const std::vector<TripleCandidate>& triples, const EliminationContext& ctx) {
    EliminationResult res;
    res.outcomes.reserve(triples.size());
    for (const auto& t : triples) res.outcomes.push_back(eliminate(t, ctx));
    return res;
}

/// Re-checks a report from scratch: rank sums, witness matching and
/// invariance, fact resolution.
inline bool evidence_is_consistent(const EliminationReport& r, const EliminationContext& ctx) {
    const auto& t = r.triple;
    if (r.rule == rule_id::ahyp) {
        const auto* e = std::get_if<AhypEvidence>(&r.evidence);
        return e && e->g == t.g->a_hyp_rank && e->h == t.h.a_hyp_rank() && e->l == t.l.a_hyp_rank() &&
               e->h + e->l > e->g;
    }
    if (r.rule == rule_id::isomorphic_pair) {
        const auto* e = std::get_if<WitnessEvidence>(&r.evidence);
        if (!e || t.h.name() != t.l.name() || !t.h.is_simple() || e->form != t.h.name()) return false;
        const auto& h = *t.h.factors.front();
        return e->linear_classes == 1 && !e->witness.is_zero() && matches(e->witness, h.satake) &&
               is_invariant(e->witness, diagram_automorphisms(h.complex_type));
    }
    if (r.rule == rule_id::external_fact) {
        const auto* e = std::get_if<FactEvidence>(&r.evidence);
        if (!e || !ctx.facts) return false;
        const auto* f = ctx.facts->find(e->key);
        return f && f->ambient == t.g->name && (f->member == t.h.name() || f->member == t.l.name());
    }
    return false;
}

} // namespace kleinsieve
