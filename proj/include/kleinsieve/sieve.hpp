#pragma once

// Candidate triples (g, h, l): h and l run over real forms of semisimple
// subalgebra types of g^c and must satisfy the numeric restrictions
//   rank h + rank l = rank g,  dim p_h + dim p_l = dim p_g.

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "core/error.hpp"
#include "subalg.hpp"

namespace kleinsieve {

struct TripleChecks {
    int rank_g = 0, rank_h = 0, rank_l = 0;
    int dim_p_g = 0, dim_p_h = 0, dim_p_l = 0;

    bool rank_sum() const noexcept { return rank_h + rank_l == rank_g; }
    bool dim_p_sum() const noexcept { return dim_p_h + dim_p_l == dim_p_g; }
    bool dim_p_order() const noexcept { return dim_p_h <= dim_p_l; }
};

struct TripleCandidate {
    RealFormCatalog::Ptr g;
    CompositeRealForm h;
    CompositeRealForm l;
    TripleChecks checks;

    /// All four invariants, including the absence of compact ideals.
    bool valid() const {
        return checks.rank_sum() && checks.dim_p_sum() && checks.dim_p_order() && !h.has_compact_ideal() &&
               !l.has_compact_ideal();
    }
};

inline TripleChecks evaluate_checks(const RealFormRecord& g, const CompositeRealForm& h, const CompositeRealForm& l) {
    return {g.real_rank, h.real_rank(), l.real_rank(), g.dims.dim_p, h.dim_p(), l.dim_p()};
}

/// Real forms of every proper semisimple subalgebra type of t.
inline std::vector<CompositeRealForm> subalgebra_real_forms(SimpleType t, const RealFormCatalog& catalog,
                                                            const SSubalgebraCatalog& s_catalog) {
    std::vector<CompositeRealForm> pool;
    for (const auto& rec : semisimple_subalgebra_types(t, s_catalog)) {
        auto forms = real_forms_of_type(rec.sub, catalog);
        pool.insert(pool.end(), std::make_move_iterator(forms.begin()), std::make_move_iterator(forms.end()));
    }
    return pool;
}

/// Algorithm 1: strict rank, dim k and dim p bounds.
inline std::vector<CompositeRealForm> potential_subalgebras(const RealFormRecord& g,
                                                            const std::vector<CompositeRealForm>& pool) {
    if (g.is_compact()) throw PreconditionError(g.name + " is compact");
    std::vector<CompositeRealForm> out;
    for (const auto& h : pool)
        if (h.real_rank() < g.real_rank && h.dim_k() < g.dims.dim_k && h.dim_p() < g.dims.dim_p) out.push_back(h);
    return out;
}

/// Canonical order within a pair: smaller dim p first, names break ties.
inline bool canonical_pair(const CompositeRealForm& h, const CompositeRealForm& l) {
    if (h.dim_p() != l.dim_p()) return h.dim_p() < l.dim_p();
    return h.name() <= l.name();
}

inline void sort_candidates(std::vector<TripleCandidate>& v) {
    std::stable_sort(v.begin(), v.end(), [](const TripleCandidate& a, const TripleCandidate& b) {
        return std::forward_as_tuple(a.h.name(), a.l.name()) < std::forward_as_tuple(b.h.name(), b.l.name());
    });
}

/// Algorithm 2 over an explicit pool, then the compact-ideal reporting filter.
inline std::vector<TripleCandidate> potential_pairs(const RealFormCatalog::Ptr& g,
                                                    const std::vector<CompositeRealForm>& pool) {
    const auto potential = potential_subalgebras(*g, pool);
    std::map<std::pair<int, int>, std::vector<const CompositeRealForm*>> by_rank_p;
    for (const auto& x : potential) by_rank_p[{x.real_rank(), x.dim_p()}].push_back(&x);

    std::vector<TripleCandidate> out;
    for (const auto& h : potential) {
        auto it = by_rank_p.find({g->real_rank - h.real_rank(), g->dims.dim_p - h.dim_p()});
        if (it == by_rank_p.end()) continue;
        for (const auto* l : it->second) {
            if (!canonical_pair(h, *l)) continue;
            if (h.has_compact_ideal() || l->has_compact_ideal()) continue;
            out.push_back({g, h, *l, evaluate_checks(*g, h, *l)});
        }
    }
    sort_candidates(out);
    return out;
}

inline std::vector<TripleCandidate> potential_pairs(const RealFormCatalog::Ptr& g, const RealFormCatalog& catalog,
                                                    const SSubalgebraCatalog& s_catalog) {
    return potential_pairs(g, subalgebra_real_forms(g->complex_type, catalog, s_catalog));
}

/// Union of potential_pairs over the noncompact exceptional forms, in catalog order.
inline std::vector<TripleCandidate> sieve_all_exceptional(const RealFormCatalog& catalog,
                                                          const SSubalgebraCatalog& s_catalog) {
    std::vector<TripleCandidate> out;
    std::map<SimpleType, std::vector<CompositeRealForm>> pools;
    for (const auto& g : catalog.records()) {
        if (!g->complex_type.is_exceptional() || g->is_compact()) continue;
        auto& pool = pools[g->complex_type];
        if (pool.empty()) pool = subalgebra_real_forms(g->complex_type, catalog, s_catalog);
        auto rows = potential_pairs(g, pool);
        out.insert(out.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
    }
    return out;
}

} // namespace kleinsieve
