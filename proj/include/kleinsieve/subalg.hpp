#pragma once

// Isomorphism types of semisimple subalgebras of simple complex Lie algebras,
// and their real forms.
//
// Types are generated by closure: a simple factor may be replaced by any
// regular subalgebra type (delete nodes of its extended Dynkin diagram) or by
// any maximal S-subalgebra type listed in the S-subalgebra data file.

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "core/error.hpp"
#include "core/json_util.hpp"
#include "lie_type.hpp"
#include "rootsys.hpp"

namespace kleinsieve {

namespace detail {
inline SemisimpleType parse_type_field(const std::string& text, const std::string& where) {
    try {
        return SemisimpleType::parse(text);
    } catch (const InvalidType& e) {
        throw DataError(where + ": " + e.what());
    }
}
} // namespace detail

/// Maximal S-subalgebra types keyed by simple type.
///
/// {"format": "kleinsieve-s-subalgebras", "version": 1,
///  "entries": {"E6": ["A2", "G2", "C4", "F4", "G2+A2"], ...}}
class SSubalgebraCatalog {
public:
    SSubalgebraCatalog() = default;
    explicit SSubalgebraCatalog(std::map<SimpleType, std::vector<SemisimpleType>> entries) : entries_(std::move(entries)) {}

    static SSubalgebraCatalog from_json(const nlohmann::json& doc, const std::string& source = "s_subalgebras") {
        using namespace json_util;
        check_header(doc, "kleinsieve-s-subalgebras", source);
        check_keys(doc, {"format", "version", "entries"}, {"note"}, source);
        std::map<SimpleType, std::vector<SemisimpleType>> entries;
        const auto& obj = doc.at("entries");
        if (!obj.is_object()) throw DataError(source + ": 'entries' must be an object");
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            const std::string where = source + ": entry '" + it.key() + "'";
            const auto key = detail::parse_type_field(it.key(), where);
            if (!key.is_simple() || key.name() != it.key()) throw DataError(where + ": key must be a canonical simple type");
            std::vector<SemisimpleType> subs;
            for (const auto& s : get<std::vector<std::string>>(obj, it.key().c_str(), where)) {
                auto t = detail::parse_type_field(s, where);
                if (t.dimension() >= key.dimension()) throw DataError(where + ": '" + s + "' is not a proper subalgebra");
                subs.push_back(std::move(t));
            }
            entries.emplace(key.factors().front(), std::move(subs));
        }
        return SSubalgebraCatalog(std::move(entries));
    }

    static SSubalgebraCatalog load(const std::filesystem::path& file) {
        return from_json(json_util::read_file(file), file.string());
    }

    bool contains(SimpleType t) const { return entries_.contains(t); }

    const std::vector<SemisimpleType>& maximal(SimpleType t) const {
        auto it = entries_.find(t);
        if (it == entries_.end()) throw DataError("S-subalgebra data has no entry for " + t.name());
        return it->second;
    }

    const std::map<SimpleType, std::vector<SemisimpleType>>& entries() const noexcept { return entries_; }

private:
    std::map<SimpleType, std::vector<SemisimpleType>> entries_;
};

/// Number of linear-equivalence classes of embeddings sub -> ambient.
///
/// {"format": "kleinsieve-linear-classes", "version": 1,
///  "entries": [{"ambient": "E7", "sub": "E6", "classes": 1}, ...]}
class LinearClassTable {
public:
    static LinearClassTable from_json(const nlohmann::json& doc, const std::string& source = "linear_classes") {
        using namespace json_util;
        check_header(doc, "kleinsieve-linear-classes", source);
        check_keys(doc, {"format", "version", "entries"}, {"note"}, source);
        LinearClassTable table;
        for (const auto& row : doc.at("entries")) {
            const std::string where = source + ": entry";
            check_keys(row, {"ambient", "sub", "classes"}, {}, where);
            const auto amb = detail::parse_type_field(get<std::string>(row, "ambient", where), where);
            if (!amb.is_simple()) throw DataError(where + ": ambient must be simple");
            const auto sub = detail::parse_type_field(get<std::string>(row, "sub", where), where);
            const int classes = get<int>(row, "classes", where);
            if (classes < 1) throw DataError(where + ": class count must be positive");
            if (!table.counts_.emplace(std::make_pair(amb.factors().front(), sub), classes).second)
                throw DataError(where + ": duplicate pair " + amb.name() + " / " + sub.name());
        }
        return table;
    }

    static LinearClassTable load(const std::filesystem::path& file) {
        return from_json(json_util::read_file(file), file.string());
    }

    std::optional<int> count(SimpleType ambient, const SemisimpleType& sub) const {
        auto it = counts_.find({ambient, sub});
        if (it == counts_.end()) return std::nullopt;
        return it->second;
    }

private:
    std::map<std::pair<SimpleType, SemisimpleType>, int> counts_;
};

/// True iff the recorded data has exactly one linear-equivalence class.
/// Throws DataError when the pair is not recorded.
inline bool single_linear_class(const LinearClassTable& table, SimpleType ambient, const SemisimpleType& sub) {
    const auto c = table.count(ambient, sub);
    if (!c) throw DataError("no linear-equivalence data for " + sub.name() + " in " + ambient.name());
    return *c == 1;
}

/// Pairs (ambient, sub) for which one linear-equivalence class of embeddings
/// may split into several conjugacy classes.
inline bool minchenko_exception(SimpleType ambient, const SemisimpleType& sub) {
    static const std::map<std::string, std::vector<const char*>> table{
        {"E6", {"A2", "B2", "G2"}},
        {"E7", {"A2+2A1", "A2+3A1"}},
        {"E8", {"A2+A2", "B2+A2", "G2+A2", "D4+A2", "3A1+A2", "4A1+A2", "B2+A3", "A2"}},
    };
    auto it = table.find(ambient.name());
    if (it == table.end()) return false;
    return std::any_of(it->second.begin(), it->second.end(),
                       [&](const char* s) { return SemisimpleType::parse(s) == sub; });
}

struct SubalgebraRecord {
    SimpleType ambient;
    SemisimpleType sub;
    bool via_regular = false;   ///< reachable by regular steps only
    bool via_s_catalog = false; ///< reachable through at least one S-subalgebra step
    std::optional<int> linear_class_count;

    std::string origin() const {
        if (via_regular && via_s_catalog) return "regular-closure+S-catalog";
        return via_regular ? "regular-closure" : "S-catalog";
    }
};

/// Regular subalgebra types obtained in one step from t: delete a nonempty
/// set of nodes from the extended diagram.  An empty vector stands for the
/// zero subalgebra (all nodes deleted); t itself is not listed.
inline std::set<std::vector<SimpleType>> regular_children(SimpleType t) {
    const auto ext = extended_diagram(t);
    const int m = t.rank() + 1;
    std::set<std::vector<SimpleType>> out;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> keep;
        for (int i = 0; i < m; ++i)
            if (!(mask >> i & 1)) keep.push_back(i);
        std::vector<SimpleType> factors;
        if (!keep.empty())
            for (const auto& c : components(ext.cartan, keep)) factors.push_back(c.type);
        std::sort(factors.begin(), factors.end());
        if (factors.size() == 1 && factors.front() == t) continue;
        out.insert(std::move(factors));
    }
    return out;
}

namespace detail {

using FactorList = std::vector<SimpleType>; // sorted

inline FactorList sorted_factors(const SemisimpleType& s) {
    FactorList f = s.factors();
    std::sort(f.begin(), f.end());
    return f;
}

/// Closure over (type, used-an-S-step) states.
class SubalgebraClosure {
public:
    explicit SubalgebraClosure(const SSubalgebraCatalog* s_catalog) : s_catalog_(s_catalog) {}

    // reached type -> (via regular only, via S)
    std::map<FactorList, std::pair<bool, bool>> run(SimpleType t) {
        std::map<FactorList, std::pair<bool, bool>> reached;
        std::vector<std::pair<FactorList, bool>> frontier{{{t}, false}};
        reached[{t}].first = true;
        while (!frontier.empty()) {
            std::vector<std::pair<FactorList, bool>> next;
            for (const auto& [tau, via_s] : frontier) {
                for (std::size_t i = 0; i < tau.size(); ++i) {
                    if (i > 0 && tau[i] == tau[i - 1]) continue;
                    FactorList rest = tau;
                    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
                    auto visit = [&](const FactorList& child, bool s_step) {
                        FactorList merged = rest;
                        merged.insert(merged.end(), child.begin(), child.end());
                        if (merged.empty()) return;
                        std::sort(merged.begin(), merged.end());
                        const bool flag = via_s || s_step;
                        auto& slot = reached[merged];
                        bool& seen = flag ? slot.second : slot.first;
                        if (!seen) {
                            seen = true;
                            next.emplace_back(std::move(merged), flag);
                        }
                    };
                    for (const auto& c : regular(tau[i])) visit(c, false);
                    if (s_catalog_)
                        for (const auto& s : s_catalog_->maximal(tau[i])) visit(sorted_factors(s), true);
                }
            }
            frontier = std::move(next);
        }
        return reached;
    }

private:
    const std::set<FactorList>& regular(SimpleType t) {
        auto it = cache_.find(t);
        if (it == cache_.end()) it = cache_.emplace(t, regular_children(t)).first;
        return it->second;
    }

    const SSubalgebraCatalog* s_catalog_;
    std::map<SimpleType, std::set<FactorList>> cache_;
};

} // namespace detail

/// Closure of {t} under regular steps only; includes t.
inline std::set<SemisimpleType> regular_subalgebra_types(SimpleType t) {
    std::set<SemisimpleType> out;
    for (const auto& [f, flags] : detail::SubalgebraClosure(nullptr).run(t)) out.insert(SemisimpleType::make(f));
    return out;
}

/// Proper semisimple subalgebra types of t (t excluded), with origin and
/// recorded class count, ordered by SemisimpleType.
inline std::vector<SubalgebraRecord> semisimple_subalgebra_types(SimpleType t, const SSubalgebraCatalog& s_catalog,
                                                                 const LinearClassTable* classes = nullptr) {
    std::vector<SubalgebraRecord> out;
    for (const auto& [f, flags] : detail::SubalgebraClosure(&s_catalog).run(t)) {
        if (f.size() == 1 && f.front() == t) continue;
        SubalgebraRecord rec{t, SemisimpleType::make(f), flags.first, flags.second, std::nullopt};
        if (classes) rec.linear_class_count = classes->count(t, rec.sub);
        out.push_back(std::move(rec));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.sub < b.sub; });
    return out;
}

/// A real form of a semisimple type: a multiset of simple real forms.
struct CompositeRealForm {
    std::vector<RealFormCatalog::Ptr> factors; ///< sorted by name

    std::string name() const {
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "+" : "") + factors[i]->name;
        return s;
    }
    SemisimpleType complex_type() const {
        std::vector<SimpleType> t;
        for (const auto& f : factors) t.push_back(f->complex_type);
        return SemisimpleType::make(std::move(t));
    }
    int real_rank() const { return sum([](const RealFormRecord& r) { return r.real_rank; }); }
    int dim_k() const { return sum([](const RealFormRecord& r) { return r.dims.dim_k; }); }
    int dim_p() const { return sum([](const RealFormRecord& r) { return r.dims.dim_p; }); }
    /// Sum over the noncompact factors.
    int a_hyp_rank() const { return sum([](const RealFormRecord& r) { return r.a_hyp_rank; }); }
    bool has_compact_ideal() const {
        return std::any_of(factors.begin(), factors.end(), [](const auto& f) { return f->is_compact(); });
    }
    bool is_simple() const { return factors.size() == 1; }

    friend bool operator==(const CompositeRealForm& a, const CompositeRealForm& b) { return a.name() == b.name(); }

private:
    template <class F>
    int sum(F f) const {
        int s = 0;
        for (const auto& x : factors) s += f(*x);
        return s;
    }
};

/// All real forms of st: multisets of simple real forms, one per factor.
inline std::vector<CompositeRealForm> real_forms_of_type(const SemisimpleType& st, const RealFormCatalog& catalog) {
    // group equal factors: a repeated factor contributes multisets, not tuples
    std::vector<std::pair<SimpleType, int>> groups;
    for (const auto& f : st.factors()) {
        if (!groups.empty() && groups.back().first == f) ++groups.back().second;
        else groups.emplace_back(f, 1);
    }
    std::vector<std::vector<std::vector<RealFormCatalog::Ptr>>> choices;
    for (const auto& [t, count] : groups) {
        const auto forms = catalog.forms_of(t);
        if (forms.empty()) throw DataError("real-form catalog has no forms of " + t.name());
        std::vector<std::vector<RealFormCatalog::Ptr>> combos;
        std::vector<std::size_t> idx(count, 0);
        for (;;) {
            std::vector<RealFormCatalog::Ptr> c;
            for (auto i : idx) c.push_back(forms[i]);
            combos.push_back(std::move(c));
            int k = count - 1;
            while (k >= 0 && idx[k] + 1 == forms.size()) --k;
            if (k < 0) break;
            ++idx[k];
            for (int j = k + 1; j < count; ++j) idx[j] = idx[k];
        }
        choices.push_back(std::move(combos));
    }
    std::vector<CompositeRealForm> out;
    std::vector<RealFormCatalog::Ptr> current;
    std::function<void(std::size_t)> build = [&](std::size_t g) {
        if (g == choices.size()) {
            CompositeRealForm c{current};
            std::sort(c.factors.begin(), c.factors.end(), [](const auto& a, const auto& b) { return a->name < b->name; });
            out.push_back(std::move(c));
            return;
        }
        for (const auto& combo : choices[g]) {
            current.insert(current.end(), combo.begin(), combo.end());
            build(g + 1);
            current.resize(current.size() - combo.size());
        }
    };
    build(0);
    return out;
}

} // namespace kleinsieve
