#pragma once

// Weighted Dynkin diagrams of hyperbolic orbits and their compatibility with
// Satake diagrams.  A weighted diagram matches a Satake diagram when black
// nodes carry weight 0 and arrow-joined nodes carry equal weights; then the
// complex orbit meets the real form in a single real hyperbolic orbit.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/error.hpp"
#include "core/rational.hpp"
#include "lie_type.hpp"
#include "realform.hpp"
#include "rootsys.hpp"

namespace kleinsieve {

class WeightedDynkinDiagram {
public:
    static WeightedDynkinDiagram make(SimpleType base, std::vector<Rational> weights) {
        if (static_cast<int>(weights.size()) != base.rank())
            throw PreconditionError("weighted diagram of " + base.name() + " needs " + std::to_string(base.rank()) +
                                    " weights");
        for (const auto& w : weights)
            if (w < 0) throw PreconditionError("negative weight in weighted diagram of " + base.name());
        return WeightedDynkinDiagram(base, std::move(weights));
    }

    static WeightedDynkinDiagram zero(SimpleType base) {
        return WeightedDynkinDiagram(base, std::vector<Rational>(base.rank(), Rational(0)));
    }

    SimpleType base() const noexcept { return base_; }
    const std::vector<Rational>& weights() const noexcept { return weights_; }
    const Rational& weight(int node) const { return weights_.at(node); }
    bool is_zero() const {
        return std::all_of(weights_.begin(), weights_.end(), [](const Rational& w) { return w == 0; });
    }

    /// "(1,0,0,1/2)"
    std::string render() const {
        std::string s = "(";
        for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + to_string(weights_[i]);
        return s + ")";
    }

    friend bool operator==(const WeightedDynkinDiagram&, const WeightedDynkinDiagram&) = default;

private:
    WeightedDynkinDiagram(SimpleType base, std::vector<Rational> w) : base_(base), weights_(std::move(w)) {}

    SimpleType base_;
    std::vector<Rational> weights_;
};

/// Partition of the nodes into symbol classes.  Class 0 is the zero class;
/// free classes are numbered 1, 2, ... in order of their first node.
class WeightPattern {
public:
    /// Renumbers arbitrary labels (negative = zero) into canonical form.
    static WeightPattern from_labels(SimpleType base, const std::vector<int>& labels) {
        if (static_cast<int>(labels.size()) != base.rank()) throw PreconditionError("pattern size mismatch");
        std::vector<int> cls(labels.size(), 0);
        std::vector<std::pair<int, int>> seen; // label -> class
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] < 0) continue;
            auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& p) { return p.first == labels[i]; });
            if (it == seen.end()) {
                seen.emplace_back(labels[i], static_cast<int>(seen.size()) + 1);
                it = seen.end() - 1;
            }
            cls[i] = it->second;
        }
        return WeightPattern(base, std::move(cls));
    }

    /// Parses "(a,b,0,0,0,a)": letters are free symbols, 0 marks the zero class.
    static WeightPattern parse(SimpleType base, std::string_view text) {
        std::string s;
        for (char c : text)
            if (c != ' ' && c != '(' && c != ')') s += c;
        std::vector<int> labels;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto end = s.find(',', pos);
            if (end == std::string::npos) end = s.size();
            const auto tok = s.substr(pos, end - pos);
            if (tok == "0") labels.push_back(-1);
            else if (tok.size() == 1 && tok[0] >= 'a' && tok[0] <= 'z') labels.push_back(tok[0]);
            else throw PreconditionError("bad weight pattern '" + std::string(text) + "'");
            pos = end + 1;
        }
        return from_labels(base, labels);
    }

    SimpleType base() const noexcept { return base_; }
    const std::vector<int>& classes() const noexcept { return classes_; }
    int free_class_count() const { return *std::max_element(classes_.begin(), classes_.end()); }

    std::vector<int> zero_nodes() const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(classes_.size()); ++i)
            if (classes_[i] == 0) out.push_back(i);
        return out;
    }

    /// True when every class of `finer` lies inside one class of *this and
    /// both have the same zero class, i.e. *this is a specialization.
    bool coarsens(const WeightPattern& finer) const {
        if (base_ != finer.base_ || zero_nodes() != finer.zero_nodes()) return false;
        for (std::size_t i = 0; i < classes_.size(); ++i)
            for (std::size_t j = 0; j < classes_.size(); ++j)
                if (finer.classes_[i] == finer.classes_[j] && classes_[i] != classes_[j]) return false;
        return true;
    }

    /// "(a,b,0,0,0,a)"
    std::string render() const {
        std::string s = "(";
        for (std::size_t i = 0; i < classes_.size(); ++i) {
            if (i) s += ',';
            s += classes_[i] == 0 ? '0' : static_cast<char>('a' + classes_[i] - 1);
        }
        return s + ")";
    }

    friend bool operator==(const WeightPattern&, const WeightPattern&) = default;

private:
    WeightPattern(SimpleType base, std::vector<int> classes) : base_(base), classes_(std::move(classes)) {}

    SimpleType base_;
    std::vector<int> classes_;
};

namespace detail {
inline void require_same_base(SimpleType a, SimpleType b) {
    if (a != b) throw PreconditionError("weighted diagram of " + a.name() + " against Satake diagram of " + b.name());
}

struct UnionFind {
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> parent;
};
} // namespace detail

inline bool matches(const WeightedDynkinDiagram& psi, const SatakeDiagram& s) {
    detail::require_same_base(psi.base(), s.base());
    for (int b : s.black())
        if (psi.weight(b) != 0) return false;
    for (const auto& [a, b] : s.arrows())
        if (psi.weight(a) != psi.weight(b)) return false;
    return true;
}

/// The complex hyperbolic orbit with diagram psi meets the real form.
inline bool orbit_meets_realform(const WeightedDynkinDiagram& psi, const SatakeDiagram& s) { return matches(psi, s); }

/// Free classes: white tau-orbits; zero class: black nodes.
inline WeightPattern matching_diagram_space(const SatakeDiagram& s) {
    std::vector<int> labels(s.base().rank(), -1);
    int k = 0;
    for (const auto& orbit : s.white_orbits()) {
        for (int i : orbit) labels[i] = k;
        ++k;
    }
    return WeightPattern::from_labels(s.base(), labels);
}

/// Matching diagrams that are also constant on orbits of `auts`: close the
/// arrow pairing under the automorphisms; a class meeting a black node is zero.
inline WeightPattern invariant_pattern(const SatakeDiagram& s, const std::vector<std::vector<int>>& auts) {
    const int n = s.base().rank();
    detail::UnionFind uf(n);
    for (int i = 0; i < n; ++i) uf.unite(i, s.tau()[i]);
    for (const auto& p : auts) {
        if (static_cast<int>(p.size()) != n) throw PreconditionError("automorphism size mismatch");
        for (int i = 0; i < n; ++i) uf.unite(i, p[i]);
    }
    std::vector<bool> dead(n, false);
    for (int b : s.black()) dead[uf.find(b)] = true;
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = dead[uf.find(i)] ? -1 : uf.find(i);
    return WeightPattern::from_labels(s.base(), labels);
}

/// Canonical nonzero witness (weight 1 on every surviving class), if any.
inline std::optional<WeightedDynkinDiagram> invariant_matching_diagram(const SatakeDiagram& s,
                                                                       const std::vector<std::vector<int>>& auts) {
    const auto pattern = invariant_pattern(s, auts);
    if (pattern.free_class_count() == 0) return std::nullopt;
    std::vector<Rational> w;
    for (int c : pattern.classes()) w.emplace_back(c == 0 ? 0 : 1);
    return WeightedDynkinDiagram::make(s.base(), std::move(w));
}

/// Witness of a nontrivial hyperbolic orbit meeting every copy of h that
/// differs from a given one by a diagram automorphism of h^c.
inline std::optional<WeightedDynkinDiagram> isomorphic_pair_obstruction(const RealFormRecord& h) {
    if (h.is_compact()) throw PreconditionError(h.name + " is compact");
    return invariant_matching_diagram(h.satake, diagram_automorphisms(h.complex_type));
}

/// True iff psi is constant on the orbits of every automorphism in `auts`.
inline bool is_invariant(const WeightedDynkinDiagram& psi, const std::vector<std::vector<int>>& auts) {
    for (const auto& p : auts)
        for (int i = 0; i < psi.base().rank(); ++i)
            if (psi.weight(i) != psi.weight(p[i])) return false;
    return true;
}

} // namespace kleinsieve
