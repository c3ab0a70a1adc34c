#pragma once

// Exact combinatorics of finite root systems.
//
// Conventions used throughout the library:
//   * nodes are 0-based indices; node i is Bourbaki's alpha_{i+1};
//   * roots are integer coefficient vectors over the simple roots;
//   * cartan(i, j) = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j);
//   * matrices act on column vectors of simple-root coefficients;
//   * a Weyl word (i0, i1, ..., ik) denotes the product s_i0 s_i1 ... s_ik.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/matrix.hpp"
#include "lie_type.hpp"

namespace kleinsieve {

using Root = std::vector<int>;

inline constexpr std::uint64_t kDefaultWeylCap = 10'000'000;

/// Cartan matrix in Bourbaki numbering.
inline IntMatrix cartan_matrix(SimpleType t) {
    const int n = t.rank();
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i) a(i, i) = 2;
    auto link = [&](int i, int j) { a(i, j) = a(j, i) = -1; };
    switch (t.family()) {
    case Family::A:
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        break;
    case Family::B:
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        a(n - 2, n - 1) = -2; // alpha_n short
        break;
    case Family::C:
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        a(n - 1, n - 2) = -2; // alpha_n long
        break;
    case Family::D:
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case Family::E:
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
        break;
    case Family::F:
        link(0, 1);
        link(1, 2);
        link(2, 3);
        a(1, 2) = -2; // alpha_1, alpha_2 long
        break;
    case Family::G:
        a(0, 1) = -1; // alpha_1 short
        a(1, 0) = -3;
        break;
    }
    return a;
}

/// Positive integers d_i with (alpha_i, alpha_i) = 2 d_i, making
/// cartan(i, j) * d_j symmetric.  Each connected component is scaled so its
/// shortest root has d = 1.
inline std::vector<int> symmetrizer(const IntMatrix& cartan) {
    const int n = static_cast<int>(cartan.rows());
    // d as fractions num/den
    std::vector<std::pair<long, long>> d(n, {0, 0});
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        d[s] = {1, 1};
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (j == i || cartan(i, j) == 0 || comp[j] >= 0) continue;
                // cartan(i,j) d_j = cartan(j,i) d_i
                long num = d[i].first * cartan(j, i);
                long den = d[i].second * cartan(i, j);
                if (den < 0) num = -num, den = -den;
                long g = std::gcd(num, den);
                d[j] = {num / g, den / g};
                comp[j] = ncomp;
                stack.push_back(j);
            }
        }
        ++ncomp;
    }
    std::vector<int> out(n);
    for (int c = 0; c < ncomp; ++c) {
        long l = 1;
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) l = std::lcm(l, d[i].second);
        long g = 0;
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) g = std::gcd(g, d[i].first * (l / d[i].second));
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) out[i] = static_cast<int>(d[i].first * (l / d[i].second) / g);
    }
    return out;
}

/// A connected component of a Dynkin diagram and its isomorphism type.
struct Component {
    SimpleType type;
    std::vector<int> nodes;
};

namespace detail {

inline SimpleType identify_connected(const IntMatrix& a, const std::vector<int>& nodes) {
    const int n = static_cast<int>(nodes.size());
    if (n == 1) return SimpleType::make(Family::A, 1);
    auto at = [&](int i, int j) { return a(nodes[i], nodes[j]); };
    std::vector<int> deg(n, 0);
    int edges = 0, double_edges = 0, triple_edges = 0;
    std::pair<int, int> double_edge{-1, -1};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (at(i, j) == 0) continue;
            ++deg[i], ++deg[j], ++edges;
            int p = at(i, j) * at(j, i);
            if (p == 2) ++double_edges, double_edge = {i, j};
            else if (p == 3) ++triple_edges;
            else if (p != 1) throw InvalidType("Cartan matrix is not of finite type");
        }
    if (edges != n - 1) throw InvalidType("Dynkin diagram is not a tree");
    int maxdeg = *std::max_element(deg.begin(), deg.end());
    if (triple_edges > 0) {
        if (n != 2) throw InvalidType("Cartan matrix is not of finite type");
        return SimpleType::make(Family::G, 2);
    }
    if (double_edges > 1 || (double_edges == 1 && maxdeg > 2)) throw InvalidType("Cartan matrix is not of finite type");
    if (double_edges == 1) {
        if (n == 2) return SimpleType::make(Family::B, 2);
        auto [i, j] = double_edge;
        if (deg[i] == 1 || deg[j] == 1) {
            int leaf = deg[i] == 1 ? i : j;
            int other = leaf == i ? j : i;
            auto d = symmetrizer(a.submatrix(nodes));
            return SimpleType::make(d[leaf] < d[other] ? Family::B : Family::C, n);
        }
        if (n == 4) return SimpleType::make(Family::F, 4);
        throw InvalidType("Cartan matrix is not of finite type");
    }
    if (maxdeg <= 2) return SimpleType::make(Family::A, n);
    int branch = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
    if (std::count(deg.begin(), deg.end(), 3) != 1 || maxdeg > 3) throw InvalidType("Cartan matrix is not of finite type");
    std::vector<int> arms;
    for (int nb = 0; nb < n; ++nb) {
        if (nb == branch || at(branch, nb) == 0) continue;
        int len = 1, prev = branch, cur = nb;
        for (;;) {
            int next = -1;
            for (int k = 0; k < n; ++k)
                if (k != cur && k != prev && at(cur, k) != 0) next = k;
            if (next < 0) break;
            prev = cur, cur = next, ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return SimpleType::make(Family::D, n);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return SimpleType::make(Family::E, n);
    throw InvalidType("Cartan matrix is not of finite type");
}

inline void validate_cartan(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw InvalidType("Cartan matrix must be square");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i == j) {
                if (a(i, j) != 2) throw InvalidType("Cartan matrix diagonal must be 2");
            } else if (a(i, j) > 0 || a(i, j) < -3 || ((a(i, j) == 0) != (a(j, i) == 0))) {
                throw InvalidType("bad off-diagonal Cartan entry");
            }
        }
}

} // namespace detail

/// Connected components of the diagram described by `cartan` restricted to
/// `nodes` (all nodes when empty), each identified up to isomorphism.
inline std::vector<Component> components(const IntMatrix& cartan, std::vector<int> nodes = {}) {
    detail::validate_cartan(cartan);
    if (nodes.empty()) {
        nodes.resize(cartan.rows());
        std::iota(nodes.begin(), nodes.end(), 0);
    }
    std::vector<Component> out;
    std::set<int> pending(nodes.begin(), nodes.end());
    while (!pending.empty()) {
        std::vector<int> comp{*pending.begin()};
        pending.erase(pending.begin());
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (auto it = pending.begin(); it != pending.end();) {
                if (cartan(comp[k], *it) != 0) {
                    comp.push_back(*it);
                    it = pending.erase(it);
                } else {
                    ++it;
                }
            }
        std::sort(comp.begin(), comp.end());
        out.push_back({detail::identify_connected(cartan, comp), std::move(comp)});
    }
    return out;
}

/// Root system of a finite-type Cartan matrix (not necessarily connected).
class RootSystem {
public:
    explicit RootSystem(IntMatrix cartan) : cartan_(std::move(cartan)) {
        comps_ = kleinsieve::components(cartan_);
        d_ = kleinsieve::symmetrizer(cartan_);
        generate();
    }

    static RootSystem of(SimpleType t) { return RootSystem(cartan_matrix(t)); }

    int rank() const noexcept { return static_cast<int>(cartan_.rows()); }
    const IntMatrix& cartan() const noexcept { return cartan_; }
    const std::vector<int>& symmetrizer() const noexcept { return d_; }
    const std::vector<Component>& components() const noexcept { return comps_; }

    /// All roots: the positive ones (ordered by height, then lexicographically)
    /// followed by their negatives in the same order.
    const std::vector<Root>& roots() const noexcept { return roots_; }
    std::span<const Root> positive_roots() const noexcept { return {roots_.data(), roots_.size() / 2}; }
    bool is_root(const Root& v) const { return index_.contains(v); }

    std::optional<SimpleType> type() const {
        if (comps_.size() == 1) return comps_.front().type;
        return std::nullopt;
    }

    std::uint64_t weyl_order() const noexcept {
        std::uint64_t o = 1;
        for (const auto& c : comps_) o *= c.type.weyl_order();
        return o;
    }

    /// (u, v) for the invariant form normalized by symmetrizer().
    long inner_product(std::span<const int> u, std::span<const int> v) const {
        long s = 0;
        for (int i = 0; i < rank(); ++i) {
            if (u[i] == 0) continue;
            for (int j = 0; j < rank(); ++j) s += static_cast<long>(u[i]) * v[j] * cartan_(i, j) * d_[j];
        }
        return s;
    }

    /// <v, alpha_i^vee>.
    int coroot_pairing(std::span<const int> v, int i) const {
        int s = 0;
        for (int j = 0; j < rank(); ++j) s += v[j] * cartan_(j, i);
        return s;
    }

    Root reflect(Root v, int i) const {
        v[i] -= coroot_pairing(v, i);
        return v;
    }

    /// Highest root of an irreducible system.
    const Root& highest_root() const {
        if (comps_.size() != 1) throw PreconditionError("highest root needs an irreducible root system");
        return roots_[roots_.size() / 2 - 1];
    }

private:
    void generate() {
        const int n = rank();
        std::size_t bound = 0;
        for (const auto& c : comps_) bound += static_cast<std::size_t>(c.type.dimension() - c.type.rank());
        std::set<Root> seen;
        std::vector<Root> frontier;
        for (int i = 0; i < n; ++i) {
            Root e(n, 0);
            e[i] = 1;
            seen.insert(e);
            frontier.push_back(std::move(e));
        }
        while (!frontier.empty()) {
            std::vector<Root> next;
            for (const auto& v : frontier)
                for (int i = 0; i < n; ++i) {
                    Root w = reflect(v, i);
                    if (seen.insert(w).second) {
                        if (seen.size() > bound) throw InvalidType("Cartan matrix is not of finite type");
                        next.push_back(std::move(w));
                    }
                }
            frontier = std::move(next);
        }
        if (seen.size() != bound) throw InvalidType("root count does not match the identified type");
        std::vector<Root> pos;
        for (const auto& v : seen)
            if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; })) pos.push_back(v);
        std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
            int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
            return ha != hb ? ha < hb : a < b;
        });
        roots_ = pos;
        for (const auto& v : pos) {
            Root m = v;
            for (auto& x : m) x = -x;
            roots_.push_back(std::move(m));
        }
        for (std::size_t k = 0; k < roots_.size(); ++k) index_.emplace(roots_[k], k);
    }

    IntMatrix cartan_;
    std::vector<Component> comps_;
    std::vector<int> d_;
    std::vector<Root> roots_;
    std::map<Root, std::size_t> index_;
};

/// Matrix of the simple reflection s_i in simple-root coordinates.
inline IntMatrix simple_reflection(const IntMatrix& cartan, int i) {
    const std::size_t n = cartan.rows();
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= cartan(j, i);
    return m;
}

/// Weyl group element: a word in the simple reflections together with its
/// matrix.  Words are not canonical, so equality is matrix equality.
class WeylElement {
public:
    WeylElement(std::vector<int> word, IntMatrix matrix) : word_(std::move(word)), matrix_(std::move(matrix)) {}

    static WeylElement identity(std::size_t rank) { return {{}, IntMatrix::identity(rank)}; }

    static WeylElement from_word(const IntMatrix& cartan, std::vector<int> word) {
        IntMatrix m = IntMatrix::identity(cartan.rows());
        for (int i : word) m = m * simple_reflection(cartan, i);
        return {std::move(word), std::move(m)};
    }

    const std::vector<int>& word() const noexcept { return word_; }
    const IntMatrix& matrix() const noexcept { return matrix_; }
    std::size_t length() const noexcept { return word_.size(); }

    Root apply(std::span<const int> v) const { return matrix_.apply(v); }

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }

private:
    std::vector<int> word_;
    IntMatrix matrix_;
};

/// Longest element w0: grows w while some w(alpha_i) is positive.
inline WeylElement longest_element(const RootSystem& rs) {
    const int n = rs.rank();
    std::vector<IntMatrix> refl;
    for (int i = 0; i < n; ++i) refl.push_back(simple_reflection(rs.cartan(), i));
    std::vector<int> word;
    IntMatrix m = IntMatrix::identity(n);
    for (;;) {
        int found = -1;
        for (int i = 0; i < n && found < 0; ++i) {
            bool positive = true;
            for (int r = 0; r < n && positive; ++r) positive = m(r, i) >= 0;
            if (positive) found = i;
        }
        if (found < 0) break;
        m = m * refl[found];
        word.push_back(found);
    }
    return {std::move(word), std::move(m)};
}

/// The permutation p with -w0(alpha_i) = alpha_{p[i]}.
inline std::vector<int> minus_w0_involution(const RootSystem& rs) {
    const int n = rs.rank();
    const auto w0 = longest_element(rs);
    std::vector<int> perm(n, -1);
    for (int i = 0; i < n; ++i) {
        auto col = w0.matrix().column(i);
        int nonzero = static_cast<int>(std::count_if(col.begin(), col.end(), [](int x) { return x != 0; }));
        auto it = std::find(col.begin(), col.end(), -1);
        if (nonzero != 1 || it == col.end()) throw Error("-w0 does not permute the simple roots");
        perm[i] = static_cast<int>(it - col.begin());
    }
    return perm;
}

/// Extended Dynkin diagram: the simple nodes 0..n-1 followed by the affine
/// node n carrying the lowest root -theta.
struct ExtendedDiagram {
    SimpleType type;
    IntMatrix cartan; ///< (n+1) x (n+1) generalized Cartan matrix
    Root highest_root;
    int affine_node;
};

inline ExtendedDiagram extended_diagram(SimpleType t) {
    const RootSystem rs = RootSystem::of(t);
    const int n = rs.rank();
    Root theta = rs.highest_root();
    std::vector<Root> v;
    for (int i = 0; i < n; ++i) {
        Root e(n, 0);
        e[i] = 1;
        v.push_back(e);
    }
    Root lowest = theta;
    for (auto& x : lowest) x = -x;
    v.push_back(lowest);
    IntMatrix a(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            long num = 2 * rs.inner_product(v[i], v[j]);
            long den = rs.inner_product(v[j], v[j]);
            a(i, j) = static_cast<int>(num / den);
        }
    return {t, std::move(a), std::move(theta), n};
}

/// All permutations p of the nodes with cartan(p[i], p[j]) == cartan(i, j),
/// identity first, then in lexicographic order.
inline std::vector<std::vector<int>> diagram_automorphisms(const IntMatrix& cartan) {
    const int n = static_cast<int>(cartan.rows());
    std::vector<std::vector<int>> out;
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    std::function<void(int)> extend = [&](int i) {
        if (i == n) {
            out.push_back(perm);
            return;
        }
        for (int img = 0; img < n; ++img) {
            if (used[img]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = cartan(img, perm[j]) == cartan(i, j) && cartan(perm[j], img) == cartan(j, i);
            if (!ok) continue;
            perm[i] = img;
            used[img] = true;
            extend(i + 1);
            used[img] = false;
        }
    };
    extend(0);
    return out;
}

inline std::vector<std::vector<int>> diagram_automorphisms(SimpleType t) { return diagram_automorphisms(cartan_matrix(t)); }

namespace detail {
struct RootHash {
    std::size_t operator()(const Root& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 1099511628211ull;
        return h;
    }
};
} // namespace detail

/// Streams every Weyl group element exactly once, in breadth-first order of
/// length (identity first; generators tried in index order).  The visitor
/// returns false to stop early.  Elements are identified through the
/// regular orbit of 2*rho, so only the current frontier holds matrices.
template <class Visitor>
void for_each_weyl_element(const RootSystem& rs, std::uint64_t cap, Visitor&& visit) {
    if (rs.weyl_order() > cap)
        throw CapExceeded("Weyl group of order " + std::to_string(rs.weyl_order()) + " exceeds the enumeration cap " +
                          std::to_string(cap));
    const int n = rs.rank();
    std::vector<IntMatrix> refl;
    for (int i = 0; i < n; ++i) refl.push_back(simple_reflection(rs.cartan(), i));
    Root two_rho(n, 0);
    for (const auto& r : rs.positive_roots())
        for (int i = 0; i < n; ++i) two_rho[i] += r[i];

    std::unordered_set<Root, detail::RootHash> seen{two_rho};
    std::deque<std::pair<Root, WeylElement>> queue;
    queue.emplace_back(two_rho, WeylElement::identity(n));
    while (!queue.empty()) {
        auto [point, w] = std::move(queue.front());
        queue.pop_front();
        if (!visit(std::as_const(w))) return;
        for (int i = 0; i < n; ++i) {
            Root p = rs.reflect(point, i);
            if (!seen.insert(p).second) continue;
            std::vector<int> word{i};
            word.insert(word.end(), w.word().begin(), w.word().end());
            queue.emplace_back(std::move(p), WeylElement(std::move(word), refl[i] * w.matrix()));
        }
    }
}

inline std::vector<WeylElement> weyl_group_elements(const RootSystem& rs, std::uint64_t cap = kDefaultWeylCap) {
    std::vector<WeylElement> out;
    out.reserve(static_cast<std::size_t>(std::min(rs.weyl_order(), cap)));
    for_each_weyl_element(rs, cap, [&](const WeylElement& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

} // namespace kleinsieve
