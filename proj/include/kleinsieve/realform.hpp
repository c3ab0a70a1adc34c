#pragma once

// Real forms of simple complex Lie algebras via Satake diagrams.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/matrix.hpp"
#include "lie_type.hpp"
#include "rootsys.hpp"

namespace kleinsieve {

/// Dynkin diagram with black nodes and an arrow pairing of white nodes.
/// Node indices are 0-based.
class SatakeDiagram {
public:
    using Arrow = std::pair<int, int>;

    /// Structural validation only: indices in range, arrows join distinct
    /// white nodes, each node on at most one arrow.  Whether the colouring
    /// belongs to a real form is checked by satake_involution().
    static SatakeDiagram make(SimpleType base, std::vector<int> black, std::vector<Arrow> arrows) {
        const int n = base.rank();
        std::sort(black.begin(), black.end());
        if (std::adjacent_find(black.begin(), black.end()) != black.end())
            throw DataError("repeated black node in Satake diagram of " + base.name());
        for (int b : black)
            if (b < 0 || b >= n) throw DataError("black node out of range for " + base.name());
        std::vector<int> tau(n);
        std::iota(tau.begin(), tau.end(), 0);
        for (auto& [a, b] : arrows) {
            if (a > b) std::swap(a, b);
            if (a < 0 || b >= n || a == b) throw DataError("bad arrow in Satake diagram of " + base.name());
            if (std::binary_search(black.begin(), black.end(), a) || std::binary_search(black.begin(), black.end(), b))
                throw DataError("arrow touches a black node in Satake diagram of " + base.name());
            if (tau[a] != a || tau[b] != b) throw DataError("node on two arrows in Satake diagram of " + base.name());
            tau[a] = b;
            tau[b] = a;
        }
        std::sort(arrows.begin(), arrows.end());
        return SatakeDiagram(base, std::move(black), std::move(arrows), std::move(tau));
    }

    /// Same as make() but with Bourbaki's 1-based node labels.
    static SatakeDiagram from_labels(SimpleType base, std::vector<int> black, std::vector<Arrow> arrows) {
        for (auto& b : black) --b;
        for (auto& [x, y] : arrows) --x, --y;
        return make(base, std::move(black), std::move(arrows));
    }

    static SatakeDiagram split(SimpleType base) { return make(base, {}, {}); }

    static SatakeDiagram compact(SimpleType base) {
        std::vector<int> all(base.rank());
        std::iota(all.begin(), all.end(), 0);
        return make(base, std::move(all), {});
    }

    SimpleType base() const noexcept { return base_; }
    const std::vector<int>& black() const noexcept { return black_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    bool is_black(int i) const { return std::binary_search(black_.begin(), black_.end(), i); }
    bool is_compact() const noexcept { return static_cast<int>(black_.size()) == base_.rank(); }

    /// Arrow permutation of all nodes (identity off the arrows).
    const std::vector<int>& tau() const noexcept { return tau_; }

    /// White tau-orbits ordered by their smallest node.
    std::vector<std::vector<int>> white_orbits() const {
        std::vector<std::vector<int>> out;
        for (int i = 0; i < base_.rank(); ++i) {
            if (is_black(i) || tau_[i] < i) continue;
            out.push_back(tau_[i] == i ? std::vector<int>{i} : std::vector<int>{i, tau_[i]});
        }
        return out;
    }

    /// tau on white nodes, opposition involution of the black subdiagram on
    /// black nodes.
    std::vector<int> omega() const {
        std::vector<int> w = tau_;
        if (black_.empty()) return w;
        const IntMatrix sub = cartan_matrix(base_).submatrix(black_);
        const auto opp = minus_w0_involution(RootSystem(sub));
        for (std::size_t k = 0; k < black_.size(); ++k) w[black_[k]] = black_[opp[k]];
        return w;
    }

    /// True iff omega() is a diagram automorphism, a necessary condition for
    /// the colouring to come from a real form.
    bool induces_automorphism() const {
        const IntMatrix a = cartan_matrix(base_);
        const auto w = omega();
        for (int i = 0; i < base_.rank(); ++i)
            for (int j = 0; j < base_.rank(); ++j)
                if (a(w[i], w[j]) != a(i, j)) return false;
        return true;
    }

    /// Compact text form: one character per node ('o' white, '*' black),
    /// followed by arrows in 1-based labels, e.g. "oo***o 1<->6".
    std::string render() const {
        std::string s;
        for (int i = 0; i < base_.rank(); ++i) s += is_black(i) ? '*' : 'o';
        for (const auto& [a, b] : arrows_) s += " " + std::to_string(a + 1) + "<->" + std::to_string(b + 1);
        return s;
    }

    friend bool operator==(const SatakeDiagram& x, const SatakeDiagram& y) {
        return x.base_ == y.base_ && x.black_ == y.black_ && x.arrows_ == y.arrows_;
    }

private:
    SatakeDiagram(SimpleType base, std::vector<int> black, std::vector<Arrow> arrows, std::vector<int> tau)
        : base_(base), black_(std::move(black)), arrows_(std::move(arrows)), tau_(std::move(tau)) {}

    SimpleType base_;
    std::vector<int> black_;
    std::vector<Arrow> arrows_;
    std::vector<int> tau_;
};

/// The involution sigma = w_B * omega on the root lattice, in simple-root
/// coordinates.  sigma acts as -1 on the span of the black roots; the
/// a-part of a root alpha is (alpha + sigma alpha) / 2.
inline IntMatrix satake_involution(const SatakeDiagram& s) {
    if (!s.induces_automorphism())
        throw DataError("colouring " + s.render() + " of " + s.base().name() + " is not the Satake diagram of a real form");
    const int n = s.base().rank();
    const IntMatrix a = cartan_matrix(s.base());
    IntMatrix wb = IntMatrix::identity(n);
    for (;;) {
        int found = -1;
        for (int i : s.black()) {
            bool positive = true;
            for (int r = 0; r < n && positive; ++r) positive = wb(r, i) >= 0;
            if (positive) {
                found = i;
                break;
            }
        }
        if (found < 0) break;
        wb = wb * simple_reflection(a, found);
    }
    const auto omega = s.omega();
    IntMatrix perm(n, n);
    for (int c = 0; c < n; ++c) perm(omega[c], c) = 1;
    IntMatrix sigma = wb * perm;
    if (sigma * sigma != IntMatrix::identity(n))
        throw DataError("Satake involution of " + s.base().name() + " diagram " + s.render() + " is not an involution");
    return sigma;
}

struct RestrictedRoot {
    std::vector<int> coords; ///< over the simple restricted roots
    int multiplicity;
};

/// Restricted root system with multiplicities.  Restricted roots are stored
/// in the basis of simple restricted roots; the simple restricted root of a
/// white tau-orbit O is the common a-part of the alpha_i, i in O, so the
/// coordinate of alpha's image along O is the sum of alpha's coefficients
/// over O.
class RestrictedRootSystem {
public:
    RestrictedRootSystem(const SatakeDiagram& s, const RootSystem& complex)
        : orbits_(s.white_orbits()), reduced_(IntMatrix(0, 0)) {
        const int n = s.base().rank();
        const int r = rank();
        const IntMatrix sigma = satake_involution(s);

        std::map<std::vector<int>, int> fibers;
        for (const auto& alpha : complex.roots()) {
            std::vector<int> c(r, 0);
            for (int k = 0; k < r; ++k)
                for (int i : orbits_[k]) c[k] += alpha[i];
            if (std::any_of(c.begin(), c.end(), [](int x) { return x != 0; })) ++fibers[c];
        }
        std::vector<RestrictedRoot> pos;
        for (const auto& [c, m] : fibers)
            if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) pos.push_back({c, m});
        std::sort(pos.begin(), pos.end(), [](const RestrictedRoot& x, const RestrictedRoot& y) {
            int hx = std::accumulate(x.coords.begin(), x.coords.end(), 0);
            int hy = std::accumulate(y.coords.begin(), y.coords.end(), 0);
            return hx != hy ? hx < hy : x.coords < y.coords;
        });
        roots_ = pos;
        for (const auto& p : pos) {
            RestrictedRoot neg = p;
            for (auto& x : neg.coords) x = -x;
            if (fibers.at(neg.coords) != p.multiplicity) throw Error("restricted multiplicities not symmetric");
            roots_.push_back(std::move(neg));
        }

        // Gram matrix of 2*res(alpha_O) = alpha_i + sigma(alpha_i), i = min O.
        std::vector<std::vector<int>> v(r);
        for (int k = 0; k < r; ++k) {
            std::vector<int> e(n, 0);
            e[orbits_[k].front()] = 1;
            auto se = sigma.apply(e);
            for (int i = 0; i < n; ++i) se[i] += e[i];
            v[k] = std::move(se);
        }
        IntMatrix cartan(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                long num = 2 * complex.inner_product(v[i], v[j]);
                long den = complex.inner_product(v[j], v[j]);
                if (num % den != 0) throw Error("non-integral restricted Cartan entry");
                cartan(i, j) = static_cast<int>(num / den);
            }
        reduced_ = RootSystem(std::move(cartan));

        for (const auto& p : roots_) {
            if (reduced_.is_root(p.coords)) continue;
            bool divisible = std::all_of(p.coords.begin(), p.coords.end(), [](int x) { return x % 2 == 0; });
            std::vector<int> half = p.coords;
            for (auto& x : half) x /= 2;
            if (!divisible || !reduced_.is_root(half)) throw Error("restricted roots do not form a root system");
            non_reduced_ = true;
        }
        if (reduced_.roots().size() > roots_.size()) throw Error("restricted root system is missing roots");
    }

    int rank() const noexcept { return static_cast<int>(orbits_.size()); }
    const std::vector<std::vector<int>>& orbits() const noexcept { return orbits_; }

    /// Positive restricted roots (by height) followed by the negatives.
    const std::vector<RestrictedRoot>& roots() const noexcept { return roots_; }
    std::span<const RestrictedRoot> positive_roots() const noexcept { return {roots_.data(), roots_.size() / 2}; }

    int multiplicity(const std::vector<int>& coords) const {
        for (const auto& p : roots_)
            if (p.coords == coords) return p.multiplicity;
        return 0;
    }

    /// Cartan matrix of the simple restricted roots.
    const IntMatrix& cartan() const noexcept { return reduced_.cartan(); }

    /// Root system generated by the simple restricted roots: the whole
    /// system when reduced, the B_n part of BC_n otherwise.  Weyl group and
    /// chamber computations use this.
    const RootSystem& reduced() const noexcept { return reduced_; }

    bool is_non_reduced() const noexcept { return non_reduced_; }

    std::optional<SimpleType> reduced_type() const { return rank() == 0 ? std::nullopt : reduced_.type(); }

    /// "F4", "A2", "BC1", or "-" for rank 0.
    std::string type_name() const {
        if (rank() == 0) return "-";
        const auto t = reduced_type();
        if (!t) return "?";
        if (non_reduced_) return "BC" + std::to_string(t->rank());
        return t->name();
    }

    int dim_n() const {
        int d = 0;
        for (const auto& p : positive_roots()) d += p.multiplicity;
        return d;
    }

private:
    std::vector<std::vector<int>> orbits_;
    std::vector<RestrictedRoot> roots_;
    RootSystem reduced_;
    bool non_reduced_ = false;
};

inline RestrictedRootSystem restricted_root_system(const SatakeDiagram& s) {
    return RestrictedRootSystem(s, RootSystem::of(s.base()));
}

struct CartanDimensions {
    int dim_g;
    int dim_k;
    int dim_p;
    int dim_a;
    int dim_n;
    friend bool operator==(const CartanDimensions&, const CartanDimensions&) = default;
};

inline CartanDimensions cartan_dimensions(const RestrictedRootSystem& r, SimpleType base) {
    CartanDimensions d{};
    d.dim_g = base.dimension();
    d.dim_a = r.rank();
    d.dim_n = r.dim_n();
    d.dim_p = d.dim_a + d.dim_n;
    d.dim_k = d.dim_g - d.dim_p;
    return d;
}

inline CartanDimensions cartan_dimensions(const SatakeDiagram& s) {
    return cartan_dimensions(restricted_root_system(s), s.base());
}

inline std::vector<WeylElement> little_weyl_group(const RestrictedRootSystem& r, std::uint64_t cap = kDefaultWeylCap) {
    if (r.rank() == 0) throw PreconditionError("little Weyl group of a compact form");
    return weyl_group_elements(r.reduced(), cap);
}

/// Number of orbits of -w0 on the simple restricted roots.
inline int a_hyperbolic_rank(const RestrictedRootSystem& r) {
    if (r.rank() == 0) throw PreconditionError("a-hyperbolic rank of a compact form");
    const auto perm = minus_w0_involution(r.reduced());
    int orbits = 0;
    for (int i = 0; i < static_cast<int>(perm.size()); ++i)
        if (perm[i] >= i) ++orbits;
    return orbits;
}

inline int a_hyperbolic_rank(const SatakeDiagram& s) { return a_hyperbolic_rank(restricted_root_system(s)); }

/// A simple real form with all invariants computed from its Satake diagram.
struct RealFormRecord {
    std::string name;
    SimpleType complex_type;
    SatakeDiagram satake;
    CartanDimensions dims;
    int real_rank;
    int a_hyp_rank; ///< 0 for compact forms
    std::shared_ptr<const RestrictedRootSystem> restricted;

    bool is_compact() const noexcept { return real_rank == 0; }
    bool is_split() const noexcept { return real_rank == complex_type.rank(); }
};

inline RealFormRecord make_real_form(std::string name, const SatakeDiagram& s, const RootSystem& complex) {
    auto r = std::make_shared<const RestrictedRootSystem>(s, complex);
    const auto dims = cartan_dimensions(*r, s.base());
    const int ahyp = r->rank() == 0 ? 0 : a_hyperbolic_rank(*r);
    return RealFormRecord{std::move(name), s.base(), s, dims, r->rank(), ahyp, std::move(r)};
}

inline RealFormRecord make_real_form(std::string name, const SatakeDiagram& s) {
    return make_real_form(std::move(name), s, RootSystem::of(s.base()));
}

} // namespace kleinsieve
