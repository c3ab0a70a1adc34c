#include <kleinsieve/rootsys.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"

using namespace kleinsieve;

namespace {

SimpleType T(const char* s) { return SimpleType::parse(s); }

oracle::Vec to_euclidean(const Root& c, const oracle::Euclidean& e) {
    oracle::Vec v(e.simple.front().size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) v = oracle::add(v, e.simple[i], c[i]);
    return v;
}

// |W| by closing the set of reflection matrices under multiplication.
std::size_t matrix_closure_order(const IntMatrix& cartan) {
    const std::size_t n = cartan.rows();
    std::vector<IntMatrix> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(simple_reflection(cartan, static_cast<int>(i)));
    std::set<IntMatrix> seen{IntMatrix::identity(n)};
    std::vector<IntMatrix> frontier{IntMatrix::identity(n)};
    while (!frontier.empty()) {
        std::vector<IntMatrix> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                auto p = g * m;
                if (seen.insert(p).second) next.push_back(std::move(p));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

// |W| = |W theta| * |Stab(theta)|; theta is dominant so its stabilizer is the
// parabolic subgroup on the nodes orthogonal to it.  Recurse on components.
std::uint64_t stabilizer_chain_order(const IntMatrix& cartan) {
    if (cartan.rows() == 0) return 1;
    const RootSystem rs(cartan);
    std::uint64_t order = 1;
    for (const auto& comp : rs.components()) {
        const IntMatrix sub = cartan.submatrix(comp.nodes);
        const RootSystem crs(sub);
        const Root& theta = crs.highest_root();
        const long len = crs.inner_product(theta, theta);
        std::uint64_t orbit = 0;
        for (const auto& r : crs.roots()) orbit += crs.inner_product(r, r) == len;
        std::vector<int> perp;
        for (int i = 0; i < crs.rank(); ++i)
            if (crs.coroot_pairing(theta, i) == 0) perp.push_back(i);
        order *= orbit * stabilizer_chain_order(sub.submatrix(perp));
    }
    return order;
}

bool is_automorphism(const IntMatrix& a, const std::vector<int>& p) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j)
            if (a(p[i], p[j]) != a(i, j)) return false;
    return true;
}

} // namespace

TEST(SimpleType, CanonicalizesLowRankCoincidences) {
    EXPECT_EQ(SimpleType::make(Family::B, 1), T("A1"));
    EXPECT_EQ(SimpleType::make(Family::C, 1), T("A1"));
    EXPECT_EQ(SimpleType::make(Family::C, 2), T("B2"));
    EXPECT_EQ(SimpleType::make(Family::D, 3), T("A3"));
    EXPECT_THROW(SimpleType::make(Family::D, 2), InvalidType);
    EXPECT_THROW(SimpleType::make(Family::E, 5), InvalidType);
    EXPECT_THROW(SimpleType::make(Family::F, 3), InvalidType);
    EXPECT_THROW(SimpleType::make(Family::G, 3), InvalidType);
    EXPECT_THROW(SimpleType::make(Family::A, 0), InvalidType);
    EXPECT_THROW(SimpleType::parse("X4"), InvalidType);
    EXPECT_THROW(SimpleType::parse("E"), InvalidType);
}

TEST(SimpleType, DimensionMatchesRootCount) {
    for (auto t : oracle::all_types()) {
        const auto e = oracle::euclidean(t);
        EXPECT_EQ(t.dimension(), static_cast<int>(e.roots.size()) + t.rank()) << t;
    }
}

TEST(SemisimpleType, ParseAndCanonicalOrder) {
    const auto s = SemisimpleType::parse("A1+B4+A1");
    EXPECT_EQ(s.name(), "B4+2A1");
    EXPECT_EQ(s, SemisimpleType::parse("2A1+B4"));
    EXPECT_EQ(s.rank(), 6);
    EXPECT_EQ(s.dimension(), 36 + 6);
    EXPECT_EQ(SemisimpleType::parse("C2").name(), "B2");
    EXPECT_THROW(SemisimpleType::parse(""), InvalidType);
}

TEST(CartanMatrix, SmallCases) {
    EXPECT_EQ(cartan_matrix(T("A1")), (IntMatrix{{2}}));
    EXPECT_EQ(cartan_matrix(T("G2")), (IntMatrix{{2, -1}, {-3, 2}}));
    const auto d4 = cartan_matrix(T("D4"));
    for (int j : {0, 2, 3}) EXPECT_EQ(d4(1, j), -1);
    EXPECT_EQ(d4(0, 2), 0);
    EXPECT_EQ(d4(0, 3), 0);
    EXPECT_EQ(d4(2, 3), 0);
}

// The Cartan matrix and the generated roots agree with Bourbaki's explicit
// Euclidean model, for every type up to rank 8.
TEST(RootSystem, MatchesEuclideanModel) {
    for (auto t : oracle::all_types()) {
        const auto e = oracle::euclidean(t);
        const auto a = cartan_matrix(t);
        for (int i = 0; i < t.rank(); ++i)
            for (int j = 0; j < t.rank(); ++j)
                ASSERT_EQ(a(i, j), 2 * oracle::dot(e.simple[i], e.simple[j]) / oracle::dot(e.simple[j], e.simple[j]))
                    << t << " " << i << "," << j;
        const RootSystem rs(a);
        std::set<oracle::Vec> mapped;
        for (const auto& r : rs.roots()) mapped.insert(to_euclidean(r, e));
        EXPECT_EQ(mapped, e.roots) << t;
        EXPECT_EQ(rs.roots().size(), e.roots.size()) << t;
    }
}

TEST(RootSystem, KnownRootCounts) {
    const std::map<std::string, std::size_t> expected{{"A2", 6}, {"F4", 48}, {"E6", 72}, {"E7", 126}, {"E8", 240}};
    for (const auto& [name, count] : expected) EXPECT_EQ(RootSystem::of(T(name.c_str())).roots().size(), count) << name;
}

TEST(RootSystem, RootsAreSignCoherentAndClosedUnderNegation) {
    for (auto t : oracle::all_types()) {
        const auto rs = RootSystem::of(t);
        ASSERT_EQ(rs.roots().size() % 2, 0u);
        for (const auto& r : rs.roots()) {
            const bool nonneg = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
            const bool nonpos = std::all_of(r.begin(), r.end(), [](int x) { return x <= 0; });
            ASSERT_TRUE(nonneg != nonpos) << t;
            Root m = r;
            for (auto& x : m) x = -x;
            ASSERT_TRUE(rs.is_root(m)) << t;
        }
        for (const auto& r : rs.positive_roots()) ASSERT_TRUE(std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; }));
    }
}

TEST(RootSystem, SymmetrizerGivesSymmetricForm) {
    for (auto t : oracle::all_types()) {
        const auto a = cartan_matrix(t);
        const auto d = symmetrizer(a);
        const auto e = oracle::euclidean(t);
        for (int i = 0; i < t.rank(); ++i)
            for (int j = 0; j < t.rank(); ++j) {
                ASSERT_EQ(a(i, j) * d[j], a(j, i) * d[i]) << t;
                // proportional to the Euclidean form
                ASSERT_EQ(a(i, j) * d[j] * oracle::dot(e.simple[0], e.simple[0]),
                          2 * oracle::dot(e.simple[i], e.simple[j]) * d[0])
                    << t;
            }
        EXPECT_EQ(*std::min_element(d.begin(), d.end()), 1) << t;
    }
}

TEST(RootSystem, RejectsNonFiniteCartanMatrices) {
    EXPECT_THROW(RootSystem(extended_diagram(T("A2")).cartan), InvalidType);
    EXPECT_THROW(RootSystem(extended_diagram(T("E8")).cartan), InvalidType);
    EXPECT_THROW(RootSystem(extended_diagram(T("B3")).cartan), InvalidType);
    EXPECT_THROW(RootSystem(IntMatrix{{2, -1}, {-4, 2}}), InvalidType);
    EXPECT_THROW(RootSystem(IntMatrix{{2, -1}, {0, 2}}), InvalidType);
    EXPECT_THROW(RootSystem(IntMatrix{{3}}), InvalidType);
}

TEST(Components, IdentifiesEveryTypeUnderRelabelling) {
    std::mt19937 rng(7);
    for (auto t : oracle::all_types()) {
        const auto a = cartan_matrix(t);
        const int n = t.rank();
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<int> p(n);
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            IntMatrix b(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) b(p[i], p[j]) = a(i, j);
            const auto comps = components(b);
            ASSERT_EQ(comps.size(), 1u);
            EXPECT_EQ(comps.front().type, t);
        }
    }
}

TEST(Components, SplitsReducibleDiagrams) {
    const auto a = cartan_matrix(T("E8"));
    auto comps = components(a, {0, 1, 3, 4, 6, 7});
    std::vector<std::string> names;
    for (const auto& c : comps) names.push_back(c.type.name());
    std::sort(names.begin(), names.end());
    EXPECT_EQ(names, (std::vector<std::string>{"A1", "A2", "A3"}));
}

TEST(WeylGroup, OrderAgreesAcrossThreeStrategies) {
    for (auto t : oracle::all_types(4)) {
        const auto rs = RootSystem::of(t);
        const auto elems = weyl_group_elements(rs);
        EXPECT_EQ(elems.size(), t.weyl_order()) << t;
        EXPECT_EQ(matrix_closure_order(rs.cartan()), t.weyl_order()) << t;
        EXPECT_EQ(stabilizer_chain_order(rs.cartan()), t.weyl_order()) << t;
        std::set<IntMatrix> distinct;
        for (const auto& w : elems) distinct.insert(w.matrix());
        EXPECT_EQ(distinct.size(), elems.size()) << t;
    }
}

TEST(WeylGroup, StabilizerChainMatchesProductFormulaUpToRank8) {
    for (auto t : oracle::all_types()) EXPECT_EQ(stabilizer_chain_order(cartan_matrix(t)), t.weyl_order()) << t;
}

TEST(WeylGroup, SmallExamples) {
    EXPECT_EQ(weyl_group_elements(RootSystem::of(T("A1"))).size(), 2u);
    EXPECT_EQ(weyl_group_elements(RootSystem::of(T("A2"))).size(), 6u);
    EXPECT_EQ(weyl_group_elements(RootSystem::of(T("F4"))).size(), 1152u);
}

TEST(WeylGroup, ElementsPermuteRootsAndWordsMatchMatrices) {
    for (auto t : {T("B3"), T("G2"), T("A3")}) {
        const auto rs = RootSystem::of(t);
        const auto elems = weyl_group_elements(rs);
        EXPECT_TRUE(elems.front().word().empty());
        for (const auto& w : elems) {
            EXPECT_EQ(WeylElement::from_word(rs.cartan(), w.word()).matrix(), w.matrix());
            std::set<Root> image;
            for (const auto& r : rs.roots()) image.insert(w.apply(r));
            EXPECT_EQ(image, std::set<Root>(rs.roots().begin(), rs.roots().end()));
        }
    }
}

TEST(WeylGroup, CapIsEnforced) {
    EXPECT_THROW(weyl_group_elements(RootSystem::of(T("E8"))), CapExceeded);
    EXPECT_THROW(weyl_group_elements(RootSystem::of(T("A3")), 23), CapExceeded);
    EXPECT_EQ(weyl_group_elements(RootSystem::of(T("A3")), 24).size(), 24u);
}

TEST(LongestElement, A1IsTheSimpleReflection) {
    const auto w0 = longest_element(RootSystem::of(T("A1")));
    EXPECT_EQ(w0.word(), std::vector<int>{0});
    EXPECT_EQ(w0.matrix(), (IntMatrix{{-1}}));
}

// Brute force over W(A2): the unique element sending every positive root
// to a negative one.
TEST(LongestElement, A2AgainstBruteForce) {
    const auto rs = RootSystem::of(T("A2"));
    const auto w0 = longest_element(rs);
    int found = 0;
    for (const auto& w : weyl_group_elements(rs)) {
        bool all_neg = true;
        for (const auto& r : rs.positive_roots()) {
            auto img = w.apply(r);
            all_neg = all_neg && std::all_of(img.begin(), img.end(), [](int x) { return x <= 0; });
        }
        if (all_neg) {
            ++found;
            EXPECT_EQ(w.matrix(), w0.matrix());
        }
    }
    EXPECT_EQ(found, 1);
    EXPECT_EQ(w0.length(), 3u);
    EXPECT_EQ(w0.matrix(), (IntMatrix{{0, -1}, {-1, 0}}));
}

TEST(LongestElement, PropertiesForAllTypes) {
    for (auto t : oracle::all_types()) {
        const auto rs = RootSystem::of(t);
        const auto w0 = longest_element(rs);
        EXPECT_EQ(w0.length(), rs.positive_roots().size()) << t;
        EXPECT_EQ(w0.matrix() * w0.matrix(), IntMatrix::identity(t.rank())) << t;
        EXPECT_EQ(WeylElement::from_word(rs.cartan(), w0.word()).matrix(), w0.matrix()) << t;
        for (const auto& r : rs.positive_roots()) {
            auto img = w0.apply(r);
            ASSERT_TRUE(std::all_of(img.begin(), img.end(), [](int x) { return x <= 0; })) << t;
        }
    }
    EXPECT_EQ(longest_element(RootSystem::of(T("F4"))).matrix(), -IntMatrix::identity(4));
}

TEST(MinusW0, KnownInvolutions) {
    auto perm = [](const char* s) { return minus_w0_involution(RootSystem::of(T(s))); };
    EXPECT_EQ(perm("E7"), (std::vector<int>{0, 1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(perm("E6"), (std::vector<int>{5, 1, 4, 3, 2, 0}));
    EXPECT_EQ(perm("A1"), (std::vector<int>{0}));
    EXPECT_EQ(perm("A4"), (std::vector<int>{3, 2, 1, 0}));
    EXPECT_EQ(perm("D5"), (std::vector<int>{0, 1, 2, 4, 3}));
    EXPECT_EQ(perm("D4"), (std::vector<int>{0, 1, 2, 3}));
}

TEST(MinusW0, IsAnInvolutiveDiagramAutomorphism) {
    for (auto t : oracle::all_types()) {
        const auto p = minus_w0_involution(RootSystem::of(t));
        for (int i = 0; i < t.rank(); ++i) EXPECT_EQ(p[p[i]], i) << t;
        EXPECT_TRUE(is_automorphism(cartan_matrix(t), p)) << t;
    }
}

TEST(ExtendedDiagram, Examples) {
    const auto a1 = extended_diagram(T("A1"));
    EXPECT_EQ(a1.cartan, (IntMatrix{{2, -2}, {-2, 2}}));

    const auto g2 = extended_diagram(T("G2"));
    EXPECT_EQ(g2.highest_root, (Root{3, 2}));
    // chain short - long - affine
    EXPECT_EQ(g2.cartan(2, 1), -1);
    EXPECT_EQ(g2.cartan(1, 2), -1);
    EXPECT_EQ(g2.cartan(2, 0), 0);

    const auto e8 = extended_diagram(T("E8"));
    for (int j = 0; j < 8; ++j) EXPECT_EQ(e8.cartan(8, j), j == 7 ? -1 : 0);
    EXPECT_EQ(e8.highest_root, (Root{2, 3, 4, 6, 5, 4, 3, 2}));
}

// The marks (theta's coefficients, 1 on the affine node) span the left kernel.
TEST(ExtendedDiagram, MarksAreANullVector) {
    for (auto t : oracle::all_types()) {
        const auto ext = extended_diagram(t);
        const int n = t.rank();
        ASSERT_EQ(static_cast<int>(ext.cartan.rows()), n + 1);
        EXPECT_EQ(ext.affine_node, n);
        std::vector<int> marks = ext.highest_root;
        marks.push_back(1);
        for (int j = 0; j <= n; ++j) {
            int s = 0;
            for (int i = 0; i <= n; ++i) s += marks[i] * ext.cartan(i, j);
            EXPECT_EQ(s, 0) << t << " column " << j;
        }
    }
}

TEST(DiagramAutomorphisms, GroupOrders) {
    auto order = [](const char* s) { return diagram_automorphisms(T(s)).size(); };
    EXPECT_EQ(order("D4"), 6u);
    EXPECT_EQ(order("E6"), 2u);
    EXPECT_EQ(order("B3"), 1u);
    EXPECT_EQ(order("A1"), 1u);
    EXPECT_EQ(order("A5"), 2u);
    EXPECT_EQ(order("D6"), 2u);
    EXPECT_EQ(order("E8"), 1u);
    EXPECT_EQ(order("G2"), 1u);
    const auto d4 = diagram_automorphisms(T("D4"));
    for (const auto& p : d4) EXPECT_EQ(p[1], 1);
}

// Brute force over all n! permutations.
TEST(DiagramAutomorphisms, AgreesWithExhaustiveSearch) {
    for (auto t : oracle::all_types()) {
        const auto a = cartan_matrix(t);
        std::vector<int> p(t.rank());
        std::iota(p.begin(), p.end(), 0);
        std::vector<std::vector<int>> brute;
        do {
            if (is_automorphism(a, p)) brute.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        EXPECT_EQ(diagram_automorphisms(a), brute) << t;
    }
}
