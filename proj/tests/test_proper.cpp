#include <kleinsieve/proper.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixture.hpp"
#include "proper_oracle.hpp"

using namespace kleinsieve;
using fixture::catalog;

namespace {

PropernessQuery query(const char* ambient, std::vector<RationalVector> ah, std::vector<RationalVector> al) {
    return {ambient, catalog().at(ambient).restricted, std::move(ah), std::move(al)};
}

RationalVector R(std::initializer_list<int> xs) {
    RationalVector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

std::vector<RationalVector> standard_basis(std::size_t n) {
    std::vector<RationalVector> out;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector v(n, Rational(0));
        v[i] = 1;
        out.push_back(v);
    }
    return out;
}

} // namespace

TEST(Properness, TrivialCases) {
    const auto n = static_cast<std::size_t>(catalog().at("g2(2)").real_rank);
    const auto r0 = properness_test(query("g2(2)", {}, standard_basis(n)));
    EXPECT_TRUE(r0.proper);
    EXPECT_FALSE(r0.witness);
    const auto full = properness_test(query("g2(2)", standard_basis(n), standard_basis(n)));
    EXPECT_FALSE(full.proper);
    ASSERT_TRUE(full.witness);
    EXPECT_TRUE(full.witness->word().empty());
    const auto one = properness_test(query("sl(3,R)", {R({1, 0})}, {R({1, 0})}));
    ASSERT_TRUE(one.witness);
    EXPECT_TRUE(one.witness->word().empty());
}

TEST(Properness, A2FixedLines) {
    // line fixed by s1 is spanned by the second fundamental weight, and vice versa
    const auto& cartan = catalog().at("sl(3,R)").restricted->cartan();
    const std::vector<RationalVector> ah{R({1, 2})}, al{R({2, 1})};
    EXPECT_EQ(oracle::weyl_group(cartan).size(), 6u);
    EXPECT_EQ(oracle::mul(simple_reflection(cartan, 0), ah[0]), ah[0]);
    EXPECT_EQ(oracle::mul(simple_reflection(cartan, 1), al[0]), al[0]);
    const auto res = properness_test(query("sl(3,R)", ah, al));
    EXPECT_EQ(res.proper, oracle::proper(cartan, ah, al));
    EXPECT_FALSE(res.proper);
    ASSERT_TRUE(res.witness);
    EXPECT_TRUE(oracle::meets(res.witness->matrix(), ah, al));
    // a generic line is moved off a_h by every element
    const std::vector<RationalVector> generic{R({1, 3})};
    EXPECT_TRUE(properness_test(query("sl(3,R)", ah, generic)).proper);
    EXPECT_TRUE(oracle::proper(cartan, ah, generic));
}

TEST(Properness, AgreesWithBruteForceOracle) {
    std::mt19937 rng(20261015);
    std::uniform_int_distribution<int> entry(-3, 3), denom(1, 3);
    const std::vector<const char*> ambients{"sl(2,R)", "su(1,2)",  "f4(-20)", "sl(3,R)", "e6(-26)", "so(2,5)",
                                            "g2(2)",   "su(2,2)",  "sl(4,R)", "so(3,4)", "sp(6,R)", "e7(-25)",
                                            "su(3,3)", "so(3,5)"};
    int tested = 0, not_proper = 0;
    for (const char* name : ambients) {
        const auto& rec = catalog().at(name);
        const auto n = static_cast<std::size_t>(rec.real_rank);
        ASSERT_LE(n, 3u) << name;
        const auto group = oracle::weyl_group(rec.restricted->cartan());
        ASSERT_EQ(group.size(), little_weyl_group(*rec.restricted).size()) << name;
        auto random_basis = [&](std::size_t dim) {
            for (;;) {
                std::vector<RationalVector> b;
                for (std::size_t k = 0; k < dim; ++k) {
                    RationalVector v;
                    for (std::size_t i = 0; i < n; ++i) v.push_back(Rational(entry(rng), denom(rng)));
                    b.push_back(v);
                }
                if (oracle::rank(b) == dim) return b;
            }
        };
        std::uniform_int_distribution<std::size_t> dimension(0, n);
        for (int trial = 0; trial < 100; ++trial) {
            const auto ah = random_basis(dimension(rng));
            // lines through lattice points hit special positions often enough
            const auto al = random_basis(dimension(rng));
            const auto res = properness_test(query(name, ah, al));
            const bool expect = oracle::proper(rec.restricted->cartan(), ah, al);
            ASSERT_EQ(res.proper, expect) << name << " trial " << trial;
            EXPECT_EQ(properness_test(query(name, al, ah)).proper, expect) << name << " swapped";
            if (!res.proper) {
                ++not_proper;
                ASSERT_TRUE(res.witness);
                EXPECT_TRUE(oracle::meets(res.witness->matrix(), ah, al));
            }
            ++tested;
        }
    }
    EXPECT_GE(tested, 1000);
    EXPECT_GT(not_proper, 100);
    EXPECT_LT(not_proper, tested - 100);
}

TEST(Properness, WeylMovesAndScalingPreserveVerdict) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-2, 2), scale(1, 5);
    for (const char* name : {"sl(3,R)", "g2(2)", "so(3,4)", "sp(6,R)"}) {
        const auto& rec = catalog().at(name);
        const auto n = static_cast<std::size_t>(rec.real_rank);
        const auto w0 = longest_element(rec.restricted->reduced());
        for (int trial = 0; trial < 30; ++trial) {
            RationalVector a(n), b(n);
            for (std::size_t i = 0; i < n; ++i) a[i] = entry(rng), b[i] = entry(rng);
            if (oracle::rank({a}) == 0 || oracle::rank({b}) == 0) continue;
            const bool verdict = properness_test(query(name, {a}, {b})).proper;
            EXPECT_EQ(properness_test(query(name, {a}, {kleinsieve::apply(w0.matrix(), b)})).proper, verdict) << name;
            RationalVector scaled = b;
            const Rational factor(-scale(rng), scale(rng));
            for (auto& x : scaled) x *= factor;
            EXPECT_EQ(properness_test(query(name, {a}, {scaled})).proper, verdict) << name;
        }
    }
}

TEST(Properness, RejectsBadInput) {
    EXPECT_THROW(properness_test(query("sl(3,R)", {R({1, 0, 0})}, {})), PreconditionError);
    EXPECT_THROW(properness_test(query("sl(3,R)", {R({1, 1}), R({2, 2})}, {})), PreconditionError);
    EXPECT_THROW(properness_test(query("sl(3,R)", {R({1, 0})}, {R({0, 1})}), 5), CapExceeded);
}

TEST(Properness, DimensionOverflowIsAWitness) {
    const auto res = properness_test(query("sl(3,R)", {R({1, 0}), R({0, 1})}, {R({1, 1})}));
    EXPECT_FALSE(res.proper);
    ASSERT_TRUE(res.witness);
    EXPECT_EQ(res.witness->length(), 0u);
}

TEST(DimensionCondition, Examples) {
    EXPECT_TRUE(dimension_condition(42, 14, 28));
    EXPECT_FALSE(dimension_condition(42, 14, 27));
    EXPECT_TRUE(dimension_condition(0, 0, 0));
    EXPECT_THROW(dimension_condition(-1, 0, 0), PreconditionError);
    const auto& g = catalog().at("e6(6)");
    EXPECT_TRUE(dimension_condition(g.dims.dim_p, catalog().at("so(2,7)").dims.dim_p, catalog().at("f4(4)").dims.dim_p));
}

TEST(QueryFile, Parsing) {
    using nlohmann::json;
    json doc{{"format", "kleinsieve-proper-query"},
             {"version", 1},
             {"ambient", "g2(2)"},
             {"a_h", json::array({json::array({"1/2", 0})})},
             {"a_l", json::array()}};
    const auto q = PropernessQuery::from_json(doc, catalog());
    EXPECT_EQ(q.a_h.front().front(), Rational(1, 2));
    EXPECT_TRUE(properness_test(q).proper);

    auto bad = doc;
    bad["ambient"] = "g2(-14)";
    EXPECT_THROW(PropernessQuery::from_json(bad, catalog()), DataError);
    bad = doc;
    bad["ambient"] = "nope";
    EXPECT_THROW(PropernessQuery::from_json(bad, catalog()), DataError);
    bad = doc;
    bad["a_h"] = json::array({json::array({"x", 0})});
    EXPECT_THROW(PropernessQuery::from_json(bad, catalog()), DataError);
    bad = doc;
    bad["a_h"] = json{{1, 0, 0}};
    EXPECT_THROW(PropernessQuery::from_json(bad, catalog()), DataError);
    bad = doc;
    bad["extra"] = 1;
    EXPECT_THROW(PropernessQuery::from_json(bad, catalog()), DataError);
}
