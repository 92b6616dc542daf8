#include <gtest/gtest.h>

#include <random>

#include "verlinde/io.hpp"
#include "verlinde/pairs.hpp"
#include "verlinde/verlinde.hpp"

using namespace verlinde;

namespace {

const MukaiVector V0{1, 0, -3};
const MukaiVector W0{1, 6, 3};

}  // namespace

TEST(Verlinde, Number) {
    EXPECT_EQ(verlinde_number(1, 1), 1);
    EXPECT_EQ(verlinde_number(1, 3), 1);
    EXPECT_EQ(verlinde_number(3, 33), 1785);
    EXPECT_EQ(verlinde_number(2, 2), 6);
    EXPECT_THROW(verlinde_number(0, 5), std::domain_error);
}

TEST(Verlinde, SlopeAndDelta) {
    Triple P = slope_triple(V0, W0);
    EXPECT_EQ(P, (Triple{2, -6, -1}));
    EXPECT_EQ(delta(V0, W0), 3);
    EXPECT_EQ(delta({1, 0, -1}, {1, 2, 1}), 1);
    EXPECT_THROW(slope_triple({1, 0, -1}, {1, 0, -1}), std::domain_error);
}

TEST(Verlinde, Trace) {
    EXPECT_EQ(trace(V0, W0, 1), 1785);
    EXPECT_EQ(trace(V0, W0, 3), 3);  // 9/36 * C(12, 1)
    EXPECT_THROW(trace(V0, W0, 2), std::domain_error);
}

TEST(Verlinde, WorkedFullDecomposition) {
    DecompositionTable t = decompose(V0, W0);
    EXPECT_EQ(t.d_v, 3);
    EXPECT_EQ(t.d_w, 33);
    EXPECT_EQ(t.delta, 3);
    EXPECT_EQ(t.summand_rank, 1);
    ASSERT_EQ(t.entries.size(), 2u);
    EXPECT_EQ(t.entries[0], (TableEntry{1, 1, 25}));
    EXPECT_EQ(t.entries[1], (TableEntry{3, 80, 22}));
    EXPECT_EQ(t.total_rank, 1785);
    EXPECT_FALSE(t.conjectural);  // degree-0 shape, odd invariants
}

TEST(Verlinde, WorkedPlusDecomposition) {
    DecompositionTable t = decompose_plus(V0, W0);
    EXPECT_EQ(t.delta, 3);  // a = gcd(t, d_v) / gcd(r, k) = 3
    ASSERT_TRUE(t.has_index_pair);
    EXPECT_EQ(t.index_pair.first, 1);
    EXPECT_EQ(t.index_pair.second, 2);
    EXPECT_EQ(t.summand_rank, 1);
    ASSERT_EQ(t.entries.size(), 2u);
    EXPECT_EQ(t.entries[0], (TableEntry{1, 1, 25}));
    EXPECT_EQ(t.entries[1], (TableEntry{3, 80, 22}));
    EXPECT_EQ(t.total_rank, 1785);
}

TEST(Verlinde, WorkedMinusDecomposition) {
    MukaiVector v{3, 0, -1}, w{3, 6, 1};
    DecompositionTable t = decompose_minus(v, w);
    EXPECT_EQ(t.delta, 3);  // b = gcd(r, k') = 3
    ASSERT_TRUE(t.has_index_pair);
    EXPECT_EQ(t.index_pair.first, 1);
    EXPECT_EQ(t.index_pair.second, -2);
    EXPECT_EQ(t.summand_rank, 1);
    ASSERT_EQ(t.entries.size(), 2u);
    EXPECT_EQ(t.entries[0], (TableEntry{1, 1, 25}));
    EXPECT_EQ(t.entries[1], (TableEntry{3, 80, 22}));
    EXPECT_EQ(t.total_rank, 1785);
    EXPECT_FALSE(t.conjectural);

    // worked pair: b = gcd(1, 6) = 1, one row carrying the whole rank
    DecompositionTable s = decompose_minus(V0, W0);
    EXPECT_EQ(s.delta, 1);
    ASSERT_EQ(s.entries.size(), 1u);
    EXPECT_EQ(s.entries[0], (TableEntry{1, 1, 1785}));

    EXPECT_THROW(decompose_minus({1, 2, 1}, {1, 2, -9}), std::domain_error);
}

TEST(Verlinde, TrivialTorsionSingleRow) {
    DecompositionTable t = decompose({1, 0, -1}, {1, 2, 1});
    EXPECT_EQ(t.delta, 1);
    ASSERT_EQ(t.entries.size(), 1u);
    EXPECT_EQ(t.entries[0].count, 1);
    EXPECT_EQ(t.entries[0].multiplicity, t.total_rank / t.summand_rank);
}

TEST(Verlinde, ThetaPullback) {
    EXPECT_EQ(theta_pullback_class(V0, W0), (NsClass{18, -6, -3}));
    EXPECT_TRUE(theta_pullback_consistent(V0, W0));
    std::mt19937_64 rng(51);
    for (int i = 0; i < 200; ++i) {
        PairVW p = random_orthogonal_pair(rng);
        ASSERT_TRUE(theta_pullback_consistent(p.v, p.w));
    }
}

TEST(Verlinde, Duality) {
    auto rep = duality_check(V0, W0);
    EXPECT_TRUE(rep.ok()) << rep.failure();
    EXPECT_EQ(rep.status, SDStatus::open);

    auto rep2 = duality_check({1, 0, -1}, {1, 2, 1});
    EXPECT_TRUE(rep2.ok()) << rep2.failure();
    EXPECT_EQ(rep2.status, SDStatus::iso_or_zero);

    std::mt19937_64 rng(52);
    for (int i = 0; i < 100; ++i) {
        PairVW p = random_orthogonal_pair(rng);
        auto r = duality_check(p.v, p.w);
        ASSERT_TRUE(r.ok()) << r.failure();
    }
}

TEST(Verlinde, TwistInvariance) {
    for (long long ell = -3; ell <= 3; ++ell)
        EXPECT_TRUE(twist_invariance_check(V0, W0, ell)) << ell;
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<long long> ed(-4, 4);
    for (int i = 0; i < 100; ++i) {
        PairVW p = random_orthogonal_pair(rng);
        ASSERT_TRUE(twist_invariance_check(p.v, p.w, ed(rng)));
    }
}

TEST(Verlinde, TraceOracleRoundTrip) {
    std::mt19937_64 rng(54);
    for (int i = 0; i < 40; ++i) {
        PairVW p = random_degree0_pair(rng);
        DecompositionTable t = multiplicity_from_traces(p.v, p.w);
        for (long long d : divisors(t.delta))
            ASSERT_EQ(trace_from_decomposition(t, d), trace(p.v, p.w, d))
                << "[" << p.v.r << ",0," << p.v.chi << "] d=" << d;
    }
}

TEST(Verlinde, TraceOracleWorkedPair) {
    MukaiVector v{3, 0, -1}, w{3, 6, 1};
    DecompositionTable t = multiplicity_from_traces(v, w);
    EXPECT_EQ(t.delta, 3);
    EXPECT_EQ(t.entries[0].multiplicity, 25);
    EXPECT_EQ(t.entries[1].multiplicity, 22);
    EXPECT_EQ(trace_from_decomposition(t, 3), trace(v, w, 3));
    EXPECT_EQ(trace_from_decomposition(t, 1), 1785);
}

TEST(Verlinde, MultiplicityErrors) {
    EXPECT_THROW(multiplicity(V0, W0, 2), std::domain_error);
    EXPECT_THROW(multiplicity({1, 0, -1}, {1, 0, -1}, 1), std::domain_error);
    EXPECT_EQ(multiplicity(V0, W0, 3), 22);
}

TEST(Verlinde, JsonSchema) {
    json j = to_json(decompose(V0, W0));
    EXPECT_EQ(j["variant"], "full");
    EXPECT_EQ(j["v"], json::array({1, 0, -3}));
    EXPECT_EQ(j["d_v"], "3");
    EXPECT_EQ(j["delta"], 3);
    EXPECT_EQ(j["entries"].size(), 2u);
    EXPECT_EQ(j["entries"][1]["multiplicity"], "22");
    EXPECT_EQ(j["total_rank"], "1785");
    EXPECT_TRUE(j["checks"]["orthogonal"].get<bool>());
    EXPECT_FALSE(j.contains("index_pair"));

    json jp = to_json(decompose_plus(V0, W0));
    EXPECT_EQ(jp["index_pair"], json::array({"1", "2"}));

    std::string csv = table_to_csv(decompose(V0, W0));
    EXPECT_EQ(csv, "order,count,multiplicity\n1,1,25\n3,80,22\n");
}

TEST(Verlinde, DegreeZeroFamilyIntegralNonnegative) {
    auto family = degree0_pairs(48);
    ASSERT_GT(family.size(), 20u);
    for (const auto& p : family) {
        DecompositionTable t = decompose(p.v, p.w);  // throws on violation
        EXPECT_FALSE(t.conjectural);
        for (const auto& e : t.entries) EXPECT_GE(e.multiplicity, 0);
    }
}
