#include <gtest/gtest.h>

#include "kedge/arithmetic.hpp"
#include "kedge/errors.hpp"
#include "oracles/brute_force.hpp"

namespace kedge {
namespace {

TEST(Triangular, Examples) {
	EXPECT_EQ(triangular(0), 0u);
	EXPECT_EQ(triangular(1), 0u);
	EXPECT_EQ(triangular(4), 6u);
	EXPECT_EQ(triangular(100000), 4999950000u);
}

TEST(MaxTriangularLe, Examples) {
	EXPECT_EQ(max_triangular_le(5), (TriangularSplit{3, 2}));
	EXPECT_EQ(max_triangular_le(6), (TriangularSplit{4, 0}));
	EXPECT_EQ(max_triangular_le(0), (TriangularSplit{1, 0}));
}

TEST(MaxTriangularLe, MatchesLinearScan) {
	for (std::uint64_t k = 0; k <= 5000; ++k) {
		std::uint64_t k0 = 0;
		while (oracle::tri(k0 + 1) <= k)
			++k0;
		const auto s = max_triangular_le(k);
		ASSERT_EQ(s.k0, k0) << k;
		ASSERT_EQ(s.r, k - oracle::tri(k0)) << k;
		ASSERT_LT(s.r, s.k0 == 0 ? 1 : s.k0) << k;
	}
}

TEST(Eureka, FrozenAgainstBruteForce) {
	// Values fixed by the triple-loop oracle.
	EXPECT_EQ(eureka(0), (EurekaTriple{0, 0, 0}));
	EXPECT_EQ(eureka(4), (EurekaTriple{3, 2, 0}));
	EXPECT_EQ(eureka(10), (EurekaTriple{4, 3, 2}));
	for (std::uint64_t k = 0; k <= 400; ++k) {
		const auto [a, b, c] = *oracle::eureka(k);
		ASSERT_EQ(eureka(k), (EurekaTriple{a, b, c})) << k;
	}
}

TEST(Eureka, OrderedAndSums) {
	for (std::uint64_t k = 0; k <= 20000; ++k) {
		const auto e = eureka(k);
		ASSERT_GE(e.k0, e.k1);
		ASSERT_GE(e.k1, e.k2);
		ASSERT_EQ(triangular(e.k0) + triangular(e.k1) + triangular(e.k2), k);
	}
}

TEST(Thresholds, KOne) {
	const Thresholds t = thresholds_for(1);
	EXPECT_EQ(t.p_k(), 4);
	EXPECT_EQ(t.ramsey_bound(), 4);
	EXPECT_EQ(t.claim1_bound(), 243);
	EXPECT_EQ(t.claim2_bound(), 9);
	EXPECT_EQ(t.b_cap(), 252);
	EXPECT_EQ(t.d0(), 508);
	EXPECT_EQ(t.d0_u64(), std::uint64_t{508});
}

TEST(Thresholds, KTwo) {
	const Thresholds t = thresholds_for(2);
	EXPECT_EQ(t.p_k(), 16);
	EXPECT_EQ(t.final_branch_floor(), 16);
	EXPECT_FALSE(t.b_cap_u64().has_value()); // 15^17 needs 67 bits
	EXPECT_EQ(t.b_cap(), boost::multiprecision::pow(BigInt(15), 17) + 225);
}

TEST(Thresholds, OverrideFeedsDerivedValues) {
	ThresholdOverrides o;
	o.p_k = 2;
	const Thresholds t = thresholds_for(1, o);
	EXPECT_EQ(t.b_cap(), 2);
	EXPECT_EQ(t.d0(), 2 * 2 + 4);
	EXPECT_TRUE(t.overridden());
}

TEST(Thresholds, OverrideD0Direct) {
	ThresholdOverrides o;
	o.d0 = 3;
	o.p_k = 2;
	o.ramsey_bound = 2;
	const Thresholds t = thresholds_for(2, o);
	EXPECT_EQ(t.d0_u64(), std::uint64_t{3});
	EXPECT_EQ(t.ramsey_bound_u64(), std::uint64_t{2});
}

TEST(Thresholds, OverridesMustBePositive) {
	ThresholdOverrides o;
	o.p_k = 0;
	EXPECT_THROW(thresholds_for(1, o), PreconditionError);
}

TEST(Thresholds, LargeKStaysLazy) {
	const Thresholds t = thresholds_for(10);
	EXPECT_EQ(t.p_k(), BigInt(1) << 20);
	EXPECT_FALSE(t.d0_u64().has_value());
	EXPECT_FALSE(t.claim1_bound_u64().has_value());
}

TEST(Thresholds, MonotoneInK) {
	for (std::uint64_t k = 1; k < 6; ++k) {
		const Thresholds a = thresholds_for(k), b = thresholds_for(k + 1);
		EXPECT_LT(a.p_k(), b.p_k());
		EXPECT_LT(a.ramsey_bound(), b.ramsey_bound());
		EXPECT_LT(a.b_cap(), b.b_cap());
		EXPECT_LT(a.d0(), b.d0());
		EXPECT_EQ(a.d0() - 2 * a.b_cap(), a.final_branch_floor());
	}
}

TEST(LocalTreewidthBound, GeometricSum) {
	EXPECT_EQ(local_treewidth_bound(0, 3, 2), 1);
	// base = 2 + 3*1 = 5: 1 + 5 + 25
	EXPECT_EQ(local_treewidth_bound(2, 2, 2), 31);
}

TEST(Saturating, Clamp) {
	EXPECT_EQ(saturating_pow(2, 10), 1024u);
	EXPECT_EQ(saturating_pow(10, 40), std::numeric_limits<std::uint64_t>::max());
	EXPECT_EQ(saturating_mul(0, 99), 0u);
}

} // namespace
} // namespace kedge
