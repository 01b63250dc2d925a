#include <gtest/gtest.h>

#include "kedge/decomposer.hpp"
#include "kedge/encodings.hpp"
#include "kedge/errors.hpp"
#include "kedge/random_graphs.hpp"
#include "oracles/brute_force.hpp"

namespace kedge {
namespace {

using oracle::complete;
using oracle::path;

SolverConfig tiny(std::uint64_t k, std::uint64_t p, std::uint64_t d0) {
	ThresholdOverrides o;
	o.p_k = BigInt(p);
	o.ramsey_bound = BigInt(p);
	o.d0 = BigInt(d0);
	return SolverConfig::with_overrides(k, o);
}

TEST(BoundedWitnessSearch, Examples) {
	EXPECT_FALSE(bounded_witness_search(complete(3), 2, 4).has_value());
	const auto p3 = bounded_witness_search(path(3), 2, 4);
	ASSERT_TRUE(p3.has_value());
	EXPECT_EQ(p3->vertices, (std::vector<Vertex>{0, 1, 2}));
	const auto k4 = bounded_witness_search(complete(4), 3, 6);
	ASSERT_TRUE(k4.has_value());
	EXPECT_EQ(k4->vertices.size(), 3u);
	EXPECT_TRUE(verify_witness(complete(4), *k4));
}

TEST(BoundedWitnessSearch, SmallCases) {
	EXPECT_EQ(bounded_witness_search(path(2), 0, 1)->vertices, std::vector<Vertex>{0});
	EXPECT_FALSE(bounded_witness_search(path(3), 3, 6).has_value());
	EXPECT_FALSE(bounded_witness_search(Graph{}, 0, 4).has_value());
}

TEST(BoundedWitnessSearch, DisconnectedPieces) {
	// Two disjoint triangles: 4 edges needs a triangle plus an edge.
	const std::size_t sizes[] = {3, 3};
	const Graph g = disjoint_cliques(sizes);
	const auto w = bounded_witness_search(g, 4, 8);
	ASSERT_TRUE(w.has_value());
	EXPECT_TRUE(verify_witness(g, Bitset::from_list(6, w->vertices), 4, true));
}

TEST(BoundedWitnessSearch, AgreesWithNiceEnumeration) {
	Rng rng{41};
	for (int i = 0; i < 400; ++i) {
		const Graph g = erdos_renyi(rng.between(1, 10), rng.unit(), rng);
		for (std::uint64_t k = 1; k <= 8; ++k) {
			const auto w = bounded_witness_search(g, k, 2 * k);
			ASSERT_EQ(w.has_value(), oracle::count_eis(g, k, true) > 0) << i << " k=" << k;
			if (w)
				ASSERT_TRUE(verify_witness(g, Bitset::from_list(g.order(), w->vertices), k, true));
		}
	}
}

TEST(Solve, Examples) {
	const auto yes = solve(complete(3), 3, SolverConfig::paper(3));
	ASSERT_TRUE(yes.yes());
	EXPECT_EQ(yes.witness->vertices, (std::vector<Vertex>{0, 1, 2}));
	EXPECT_FALSE(solve(complete(3), 2, SolverConfig::paper(2)).yes());
	EXPECT_EQ(solve(Graph{}, 0, SolverConfig::paper(0)).route, "empty_graph");
	EXPECT_EQ(solve(Graph::from_edges(3, {}), 1, SolverConfig::paper(1)).route, "edgeless");
}

TEST(Solve, WitnessUsesOriginalIds) {
	const Graph g = oracle::make_graph(6, {{3, 5}, {5, 4}});
	const auto r = solve(g, 2, SolverConfig::paper(2));
	ASSERT_TRUE(r.yes());
	EXPECT_EQ(r.witness->vertices, (std::vector<Vertex>{3, 4, 5}));
}

TEST(Solve, CapBelowTwoKRejectedInPaperMode) {
	SolverConfig cfg = SolverConfig::paper(3);
	cfg.witness_search_cap = 4;
	EXPECT_THROW(solve(complete(4), 3, cfg), PreconditionError);
}

TEST(Solve, AllGraphsUpToFiveVertices) {
	for (std::size_t n = 0; n <= 5; ++n)
		for (std::uint64_t code = 0; code < oracle::graph_count(n); ++code) {
			const Graph g = oracle::graph_from_code(n, code);
			for (std::uint64_t k = 0; k <= 10; ++k) {
				const auto r = solve(g, k, SolverConfig::paper(k));
				ASSERT_EQ(r.yes(), oracle::has_k_edge_subgraph(g, k)) << n << ":" << code << " k=" << k;
				if (r.yes())
					ASSERT_TRUE(verify_witness(g, *r.witness));
			}
		}
}

TEST(Solve, RandomGraphsUpToEightVertices) {
	Rng rng{43};
	for (int i = 0; i < 2000; ++i) {
		const Graph g = erdos_renyi(rng.between(6, 8), rng.unit(), rng);
		const std::uint64_t k = rng.between(0, 10);
		const auto r = solve(g, k, SolverConfig::paper(k));
		ASSERT_EQ(r.yes(), oracle::has_k_edge_subgraph(g, k)) << i;
		if (r.yes())
			ASSERT_TRUE(verify_witness(g, *r.witness));
	}
}

TEST(Decompose, StarIsDegreeExtreme) {
	for (std::uint64_t k = 1; k <= 4; ++k)
		EXPECT_EQ(decompose(star(9), k, SolverConfig::paper(k)).kind, DecomposeOutcome::Kind::degree_extreme);
}

TEST(Decompose, SmallGraphBelowD) {
	Rng rng{2};
	const Graph g = erdos_renyi(30, 0.5, rng);
	EXPECT_EQ(decompose(g, 1, SolverConfig::paper(1)).kind, DecomposeOutcome::Kind::degree_extreme);
}

TEST(Decompose, PaperConstantsNeverSplit) {
	Rng rng{9};
	for (int i = 0; i < 50; ++i) {
		const Graph g = erdos_renyi(rng.between(1, 1000), rng.unit(), rng);
		for (std::uint64_t k = 2; k <= 6; ++k)
			ASSERT_EQ(decompose(g, k, SolverConfig::paper(k)).kind, DecomposeOutcome::Kind::degree_extreme);
	}
}

TEST(Decompose, OverriddenSplitKeepsInvariants) {
	Rng rng{47};
	int splits = 0, witnesses = 0;
	for (int i = 0; i < 600; ++i) {
		const std::uint64_t k = rng.between(1, 3);
		const std::uint64_t p = k == 1 ? 2 : k == 2 ? 3 : 7;
		const SolverConfig cfg = tiny(k, p, rng.between(1, 3));
		const Graph g = erdos_renyi(rng.between(12, 30), 0.1 + 0.6 * rng.unit(), rng);
		DecomposeOutcome out;
		try {
			out = decompose(g, k, cfg);
		} catch (const RamseyExhausted &) {
			continue;
		}
		if (out.kind == DecomposeOutcome::Kind::split) {
			++splits;
			const auto err = check_split_invariants(g, *out.split, cfg.thresholds);
			ASSERT_FALSE(err.has_value()) << *err;
		} else if (out.kind == DecomposeOutcome::Kind::witness_found) {
			++witnesses;
			ASSERT_TRUE(verify_witness(g, *out.witness));
		}
	}
	EXPECT_GT(splits, 0);
	EXPECT_GT(witnesses, 0);
}

TEST(Decompose, SplitOfThreeCliques) {
	const std::size_t sizes[] = {5, 5, 5};
	const Graph g = disjoint_cliques(sizes);
	const auto out = decompose(g, 2, tiny(2, 2, 1));
	ASSERT_EQ(out.kind, DecomposeOutcome::Kind::split);
	EXPECT_EQ(out.split->v0, 0u);
	EXPECT_EQ(out.split->v1, Bitset::from_list(15, {1, 2, 3, 4}));
	EXPECT_EQ(out.split->b, Bitset::from_list(15, {0}));
}

TEST(Solve, FinalBranchOnThreeCliques) {
	const std::size_t sizes[] = {5, 5, 5};
	const Graph g = disjoint_cliques(sizes);
	SolverConfig cfg = tiny(2, 2, 1);
	cfg.small_degree_trigger = false;
	const auto r = solve(g, 2, cfg);
	ASSERT_TRUE(r.yes());
	EXPECT_EQ(r.route, "final_branch");
	EXPECT_EQ(r.witness->provenance, Provenance::three_cliques);
	EXPECT_TRUE(verify_witness(g, *r.witness));
}

TEST(Solve, OverriddenPipelineMatchesOracle) {
	Rng rng{53};
	for (int i = 0; i < 400; ++i) {
		const std::uint64_t k = rng.between(1, 5);
		SolverConfig cfg = tiny(k, rng.between(2, 4), rng.between(1, 3));
		cfg.small_degree_trigger = rng.chance(1, 2);
		const Graph g = erdos_renyi(rng.between(8, 14), rng.unit(), rng);
		const auto r = solve(g, k, cfg);
		ASSERT_EQ(r.yes(), oracle::has_k_edge_subgraph(g, k)) << i << " route " << r.route;
	}
}

TEST(SolverConfig, Defaults) {
	const SolverConfig cfg = SolverConfig::paper(4);
	EXPECT_EQ(cfg.search_cap(), 8u);
	EXPECT_EQ(cfg.mode, SolverMode::paper_faithful);
	EXPECT_EQ(tiny(1, 2, 2).mode, SolverMode::test_overridden);
}

} // namespace
} // namespace kedge
