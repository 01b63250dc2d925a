#include <gtest/gtest.h>

#include <bit>

#include "kedge/counting.hpp"
#include "kedge/decomposer.hpp"
#include "kedge/errors.hpp"
#include "kedge/random_graphs.hpp"
#include "oracles/brute_force.hpp"

namespace kedge {
namespace {

using oracle::complete;
using oracle::make_graph;
using oracle::path;

TEST(CountEis, Examples) {
	EXPECT_EQ(count_eis(complete(3), 1), 3u);
	EXPECT_EQ(count_eis(complete(3), 0), 3u);
	EXPECT_EQ(count_eis(make_graph(3, {{0, 1}}), 1), 2u);
}

TEST(CountEisNice, Examples) {
	EXPECT_EQ(count_eis_nice(make_graph(3, {{0, 1}}), 1), 1u);
	EXPECT_EQ(count_eis_nice(complete(4), 0), 0u);
	EXPECT_EQ(count_eis_nice(complete(3), 2), 0u);
}

TEST(CountIndependentSets, Examples) {
	EXPECT_EQ(count_independent_sets(path(3), 2), 1u);
	EXPECT_EQ(count_independent_sets(complete(3), 2), 0u);
	EXPECT_EQ(count_independent_sets(Graph::from_edges(4, {}), 2), 6u);
	EXPECT_EQ(count_independent_sets(path(3), 0), 0u);
}

TEST(Counting, GuardIsHardError) {
	const Graph g = Graph::from_edges(30, {});
	try {
		count_eis(g, 0);
		FAIL();
	} catch (const GuardExceeded &e) {
		EXPECT_NE(std::string(e.what()).find("--guard"), std::string::npos);
	}
	EXPECT_THROW(count_eis_nice(g, 1), GuardExceeded);
	EXPECT_THROW(count_independent_sets(g, 2), GuardExceeded);
	EXPECT_EQ(count_independent_sets(g, 2, 30), 435u);
}

TEST(Counting, MatchesOracleOnRandomGraphs) {
	Rng rng{61};
	for (int i = 0; i < 300; ++i) {
		const Graph g = erdos_renyi(rng.between(0, 12), rng.unit(), rng);
		for (std::uint64_t k = 0; k <= 8; ++k) {
			ASSERT_EQ(count_eis(g, k), oracle::count_eis(g, k, false));
			ASSERT_EQ(count_eis_nice(g, k), oracle::count_eis(g, k, true));
			ASSERT_EQ(count_independent_sets(g, k), oracle::count_independent(g, k));
			ASSERT_GE(count_eis(g, k), count_eis_nice(g, k));
		}
	}
}

TEST(Counting, NiceCountAgreesWithSolverDecision) {
	Rng rng{62};
	for (int i = 0; i < 300; ++i) {
		const Graph g = erdos_renyi(rng.between(1, 10), rng.unit(), rng);
		for (std::uint64_t k = 1; k <= 6; ++k)
			ASSERT_EQ(count_eis_nice(g, k) > 0, bounded_witness_search(g, k, 2 * k).has_value());
	}
}

TEST(BuildReductionGraph, PathKTwo) {
	const BlockGraph h = build_reduction_graph(path(3), 2);
	EXPECT_EQ(h.graph.order(), 7u);
	ASSERT_EQ(h.blocks.size(), 3u);
	EXPECT_EQ(h.blocks[0].count(), 3u);
	EXPECT_EQ(h.blocks[1].count(), 1u);
	EXPECT_EQ(h.blocks[2].count(), 3u);
	// Two 3-cliques, 3 diagonal plus 4 adjacency cross edges, 6 connector edges.
	EXPECT_EQ(h.graph.edge_count(), 6u + 7u + 6u);
	EXPECT_TRUE(h.graph.adjacent(h.copy(0, 1), h.copy(1, 2)));
	EXPECT_FALSE(h.graph.adjacent(h.copy(0, 1), h.copy(2, 2)));
	EXPECT_TRUE(h.graph.adjacent(h.copy(2, 1), h.copy(2, 2)));
	EXPECT_EQ(h.graph.degree(h.connector(1)), 6u);
	EXPECT_EQ(h.graph.label(h.connector(1)), "e1");
	EXPECT_EQ(h.graph.label(h.copy(1, 2)), "1@2");
}

TEST(BuildReductionGraph, KOneIsSingleClique) {
	const BlockGraph h = build_reduction_graph(path(4), 1);
	ASSERT_EQ(h.blocks.size(), 1u);
	EXPECT_EQ(h.graph, complete(4));
	EXPECT_THROW(build_reduction_graph(path(4), 0), PreconditionError);
}

// Clause by clause: block cliques, cross edges for equal or adjacent base
// vertices, connectors to both neighbouring odd blocks, nothing else.
TEST(BuildReductionGraph, EdgeSetMatchesConstruction) {
	Rng rng{63};
	for (int i = 0; i < 40; ++i) {
		const Graph g = erdos_renyi(rng.between(1, 6), rng.unit(), rng);
		const std::uint64_t k = rng.between(1, 4);
		const BlockGraph h = build_reduction_graph(g, k);
		const std::size_t n = g.order();
		std::size_t expected = 0;
		for (std::uint64_t a = 1; a <= k; ++a)
			for (std::uint64_t b = a; b <= k; ++b)
				for (Vertex u = 0; u < n; ++u)
					for (Vertex v = 0; v < n; ++v) {
						if (a == b && u >= v)
							continue;
						const bool want = a == b || u == v || g.adjacent(u, v);
						ASSERT_EQ(h.graph.adjacent(h.copy(u, a), h.copy(v, b)), want);
						expected += want;
					}
		for (std::uint64_t c = 1; c < k; ++c)
			for (std::uint64_t a = 1; a <= k; ++a)
				for (Vertex v = 0; v < n; ++v) {
					const bool want = a == c || a == c + 1;
					ASSERT_EQ(h.graph.adjacent(h.connector(c), h.copy(v, a)), want);
					expected += want;
				}
		ASSERT_EQ(h.graph.edge_count(), expected);
	}
}

TEST(CountIsViaReduction, Examples) {
	const CountTable t = count_is_table(path(3), 2);
	EXPECT_EQ(t.t.back(), 2u);
	EXPECT_EQ(t.result, 1u);
	EXPECT_EQ(count_is_via_reduction(complete(3), 2), 0u);
}

TEST(CountIsViaReduction, TableRecurrence) {
	const CountTable t = count_is_table(oracle::cycle(5), 2);
	for (std::size_t x = 0; x < t.s.size(); ++x) {
		std::uint64_t sum = 0;
		for (std::size_t y = 0; y <= x; ++y)
			if ((y & x) == y)
				sum += t.t[y];
		EXPECT_EQ(sum, t.s[x]);
	}
}

TEST(CountIsViaReduction, MatchesDirectCount) {
	Rng rng{64};
	for (int i = 0; i < 60; ++i) {
		const Graph g = erdos_renyi(rng.between(1, 6), rng.unit(), rng);
		for (std::uint64_t k = 1; k <= 3; ++k)
			ASSERT_EQ(count_is_via_reduction(g, k), count_independent_sets(g, k));
	}
}

// Every nice (2k-2)-edge induced subgraph of H meeting all blocks projects
// onto a k-independent set of G via its odd-block vertices.
TEST(CountIsViaReduction, FullBlockSubgraphsProjectToIndependentSets) {
	Rng rng{65};
	for (int i = 0; i < 30; ++i) {
		const Graph g = erdos_renyi(rng.between(1, 5), rng.unit(), rng);
		for (std::uint64_t k = 2; k <= 3; ++k) {
			const BlockGraph h = build_reduction_graph(g, k);
			const auto adj = oracle::masks(h.graph);
			std::vector<oracle::Mask> block_masks;
			for (const auto &b : h.blocks) {
				oracle::Mask m = 0;
				b.for_each([&](Vertex v) { m |= oracle::Mask{1} << v; });
				block_masks.push_back(m);
			}
			std::uint64_t found = 0;
			oracle::for_each_subset(h.graph, [&](oracle::Mask s) {
				for (auto m : block_masks)
					if ((s & m) == 0)
						return;
				if (static_cast<std::uint64_t>(oracle::edges_in(adj, s)) != 2 * k - 2 || !oracle::nice(adj, s))
					return;
				++found;
				std::vector<Vertex> projected;
				for (std::uint64_t b = 1; b <= k; ++b) {
					const oracle::Mask part = s & block_masks[2 * (b - 1)];
					ASSERT_EQ(std::popcount(part), 1);
					projected.push_back(static_cast<Vertex>(std::countr_zero(part)) - h.copy(0, b));
				}
				std::sort(projected.begin(), projected.end());
				ASSERT_EQ(std::adjacent_find(projected.begin(), projected.end()), projected.end());
				ASSERT_EQ(oracle::induced_edges(g, projected), 0u);
			});
			const std::uint64_t fact = k == 2 ? 2 : 6;
			ASSERT_EQ(found, count_independent_sets(g, k) * fact);
		}
	}
}

} // namespace
} // namespace kedge
