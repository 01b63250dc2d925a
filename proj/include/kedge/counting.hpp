#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kedge/graph.hpp"

namespace kedge {

/// Enumeration refuses graphs with more vertices than this unless told otherwise.
inline constexpr std::size_t kDefaultCountGuard = 25;

/// Nonempty S with |E(G[S])| = k.
std::uint64_t count_eis(const Graph &g, std::uint64_t k, std::size_t guard = kDefaultCountGuard);
/// As count_eis, restricted to G[S] without isolated vertices. Zero for k = 0.
std::uint64_t count_eis_nice(const Graph &g, std::uint64_t k, std::size_t guard = kDefaultCountGuard);
/// Independent sets of exactly `size` vertices. Zero for size 0: the empty
/// set is not counted.
std::uint64_t count_independent_sets(const Graph &g, std::uint64_t size, std::size_t guard = kDefaultCountGuard);

/// The hardness-reduction graph H: blocks V_1..V_{2k-1}, odd blocks are
/// copies of V(G) forming cliques, even blocks are single connectors e_i.
struct BlockGraph {
	Graph graph;
	std::vector<VertexSet> blocks;
	std::uint64_t k = 0;
	std::size_t base_order = 0;

	/// Id of the copy (v, i) of G's vertex v in odd block 2i - 1, i in [1, k].
	Vertex copy(Vertex v, std::uint64_t i) const;
	/// Id of the connector e_i, i in [1, k - 1].
	Vertex connector(std::uint64_t i) const;
};

BlockGraph build_reduction_graph(const Graph &g, std::uint64_t k);

/// s[X] and t[X] indexed by the bitmask X over the 2k - 1 blocks.
struct CountTable {
	std::uint64_t k = 0;
	std::vector<std::uint64_t> s;
	std::vector<std::uint64_t> t;
	std::uint64_t result = 0; // t[full] / k!
};

/// s_X counts nice (2k-2)-edge induced subgraphs of H[X]; t_X those meeting
/// every block of X, via t_X = s_X - sum over proper subsets Y of t_Y.
/// For k = 1 the single block is counted with the 0-edge non-nice count,
/// since no 0-edge subgraph is nice.
CountTable count_is_table(const Graph &g, std::uint64_t k, std::size_t guard = kDefaultCountGuard);
std::uint64_t count_is_via_reduction(const Graph &g, std::uint64_t k, std::size_t guard = kDefaultCountGuard);

} // namespace kedge
