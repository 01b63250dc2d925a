#include "kedge/counting.hpp"

#include <bit>
#include <string>

#include "kedge/errors.hpp"

namespace kedge {

namespace {

using Mask = std::uint64_t;

void require_within_guard(const Graph &g, std::size_t guard) {
	if (g.order() > guard)
		throw GuardExceeded("graph has " + std::to_string(g.order()) + " vertices, enumeration guard is "
		                    + std::to_string(guard) + " (raise it with --guard)");
	if (g.order() > 64)
		throw GuardExceeded("subset enumeration supports at most 64 vertices");
}

std::vector<Mask> adjacency_masks(const Graph &g) {
	std::vector<Mask> adj(g.order(), 0);
	for (Vertex v = 0; v < g.order(); ++v)
		g.neighbors(v).for_each([&](Vertex u) { adj[v] |= Mask{1} << u; });
	return adj;
}

// Depth-first over include/exclude decisions in vertex order, pruning on the
// edge budget and (for nice counts) on the 2k vertex bound.
class SubsetCounter {
public:
	SubsetCounter(const Graph &g, std::uint64_t k, bool nice)
	: adj_{adjacency_masks(g)}, k_{k}, nice_{nice}, size_cap_{nice ? 2 * k : g.order()} { }

	std::uint64_t count() {
		total_ = 0;
		walk(0, 0, 0, 0);
		return total_;
	}

private:
	void walk(std::size_t i, Mask chosen, std::uint64_t edges, std::size_t size) {
		if (i == adj_.size()) {
			if (chosen != 0 && edges == k_ && (!nice_ || no_isolated(chosen)))
				++total_;
			return;
		}
		walk(i + 1, chosen, edges, size);
		if (size == size_cap_)
			return;
		const auto added = static_cast<std::uint64_t>(std::popcount(adj_[i] & chosen));
		if (edges + added <= k_)
			walk(i + 1, chosen | (Mask{1} << i), edges + added, size + 1);
	}

	bool no_isolated(Mask chosen) const {
		for (Mask rest = chosen; rest; rest &= rest - 1)
			if ((adj_[static_cast<std::size_t>(std::countr_zero(rest))] & chosen) == 0)
				return false;
		return true;
	}

	std::vector<Mask> adj_;
	std::uint64_t k_;
	bool nice_;
	std::size_t size_cap_;
	std::uint64_t total_ = 0;
};

std::uint64_t factorial(std::uint64_t k) {
	std::uint64_t f = 1;
	for (std::uint64_t i = 2; i <= k; ++i)
		f *= i;
	return f;
}

} // namespace

std::uint64_t count_eis(const Graph &g, std::uint64_t k, std::size_t guard) {
	require_within_guard(g, guard);
	return SubsetCounter{g, k, false}.count();
}

std::uint64_t count_eis_nice(const Graph &g, std::uint64_t k, std::size_t guard) {
	require_within_guard(g, guard);
	if (k == 0)
		return 0;
	return SubsetCounter{g, k, true}.count();
}

std::uint64_t count_independent_sets(const Graph &g, std::uint64_t size, std::size_t guard) {
	require_within_guard(g, guard);
	if (size == 0 || size > g.order())
		return 0;
	const auto adj = adjacency_masks(g);
	std::uint64_t total = 0;
	auto walk = [&](auto &self, std::size_t i, Mask chosen, std::uint64_t picked) -> void {
		if (picked == size) {
			++total;
			return;
		}
		if (adj.size() - i < size - picked)
			return;
		if ((adj[i] & chosen) == 0)
			self(self, i + 1, chosen | (Mask{1} << i), picked + 1);
		self(self, i + 1, chosen, picked);
	};
	walk(walk, 0, 0, 0);
	return total;
}

Vertex BlockGraph::copy(Vertex v, std::uint64_t i) const {
	return static_cast<Vertex>((i - 1) * (base_order + 1) + v);
}

Vertex BlockGraph::connector(std::uint64_t i) const {
	return static_cast<Vertex>((i - 1) * (base_order + 1) + base_order);
}

BlockGraph build_reduction_graph(const Graph &g, std::uint64_t k) {
	if (k == 0)
		throw PreconditionError("the reduction needs k >= 1");
	const std::size_t n = g.order();
	BlockGraph h;
	h.k = k;
	h.base_order = n;
	const std::size_t order = k * n + (k - 1);

	std::vector<Edge> edges;
	for (std::uint64_t i = 1; i <= k; ++i)
		for (Vertex u = 0; u < n; ++u)
			for (Vertex v = u + 1; v < n; ++v)
				edges.push_back({h.copy(u, i), h.copy(v, i)});
	for (std::uint64_t i = 1; i <= k; ++i)
		for (std::uint64_t j = i + 1; j <= k; ++j)
			for (Vertex u = 0; u < n; ++u)
				for (Vertex v = 0; v < n; ++v)
					if (u == v || g.adjacent(u, v))
						edges.push_back({h.copy(u, i), h.copy(v, j)});
	for (std::uint64_t i = 1; i < k; ++i)
		for (Vertex v = 0; v < n; ++v) {
			edges.push_back({h.copy(v, i), h.connector(i)});
			edges.push_back({h.copy(v, i + 1), h.connector(i)});
		}

	std::vector<std::string> labels(order);
	for (std::uint64_t i = 1; i <= k; ++i) {
		VertexSet block{order};
		for (Vertex v = 0; v < n; ++v) {
			block.set(h.copy(v, i));
			labels[h.copy(v, i)] = g.label(v) + "@" + std::to_string(i);
		}
		h.blocks.push_back(block);
		if (i < k) {
			labels[h.connector(i)] = "e" + std::to_string(i);
			h.blocks.push_back(Bitset::from_list(order, {h.connector(i)}));
		}
	}
	h.graph = Graph::from_edges(order, edges, std::move(labels));
	return h;
}

CountTable count_is_table(const Graph &g, std::uint64_t k, std::size_t guard) {
	const BlockGraph h = build_reduction_graph(g, k);
	const std::size_t blocks = h.blocks.size();
	const std::size_t masks = std::size_t{1} << blocks;
	CountTable table{k, std::vector<std::uint64_t>(masks, 0), std::vector<std::uint64_t>(masks, 0), 0};

	for (std::size_t x = 0; x < masks; ++x) {
		VertexSet chosen = h.graph.empty_set();
		for (std::size_t b = 0; b < blocks; ++b)
			if (x >> b & 1)
				chosen |= h.blocks[b];
		const Graph hx = h.graph.induced(chosen).first;
		table.s[x] = k == 1 ? count_eis(hx, 0, guard) : count_eis_nice(hx, 2 * k - 2, guard);

		// Proper subsets Y of X, enumerated by the standard submask walk.
		std::uint64_t below = 0;
		for (std::size_t y = (x - 1) & x; y != x; y = (y - 1) & x) {
			below += table.t[y];
			if (y == 0)
				break;
		}
		if (below > table.s[x])
			throw InvariantViolation("negative t_X for block set " + std::to_string(x));
		table.t[x] = table.s[x] - below;
	}

	const std::uint64_t full = table.t[masks - 1];
	const std::uint64_t f = factorial(k);
	if (full % f != 0)
		throw InvariantViolation("t of the full block set (" + std::to_string(full) + ") is not divisible by "
		                         + std::to_string(k) + "!");
	table.result = full / f;
	return table;
}

std::uint64_t count_is_via_reduction(const Graph &g, std::uint64_t k, std::size_t guard) {
	return count_is_table(g, k, guard).result;
}

} // namespace kedge
