#include "kedge/random_graphs.hpp"

#include <algorithm>
#include <limits>

#include "kedge/errors.hpp"

namespace kedge {

std::uint64_t Rng::below(std::uint64_t bound) {
	if (bound == 0)
		throw PreconditionError("Rng::below needs a positive bound");
	// Rejection sampling on the top of the range keeps the mapping unbiased.
	const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
	std::uint64_t x;
	do
		x = next();
	while (x >= limit);
	return x % bound;
}

Graph erdos_renyi(std::size_t n, double p, Rng &rng) {
	std::vector<Edge> edges;
	for (Vertex u = 0; u < n; ++u)
		for (Vertex v = u + 1; v < n; ++v)
			if (rng.unit() < p)
				edges.push_back({u, v});
	return Graph::from_edges(n, edges);
}

Graph disjoint_cliques(std::span<const std::size_t> sizes) {
	std::vector<Edge> edges;
	Vertex base = 0;
	for (std::size_t s : sizes) {
		for (Vertex i = 0; i < s; ++i)
			for (Vertex j = i + 1; j < s; ++j)
				edges.push_back({base + i, base + j});
		base += static_cast<Vertex>(s);
	}
	return Graph::from_edges(base, edges);
}

Graph star(std::size_t leaves) {
	std::vector<Edge> edges;
	for (Vertex v = 1; v <= leaves; ++v)
		edges.push_back({0, v});
	return Graph::from_edges(leaves + 1, edges);
}

std::size_t extremeness(const Graph &g) {
	std::size_t d = 0;
	for (Vertex v = 0; v < g.order(); ++v)
		d = std::max(d, std::min(g.degree(v), g.order() - 1 - g.degree(v)));
	return d;
}

GeneratedBridge random_bridge(std::size_t n, double p, Rng &rng) {
	if (n < 2)
		throw PreconditionError("a bridge needs at least two vertices");
	GeneratedBridge out{Graph{}, Bitset{n}, Bitset{n}, Bitset{n}, 0};
	std::vector<Vertex> order(n);
	for (Vertex v = 0; v < n; ++v)
		order[v] = v;
	rng.shuffle(order);
	const auto left = static_cast<std::size_t>(rng.between(1, n - 1));
	for (std::size_t i = 0; i < n; ++i)
		(i < left ? out.v1 : out.v2).set(order[i]);
	for (Vertex v = 0; v < n; ++v)
		if (rng.chance(1, 3))
			out.b.set(v);

	std::vector<Edge> edges;
	for (Vertex u = 0; u < n; ++u)
		for (Vertex v = u + 1; v < n; ++v) {
			const bool same_side = out.v1.test(u) == out.v1.test(v);
			if ((same_side || out.b.test(u) || out.b.test(v)) && rng.unit() < p)
				edges.push_back({u, v});
		}
	out.graph = Graph::from_edges(n, edges);
	out.d = std::max(extremeness(out.graph.induced(out.v1).first), extremeness(out.graph.induced(out.v2).first));
	return out;
}

} // namespace kedge
