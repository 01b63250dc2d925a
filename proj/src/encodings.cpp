#include "kedge/encodings.hpp"

#include <string>

#include "kedge/errors.hpp"

namespace kedge {

namespace {

void require_pair(std::size_t n, Vertex u, Vertex v) {
	if (u == v)
		throw PreconditionError("edge predicate needs two distinct vertices");
	if (u >= n || v >= n)
		throw PreconditionError("vertex out of range for the encoding");
}

std::optional<Vertex> side_local(const BridgeStructure &s, bool left, Vertex v) {
	return (left ? s.left_map : s.right_map).local(v);
}

} // namespace

bool is_degree_extreme(const Graph &g, std::size_t d) {
	const std::size_t n = g.order();
	for (Vertex v = 0; v < n; ++v) {
		const auto deg = g.degree(v);
		if (deg > d && deg + 1 + d < n)
			return false;
	}
	return true;
}

DesStructure encode_des(const Graph &g, std::size_t d) {
	if (!is_degree_extreme(g, d))
		throw PreconditionError("graph is not " + std::to_string(d) + "-degree-extreme");
	const std::size_t n = g.order();
	DesStructure s{d, vertices_with_degree_at_most(g, d), std::vector<Bitset>(n, Bitset{n})};
	for (Vertex u = 0; u < n; ++u) {
		if (s.p_set.test(u)) {
			s.r_rel[u] = g.neighbors(u);
			continue;
		}
		// Edges to P plus non-edges to the large-degree side.
		Bitset large = Bitset::full(n) - s.p_set;
		large.reset(u);
		s.r_rel[u] = (g.neighbors(u) & s.p_set) | (large - g.neighbors(u));
	}
	return s;
}

bool des_edge(const DesStructure &s, Vertex u, Vertex v) {
	require_pair(s.size(), u, v);
	const bool r = s.related(u, v);
	const bool pu = s.in_p(u);
	const bool pv = s.in_p(v);
	return (r && (pu || pv)) || (!r && !pu && !pv);
}

BridgeStructure encode_bridge(const Graph &g, const VertexSet &v1, const VertexSet &v2, const VertexSet &b,
                              std::size_t d) {
	const std::size_t n = g.order();
	if (v1.universe() != n || v2.universe() != n || b.universe() != n)
		throw CertificateError("B1", "vertex sets do not belong to this graph");
	if (v1.intersects(v2) || (v1 | v2).count() != n)
		throw CertificateError("B1", "V1 and V2 do not partition V");

	auto [g1, map1] = g.induced(v1);
	auto [g2, map2] = g.induced(v2);
	if (!is_degree_extreme(g1, d))
		throw CertificateError("B2", "G[V1] is not " + std::to_string(d) + "-degree-extreme");
	if (!is_degree_extreme(g2, d))
		throw CertificateError("B2", "G[V2] is not " + std::to_string(d) + "-degree-extreme");

	v1.for_each([&](Vertex u) {
		const Bitset cross = g.neighbors(u) & v2;
		if (b.test(u))
			return;
		if (auto w = (cross - b).find_first(); w != Bitset::npos)
			throw CertificateError("B3", "edge " + std::to_string(u) + "-" + std::to_string(w) + " misses B");
	});

	BridgeStructure s;
	s.n = n;
	s.left = encode_des(g1, d);
	s.right = encode_des(g2, d);
	s.left_map = std::move(map1);
	s.right_map = std::move(map2);
	s.u1 = v1;
	s.u2 = v2;
	b.for_each([&](Vertex x) {
		s.f_sets.push_back(Bitset::from_list(n, {x}));
		s.c_sets.push_back(g.neighbors(x));
	});
	return s;
}

bool bridge_edge(const BridgeStructure &s, Vertex u, Vertex v) {
	require_pair(s.n, u, v);
	if (s.u1.test(u) && s.u1.test(v))
		return des_edge(s.left, *side_local(s, true, u), *side_local(s, true, v));
	if (s.u2.test(u) && s.u2.test(v))
		return des_edge(s.right, *side_local(s, false, u), *side_local(s, false, v));
	for (std::size_t i = 0; i < s.f_sets.size(); ++i)
		if ((s.f_sets[i].test(u) && s.c_sets[i].test(v)) || (s.f_sets[i].test(v) && s.c_sets[i].test(u)))
			return true;
	return false;
}

Graph gaifman_graph(const DesStructure &s) {
	std::vector<Edge> edges;
	for (Vertex u = 0; u < s.size(); ++u)
		s.r_rel[u].for_each([&](Vertex v) {
			if (u < v)
				edges.push_back({u, v});
		});
	return Graph::from_edges(s.size(), edges);
}

Graph gaifman_graph(const BridgeStructure &s) {
	std::vector<Edge> edges;
	auto add_side = [&](const DesStructure &side, const VertexMapping &map) {
		for (const Edge &e : gaifman_graph(side).edges())
			edges.push_back({map.original(e.u), map.original(e.v)});
	};
	add_side(s.left, s.left_map);
	add_side(s.right, s.right_map);
	return Graph::from_edges(s.n, edges);
}

} // namespace kedge
