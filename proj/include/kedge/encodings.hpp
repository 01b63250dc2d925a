#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "kedge/graph.hpp"

namespace kedge {

/// Every vertex has degree <= d or >= n - 1 - d.
bool is_degree_extreme(const Graph &g, std::size_t d);

/// Relational encoding of a d-degree-extreme graph. P holds the small-degree
/// vertices; R keeps the edges touching P and the non-edges among the rest.
struct DesStructure {
	std::size_t d = 0;
	VertexSet p_set;
	std::vector<Bitset> r_rel; // symmetric, indexed by vertex

	std::size_t size() const { return r_rel.size(); }
	bool in_p(Vertex v) const { return p_set.test(v); }
	bool related(Vertex u, Vertex v) const { return r_rel[u].test(v); }
};

DesStructure encode_des(const Graph &g, std::size_t d);

/// (Rxy and (Px or Py)) or (not Rxy and not Px and not Py)
bool des_edge(const DesStructure &s, Vertex u, Vertex v);

/// Encoding of a (d, |B|)-bridge. Each side is encoded over its induced
/// subgraph; `left_map`/`right_map` translate side-local ids to ids of G.
/// f_sets[i] = {b_i}, c_sets[i] = N(b_i) for B = {b_1 < b_2 < ...}.
struct BridgeStructure {
	std::size_t n = 0;
	DesStructure left;
	DesStructure right;
	VertexMapping left_map;
	VertexMapping right_map;
	VertexSet u1;
	VertexSet u2;
	std::vector<VertexSet> f_sets;
	std::vector<VertexSet> c_sets;
};

/// Raises CertificateError with condition "B1" (V1, V2 not a partition or B
/// outside V), "B2" (a side is not d-degree-extreme) or "B3" (a cross edge
/// misses B).
BridgeStructure encode_bridge(const Graph &g, const VertexSet &v1, const VertexSet &v2, const VertexSet &b,
                              std::size_t d);

bool bridge_edge(const BridgeStructure &s, Vertex u, Vertex v);

/// Graph on the universe joining pairs that co-occur in R. Unary relations are
/// ignored.
Graph gaifman_graph(const DesStructure &s);
Graph gaifman_graph(const BridgeStructure &s);

} // namespace kedge
