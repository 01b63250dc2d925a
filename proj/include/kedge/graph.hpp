#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kedge/bitset.hpp"

namespace kedge {

struct Edge {
	Vertex u;
	Vertex v;
};

/// Maps the contiguous ids of a derived graph back to the ids of the graph
/// it was derived from.
struct VertexMapping {
	std::vector<Vertex> to_original;
	std::size_t original_order = 0;

	Vertex original(Vertex v) const { return to_original.at(v); }
	std::optional<Vertex> local(Vertex original) const;

	std::vector<Vertex> lift(std::span<const Vertex> local) const;
	VertexSet lift(const VertexSet &local) const;
	/// Restricts an original-id set to the mapped vertices, in local ids.
	VertexSet restrict(const VertexSet &original) const;

	static VertexMapping identity(std::size_t n);
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
/// Immutable once built; all queries are const.
class Graph {
public:
	Graph() = default;

	/// Builds a graph, collapsing duplicate edges. Self-loops and
	/// out-of-range endpoints raise PreconditionError.
	static Graph from_edges(std::size_t n, std::span<const Edge> edges,
	                        std::vector<std::string> labels = {});

	std::size_t order() const { return rows_.size(); }
	std::size_t edge_count() const { return m_; }
	bool empty() const { return rows_.empty(); }

	const Bitset &neighbors(Vertex v) const { return rows_[v]; }
	std::size_t degree(Vertex v) const { return degrees_[v]; }
	bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }

	std::string label(Vertex v) const;
	std::optional<Vertex> find_label(std::string_view label) const;
	const std::vector<std::string> &labels() const { return labels_; }

	VertexSet all_vertices() const { return Bitset::full(order()); }
	VertexSet empty_set() const { return Bitset{order()}; }
	std::vector<Edge> edges() const;

	Graph complement() const;
	/// G[S] relabelled to 0..|S|-1 in ascending id order; labels carry over.
	std::pair<Graph, VertexMapping> induced(const VertexSet &s) const;

	bool operator==(const Graph &other) const {
		return rows_ == other.rows_;
	}

private:
	std::size_t m_ = 0;
	std::vector<Bitset> rows_;
	std::vector<std::size_t> degrees_;
	std::vector<std::string> labels_;
};

/// Reads the plain edge-list format ("u v" per line, '#' comments, a single
/// token declares an isolated vertex) or DIMACS ("p edge n m", "e u v",
/// 1-based). The format is picked from the first significant line.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string &path);

/// Number of edges of G[S]. S must be nonempty.
std::size_t edge_count_induced(const Graph &g, const VertexSet &s);
std::size_t edge_count_induced(const Graph &g, std::span<const Vertex> s);

/// BFS distance; std::nullopt when v is unreachable from u.
std::optional<std::size_t> distance(const Graph &g, Vertex u, Vertex v);
/// Distances from `source` to every vertex, nullopt for unreachable ones.
std::vector<std::optional<std::size_t>> distances_from(const Graph &g, Vertex source);

VertexSet r_ball(const Graph &g, Vertex v, std::size_t r);
VertexSet r_ball(const Graph &g, const VertexSet &seeds, std::size_t r);

std::pair<Graph, VertexMapping> remove_isolated(const Graph &g);

/// {v : 1 <= deg(v) <= d}
VertexSet small_degree_vertices(const Graph &g, std::size_t d);
/// {v : deg(v) <= d}
VertexSet vertices_with_degree_at_most(const Graph &g, std::size_t d);

VertexSet neighborhood(const Graph &g, const VertexSet &s);
bool is_clique(const Graph &g, const VertexSet &s);
bool is_independent(const Graph &g, const VertexSet &s);
bool is_connected(const Graph &g);

} // namespace kedge
