#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "kedge/graph.hpp"

namespace kedge {

struct CliqueOrIS {
	enum class Kind { clique, independent_set };
	Kind kind;
	VertexSet members;
};

/// Exhaustive branch-and-bound search inside `within` for a clique of the
/// given size, then for an independent set of that size. A clique is reported
/// when both exist. Returns nullopt only when neither exists; for
/// |within| >= 4^size that is an InvariantViolation (Ramsey's bound).
std::optional<CliqueOrIS> find_clique_or_is(const Graph &g, std::size_t size, const VertexSet &within);

/// Clique search alone (same branch-and-bound), exposed for the decomposer.
std::optional<VertexSet> find_clique(const Graph &g, std::size_t size, const VertexSet &within);
std::optional<VertexSet> find_independent_set(const Graph &g, std::size_t size, const VertexSet &within);

/// Result of the bipartite split lemmas.
///  star_side:     every us[i] is adjacent to every vs[j].
///  matching_side: |us| == |vs| and us[i] ~ vs[j] iff i == j.
struct SplitOutcome {
	enum class Kind { star_side, matching_side };
	Kind kind;
	std::vector<Vertex> us;
	std::vector<Vertex> vs;
};

/// A, B disjoint, every u in A has a neighbour in B, |A| > (m-1)(n-1).
/// Returns m vertices of A sharing a neighbour in B, or an induced matching of
/// size n between A and B. Follows the inductive proof: take the lowest-id
/// v in B, recurse on B \ {v} or on (A \ N(v), B \ {v}, n - 1).
SplitOutcome bipartite_split(const Graph &g, const VertexSet &a, const VertexSet &b,
                             std::size_t m, std::size_t n);

/// As above with every u in A having at least p neighbours in B and
/// |A| > (m-1)(n-1)^p; the star side then has m us and p vs.
SplitOutcome bipartite_split_general(const Graph &g, const VertexSet &a, const VertexSet &b,
                                     std::size_t m, std::size_t n, std::size_t p);

/// Checks the SplitOutcome adjacency pattern against the graph.
bool split_outcome_valid(const Graph &g, const SplitOutcome &out);

/// Maximal T ⊆ S with pairwise distances > r, scanning S in ascending order.
VertexSet greedy_scattered(const Graph &g, const VertexSet &s, std::size_t r);

/// Whether S contains ell vertices pairwise at distance > r. Runs the greedy
/// scan first and otherwise decides exactly on the 2r-ball graph around T.
bool is_scattered(const Graph &g, const VertexSet &s, std::size_t ell, std::size_t r);

/// G restricted to N_2r(T) for the greedy T of (S, r).
std::pair<Graph, VertexMapping> scattered_reduce(const Graph &g, const VertexSet &s, std::size_t r);

/// Exhaustive decision on a single graph: ell vertices of S pairwise at
/// distance > r.
bool scattered_exhaustive(const Graph &g, const VertexSet &s, std::size_t ell, std::size_t r);

/// G connected, S dominating. Whether every pairwise distance is <= 3|S| - 1.
bool dominated_diameter_check(const Graph &g, const VertexSet &s);

} // namespace kedge
