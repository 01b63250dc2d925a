#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kedge/arithmetic.hpp"
#include "kedge/certificates.hpp"
#include "kedge/graph.hpp"

namespace kedge {

enum class SolverMode { paper_faithful, test_overridden };

struct SolverConfig {
	Thresholds thresholds;
	/// Largest candidate set bounded_witness_search may assemble; 2k if unset.
	std::optional<std::size_t> witness_search_cap;
	SolverMode mode = SolverMode::paper_faithful;
	/// Try the small-degree certificate before decomposing.
	bool small_degree_trigger = true;

	/// Paper constants, no overrides.
	static SolverConfig paper(std::uint64_t k);
	/// Overridden thresholds; mode is test_overridden whenever any override is set.
	static SolverConfig with_overrides(std::uint64_t k, const ThresholdOverrides &overrides);

	std::size_t search_cap() const;
};

struct SplitParts {
	VertexSet v1;
	VertexSet v2;
	VertexSet b;
	Vertex v0 = 0;
	VertexSet w1;
	VertexSet w2;
};

struct DecomposeOutcome {
	enum class Kind { degree_extreme, witness_found, split };
	Kind kind = Kind::degree_extreme;
	std::optional<Witness> witness;
	std::optional<SplitParts> split;
};

std::string_view to_string(DecomposeOutcome::Kind kind);

/// One step of the decomposition: a degree-extreme verdict, a witness forced
/// by a large W1 or N(W2) ∩ V2, or a split (V1, V2, B).
DecomposeOutcome decompose(const Graph &g, std::uint64_t k, const SolverConfig &cfg);

/// Re-checks the split guarantees: V1, V2 partition V, |V1| > D,
/// |V2| > D + 1, every V1-V2 edge meets B and |B| <= b_cap. Returns a
/// description of the first violation.
std::optional<std::string> check_split_invariants(const Graph &g, const SplitParts &parts, const Thresholds &t);

/// Exhaustive search for S with |S| <= cap, exactly k induced edges and no
/// isolated vertex in G[S]. Candidates are unions of pairwise non-adjacent
/// connected pieces. For k = 0 a single vertex is returned.
std::optional<Witness> bounded_witness_search(const Graph &g, std::uint64_t k, std::size_t cap);

struct SolveResult {
	std::optional<Witness> witness; // nullopt means no
	std::string route;              // which branch of the pipeline decided

	bool yes() const { return witness.has_value(); }
};

/// Full pipeline; every yes carries a verified witness in the ids of `g`.
SolveResult solve(const Graph &g, std::uint64_t k, const SolverConfig &cfg);

} // namespace kedge
