#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "kedge/graph.hpp"

namespace kedge {

/// Seeded generator with a fixed bounded-integer mapping, so streams are
/// identical across standard libraries.
class Rng {
public:
	explicit Rng(std::uint64_t seed) : engine_{seed} { }

	std::uint64_t next() { return engine_(); }
	/// Uniform in [0, bound); bound must be positive.
	std::uint64_t below(std::uint64_t bound);
	/// Uniform in [lo, hi].
	std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
	/// True with probability num/den.
	bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
	double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

	template <typename T>
	void shuffle(std::vector<T> &v) {
		for (std::size_t i = v.size(); i > 1; --i)
			std::swap(v[i - 1], v[below(i)]);
	}

private:
	std::mt19937_64 engine_;
};

/// G(n, p): each pair independently with probability p.
Graph erdos_renyi(std::size_t n, double p, Rng &rng);
/// Vertex-disjoint cliques of the given sizes, numbered consecutively.
Graph disjoint_cliques(std::span<const std::size_t> sizes);
/// Centre 0 joined to `leaves` leaves.
Graph star(std::size_t leaves);

struct GeneratedBridge {
	Graph graph;
	VertexSet v1;
	VertexSet v2;
	VertexSet b;
	std::size_t d = 0;
};

/// Random partition into two sides with random internal edges, a random B,
/// and cross edges only at B. d is the least bound making both sides
/// degree-extreme.
GeneratedBridge random_bridge(std::size_t n, double p, Rng &rng);

/// Least d for which g is d-degree-extreme: max over v of min(deg, n-1-deg).
std::size_t extremeness(const Graph &g);

} // namespace kedge
