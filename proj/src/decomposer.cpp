#include "kedge/decomposer.hpp"

#include <algorithm>
#include <limits>

#include "kedge/encodings.hpp"
#include "kedge/errors.hpp"
#include "kedge/structure_finders.hpp"

namespace kedge {

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

Witness checked(const Graph &g, std::vector<Vertex> vertices, std::uint64_t k, Provenance p) {
	std::sort(vertices.begin(), vertices.end());
	vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
	if (vertices.empty() || edge_count_induced(g, vertices) != k)
		throw InvariantViolation("decomposition produced a set without exactly " + std::to_string(k) + " edges");
	return {std::move(vertices), k, p};
}

std::size_t as_size(const std::optional<std::uint64_t> &v) {
	return v ? static_cast<std::size_t>(*v) : kUnbounded;
}

[[noreturn]] void ramsey_exhausted(std::uint64_t k, std::size_t pool) {
	throw RamseyExhausted("ramsey_exhausted: no clique or independent set of size " + std::to_string(k)
	                      + " among " + std::to_string(pool) + " vertices");
}

// Large W1: the general bipartite split on (W1, V2 \ {v0}), then a
// k-clique or k-independent set among the us. v0 is adjacent to all of W1,
// so it is left out of the split; each u keeps p_k - 1 neighbours there.
Witness large_w1(const Graph &g, std::uint64_t k, const Thresholds &t, Vertex v0, const VertexSet &w1,
                 const VertexSet &v2, std::size_t p) {
	if (p < 2)
		throw RamseyExhausted("ramsey_exhausted: p_k = " + std::to_string(p) + " leaves no room beside v0");
	VertexSet others = v2;
	others.reset(v0);
	const SplitOutcome split = bipartite_split_general(g, w1, others, p, p, p - 1);
	const auto found = find_clique_or_is(g, k, Bitset::from_list(g.order(), split.us));
	if (!found)
		ramsey_exhausted(k, split.us.size());
	auto s = found->members.to_vector();
	if (found->kind == CliqueOrIS::Kind::independent_set) {
		s.push_back(v0);
		return checked(g, std::move(s), k, Provenance::apex_independent_set);
	}
	if (split.kind == SplitOutcome::Kind::star_side) {
		const VertexSet b = Bitset::from_list(g.order(), split.vs);
		if (BigInt(b.count()) >= t.ramsey_bound())
			return extract_from_apex(g, v0, found->members, b, k, t);
		return apex_witness(g, v0, found->members, b, k);
	}
	std::vector<Vertex> us, vs;
	for (std::size_t i = 0; i < split.us.size(); ++i)
		if (found->members.test(split.us[i])) {
			us.push_back(split.us[i]);
			vs.push_back(split.vs[i]);
		}
	return extract_from_cm(g, us, vs, k);
}

// Large N(W2) ∩ V2: the plain bipartite split on (N(W2) ∩ V2, W2) can only
// end on the matching side; the clique or independent set lives in W2.
Witness large_w2_boundary(const Graph &g, std::uint64_t k, Vertex v0, const VertexSet &boundary,
                          const VertexSet &w2, std::size_t p) {
	const SplitOutcome split = bipartite_split(g, boundary, w2, p, p);
	if (split.kind == SplitOutcome::Kind::star_side)
		throw InvariantViolation("star side in the W2 split: vertex " + std::to_string(split.vs.front())
		                         + " of W2 has at least p_k neighbours in V2");
	const auto found = find_clique_or_is(g, k, Bitset::from_list(g.order(), split.vs));
	if (!found)
		ramsey_exhausted(k, split.vs.size());
	if (found->kind == CliqueOrIS::Kind::independent_set) {
		auto s = found->members.to_vector();
		s.push_back(v0);
		return checked(g, std::move(s), k, Provenance::apex_independent_set);
	}
	std::vector<Vertex> us, vs;
	for (std::size_t i = 0; i < split.vs.size(); ++i)
		if (found->members.test(split.vs[i])) {
			us.push_back(split.vs[i]);
			vs.push_back(split.us[i]);
		}
	return extract_from_cm(g, us, vs, k);
}

// Pieces are connected vertex sets with at least one edge. A nice witness is
// a union of pairwise non-adjacent pieces; they are generated in order of
// their lowest vertex, each piece by ESU-style extension from its root.
class PieceSearch {
public:
	PieceSearch(const Graph &g, std::size_t cap) : g_{g}, cap_{cap} { }

	bool run(const VertexSet &blocked, std::uint64_t remaining, Vertex start) {
		if (remaining == 0) {
			found_ = chosen_;
			return true;
		}
		for (Vertex v = start; v < g_.order(); ++v) {
			if (blocked.test(v) || chosen_.size() >= cap_)
				continue;
			VertexSet sub = g_.empty_set();
			sub.set(v);
			VertexSet ext = (g_.neighbors(v) - blocked) - below_or_at(v);
			chosen_.push_back(v);
			const bool ok = grow(sub, g_.neighbors(v), ext, 0, v, blocked, remaining);
			chosen_.pop_back();
			if (ok)
				return true;
		}
		return false;
	}

	const std::vector<Vertex> &found() const { return found_; }

private:
	VertexSet below_or_at(Vertex v) const {
		VertexSet s = g_.empty_set();
		for (Vertex u = 0; u <= v; ++u)
			s.set(u);
		return s;
	}

	bool grow(const VertexSet &sub, const VertexSet &sub_nbrs, VertexSet ext, std::uint64_t edges, Vertex root,
	          const VertexSet &blocked, std::uint64_t remaining) {
		if (edges >= 1) {
			VertexSet next_blocked = blocked | sub | sub_nbrs;
			if (run(next_blocked, remaining - edges, root + 1))
				return true;
		}
		if (chosen_.size() >= cap_)
			return false;
		const VertexSet floor = below_or_at(root);
		while (ext.any()) {
			const auto w = static_cast<Vertex>(ext.find_first());
			ext.reset(w);
			const auto added = intersection_count(g_.neighbors(w), sub);
			if (edges + added > remaining)
				continue;
			VertexSet next_sub = sub;
			next_sub.set(w);
			const VertexSet exclusive = ((g_.neighbors(w) - sub) - sub_nbrs) - blocked - floor;
			chosen_.push_back(w);
			const bool ok = grow(next_sub, sub_nbrs | g_.neighbors(w), ext | exclusive, edges + added, root,
			                     blocked, remaining);
			chosen_.pop_back();
			if (ok)
				return true;
		}
		return false;
	}

	const Graph &g_;
	std::size_t cap_;
	std::vector<Vertex> chosen_;
	std::vector<Vertex> found_;
};

SolveResult fallback(const Graph &g, std::uint64_t k, const SolverConfig &cfg, const std::string &reason) {
	auto w = bounded_witness_search(g, k, cfg.search_cap());
	if (w)
		w->provenance = Provenance::fallback_search;
	return {std::move(w), "fallback:" + reason};
}

SolveResult exhaustive(const Graph &g, std::uint64_t k, const SolverConfig &cfg, std::string route) {
	return {bounded_witness_search(g, k, cfg.search_cap()), std::move(route)};
}

bool overridden(const SolverConfig &cfg) {
	return cfg.mode == SolverMode::test_overridden || cfg.thresholds.overridden();
}

// Three pairwise non-adjacent parts, each large enough to hold a
// ((k-1)^2 + 1)-clique or independent set.
SolveResult final_branch(const Graph &g, std::uint64_t k, const SolverConfig &cfg, const VertexSet (&parts)[3]) {
	for (int i = 0; i < 3; ++i)
		for (int j = i + 1; j < 3; ++j)
			if (neighborhood(g, parts[i]).intersects(parts[j]))
				throw InvariantViolation("final branch parts " + std::to_string(i + 1) + " and "
				                         + std::to_string(j + 1) + " are adjacent");

	const std::size_t size = (k - 1) * (k - 1) + 1;
	VertexSet cliques[3];
	for (int i = 0; i < 3; ++i) {
		const auto found = find_clique_or_is(g, size, parts[i]);
		if (!found) {
			if (overridden(cfg))
				return fallback(g, k, cfg, "final_branch_undersized");
			throw InvariantViolation("final branch part " + std::to_string(i + 1) + " is too small");
		}
		if (found->kind == CliqueOrIS::Kind::independent_set)
			return {extract_from_large_is(g, found->members, k), "final_branch"};
		cliques[i] = found->members;
	}
	return {extract_from_three_cliques(g, cliques[0], cliques[1], cliques[2], k), "final_branch"};
}

SolveResult decomposition_route(const Graph &g, std::uint64_t k, const SolverConfig &cfg) {
	const auto &t = cfg.thresholds;
	const DecomposeOutcome out = decompose(g, k, cfg);
	if (out.kind == DecomposeOutcome::Kind::degree_extreme)
		return exhaustive(g, k, cfg, "degree_extreme");
	if (out.kind == DecomposeOutcome::Kind::witness_found)
		return {out.witness, "decompose"};

	const SplitParts &top = *out.split;
	if (auto err = check_split_invariants(g, top, t))
		throw InvariantViolation("split invariant: " + *err);

	const std::size_t d = std::min(as_size(t.d0_u64()), g.order());
	const bool left_extreme = is_degree_extreme(g.induced(top.v1).first, d);
	const bool right_extreme = is_degree_extreme(g.induced(top.v2).first, d);
	if (left_extreme && right_extreme) {
		encode_bridge(g, top.v1, top.v2, top.b, d);
		return exhaustive(g, k, cfg, "bridge");
	}

	const VertexSet &side = left_extreme ? top.v2 : top.v1;
	const VertexSet &other = left_extreme ? top.v1 : top.v2;
	auto [sub, map] = g.induced(side);
	const DecomposeOutcome inner = decompose(sub, k, cfg);
	if (inner.kind == DecomposeOutcome::Kind::witness_found) {
		Witness w = *inner.witness;
		w.vertices = map.lift(w.vertices);
		std::sort(w.vertices.begin(), w.vertices.end());
		return {std::move(w), "decompose_nested"};
	}
	if (inner.kind == DecomposeOutcome::Kind::degree_extreme)
		throw InvariantViolation("side that is not degree-extreme was reported degree-extreme");
	if (auto err = check_split_invariants(sub, *inner.split, t))
		throw InvariantViolation("nested split invariant: " + *err);

	const VertexSet b0 = top.b | map.lift(inner.split->b);
	const VertexSet parts[3] = {map.lift(inner.split->v1) - b0, map.lift(inner.split->v2) - b0, other - b0};
	return final_branch(g, k, cfg, parts);
}

SolveResult solve_core(const Graph &g, std::uint64_t k, const SolverConfig &cfg) {
	if (g.edge_count() == 0)
		return {std::nullopt, "edgeless"};
	if (k == 1) {
		const Edge e = g.edges().front();
		return {Witness{{e.u, e.v}, 1, Provenance::trivial}, "single_edge"};
	}
	if (cfg.small_degree_trigger) {
		std::size_t max_degree = 0;
		for (Vertex v = 0; v < g.order(); ++v)
			max_degree = std::max(max_degree, g.degree(v));
		const std::uint64_t km1sq = saturating_mul(k - 1, k - 1);
		for (std::size_t d = 1; d <= max_degree; ++d)
			if (small_degree_vertices(g, d).count() > saturating_mul(d + 1, km1sq))
				return {extract_from_small_degree(g, d, k), "small_degree"};
	}
	try {
		return decomposition_route(g, k, cfg);
	} catch (const RamseyExhausted &) {
		if (!overridden(cfg))
			throw;
		return fallback(g, k, cfg, "ramsey_exhausted");
	}
}

} // namespace

SolverConfig SolverConfig::paper(std::uint64_t k) {
	return SolverConfig{Thresholds{k}, std::nullopt, SolverMode::paper_faithful, true};
}

SolverConfig SolverConfig::with_overrides(std::uint64_t k, const ThresholdOverrides &overrides) {
	return SolverConfig{Thresholds{k, overrides}, std::nullopt,
	                    overrides.any() ? SolverMode::test_overridden : SolverMode::paper_faithful, true};
}

std::size_t SolverConfig::search_cap() const {
	return witness_search_cap.value_or(static_cast<std::size_t>(saturating_mul(2, thresholds.k())));
}

std::string_view to_string(DecomposeOutcome::Kind kind) {
	switch (kind) {
	case DecomposeOutcome::Kind::degree_extreme: return "degree_extreme";
	case DecomposeOutcome::Kind::witness_found: return "witness_found";
	case DecomposeOutcome::Kind::split: return "split";
	}
	return "unknown";
}

DecomposeOutcome decompose(const Graph &g, std::uint64_t k, const SolverConfig &cfg) {
	const auto &t = cfg.thresholds;
	const std::size_t n = g.order();
	const auto d_opt = t.d0_u64();
	if (!d_opt || *d_opt >= n || is_degree_extreme(g, static_cast<std::size_t>(*d_opt)))
		return {};
	const auto d = static_cast<std::size_t>(*d_opt);

	Vertex v0 = 0;
	while (!(g.degree(v0) > d && g.degree(v0) + 1 + d < n))
		++v0;
	const VertexSet v1 = g.neighbors(v0);
	const VertexSet v2 = g.all_vertices() - v1;
	const std::size_t p = as_size(t.p_k_u64());

	VertexSet w1 = g.empty_set();
	v1.for_each([&](Vertex u) {
		if (intersection_count(g.neighbors(u), v2) >= p)
			w1.set(u);
	});
	const VertexSet w2 = v1 - w1;

	DecomposeOutcome out;
	if (const auto bound = t.claim1_bound_u64(); bound && w1.count() > *bound) {
		out.kind = DecomposeOutcome::Kind::witness_found;
		out.witness = large_w1(g, k, t, v0, w1, v2, p);
		return out;
	}
	const VertexSet boundary = neighborhood(g, w2) & v2;
	if (const auto bound = t.claim2_bound_u64(); bound && boundary.count() > *bound) {
		out.kind = DecomposeOutcome::Kind::witness_found;
		out.witness = large_w2_boundary(g, k, v0, boundary, w2, p);
		return out;
	}
	out.kind = DecomposeOutcome::Kind::split;
	out.split = SplitParts{v1, v2, w1 | boundary, v0, w1, w2};
	return out;
}

std::optional<std::string> check_split_invariants(const Graph &g, const SplitParts &parts, const Thresholds &t) {
	const std::size_t n = g.order();
	if (parts.v1.intersects(parts.v2) || (parts.v1 | parts.v2).count() != n)
		return "V1 and V2 do not partition V";
	const std::size_t d = as_size(t.d0_u64());
	if (parts.v1.count() <= d)
		return "|V1| = " + std::to_string(parts.v1.count()) + " is not above D = " + std::to_string(d);
	if (d == kUnbounded || parts.v2.count() <= d + 1)
		return "|V2| = " + std::to_string(parts.v2.count()) + " is not above D + 1";
	std::optional<std::string> problem;
	parts.v1.for_each([&](Vertex u) {
		if (problem || parts.b.test(u))
			return;
		if (auto w = ((g.neighbors(u) & parts.v2) - parts.b).find_first(); w != Bitset::npos)
			problem = "edge " + std::to_string(u) + "-" + std::to_string(w) + " misses B";
	});
	if (problem)
		return problem;
	if (const auto cap = t.b_cap_u64(); cap && parts.b.count() > *cap)
		return "|B| = " + std::to_string(parts.b.count()) + " exceeds " + std::to_string(*cap);
	return std::nullopt;
}

std::optional<Witness> bounded_witness_search(const Graph &g, std::uint64_t k, std::size_t cap) {
	if (g.empty() || cap == 0)
		return std::nullopt;
	if (k == 0)
		return Witness{{0}, 0, Provenance::bounded_search};
	if (k > g.edge_count())
		return std::nullopt;
	PieceSearch search{g, cap};
	if (!search.run(g.empty_set(), k, 0))
		return std::nullopt;
	return checked(g, search.found(), k, Provenance::bounded_search);
}

SolveResult solve(const Graph &g, std::uint64_t k, const SolverConfig &cfg) {
	if (cfg.mode == SolverMode::paper_faithful && cfg.search_cap() < saturating_mul(2, k))
		throw PreconditionError("witness search cap must be at least 2k in paper-faithful mode");
	if (k == 0) {
		if (g.empty())
			return {std::nullopt, "empty_graph"};
		return {Witness{{0}, 0, Provenance::trivial}, "single_vertex"};
	}
	auto [core, map] = remove_isolated(g);
	SolveResult result = solve_core(core, k, cfg);
	if (result.witness) {
		auto &w = *result.witness;
		w.vertices = map.lift(w.vertices);
		std::sort(w.vertices.begin(), w.vertices.end());
		if (!verify_witness(g, w))
			throw InvariantViolation("witness from route '" + result.route + "' failed verification");
	}
	return result;
}

} // namespace kedge
