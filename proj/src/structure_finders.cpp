#include "kedge/structure_finders.hpp"

#include <algorithm>
#include <string>

#include "kedge/arithmetic.hpp"
#include "kedge/errors.hpp"

namespace kedge {

namespace {

// Branch and bound over candidate sets; `compatible(v)` returns the vertices
// that may join v in the solution (neighbours for cliques, non-neighbours for
// independent sets).
template <typename Compatible>
bool extend(std::vector<Vertex> &chosen, VertexSet candidates, std::size_t size, const Compatible &compatible) {
	if (chosen.size() == size)
		return true;
	while (candidates.any() && chosen.size() + candidates.count() >= size) {
		const auto v = static_cast<Vertex>(candidates.find_first());
		candidates.reset(v);
		chosen.push_back(v);
		if (extend(chosen, candidates & compatible(v), size, compatible))
			return true;
		chosen.pop_back();
	}
	return false;
}

template <typename Compatible>
std::optional<VertexSet> search(const Graph &g, std::size_t size, const VertexSet &within, const Compatible &compatible) {
	std::vector<Vertex> chosen;
	if (!extend(chosen, within, size, compatible))
		return std::nullopt;
	return Bitset::from_list(g.order(), chosen);
}

void require_in_graph(const Graph &g, const VertexSet &s, const char *name) {
	if (s.universe() != g.order())
		throw PreconditionError(std::string(name) + " is not a vertex set of this graph");
}

} // namespace

std::optional<VertexSet> find_clique(const Graph &g, std::size_t size, const VertexSet &within) {
	require_in_graph(g, within, "within");
	return search(g, size, within, [&](Vertex v) -> const Bitset & { return g.neighbors(v); });
}

std::optional<VertexSet> find_independent_set(const Graph &g, std::size_t size, const VertexSet &within) {
	require_in_graph(g, within, "within");
	return search(g, size, within, [&](Vertex v) {
		Bitset non = within - g.neighbors(v);
		non.reset(v);
		return non;
	});
}

std::optional<CliqueOrIS> find_clique_or_is(const Graph &g, std::size_t size, const VertexSet &within) {
	if (size == 0)
		return CliqueOrIS{CliqueOrIS::Kind::independent_set, g.empty_set()};
	if (auto c = find_clique(g, size, within))
		return CliqueOrIS{CliqueOrIS::Kind::clique, std::move(*c)};
	if (auto s = find_independent_set(g, size, within))
		return CliqueOrIS{CliqueOrIS::Kind::independent_set, std::move(*s)};
	const auto guarantee = saturating_pow(4, size);
	if (within.count() >= guarantee)
		throw InvariantViolation("no clique or independent set of size " + std::to_string(size)
		                         + " among " + std::to_string(within.count()) + " vertices");
	return std::nullopt;
}

namespace {

void check_split_preconditions(const Graph &g, const VertexSet &a, const VertexSet &b,
                               std::size_t m, std::size_t n, std::size_t p) {
	require_in_graph(g, a, "A");
	require_in_graph(g, b, "B");
	if (m == 0 || n == 0 || p == 0)
		throw PreconditionError("m, n and p must be positive");
	if (auto common = (a & b).find_first(); common != Bitset::npos)
		throw PreconditionError("A and B share vertex " + std::to_string(common));
	a.for_each([&](Vertex u) {
		if (intersection_count(g.neighbors(u), b) < p)
			throw PreconditionError("vertex " + std::to_string(u) + " of A has fewer than "
			                        + std::to_string(p) + " neighbours in B");
	});
	const auto bound = saturating_mul(m - 1, saturating_pow(n - 1, p));
	if (a.count() <= bound)
		throw PreconditionError("|A| = " + std::to_string(a.count()) + " does not exceed (m-1)(n-1)^p = "
		                        + std::to_string(bound));
}

std::vector<Vertex> first_n(const VertexSet &s, std::size_t n) {
	std::vector<Vertex> out;
	for (auto v = s.find_first(); v != Bitset::npos && out.size() < n; v = s.find_next(v))
		out.push_back(static_cast<Vertex>(v));
	return out;
}

SplitOutcome split_unchecked(const Graph &g, VertexSet a, VertexSet b, std::size_t m, std::size_t n) {
	std::vector<std::pair<Vertex, Vertex>> peeled;
	auto finish_matching = [&](Vertex u, Vertex v) {
		SplitOutcome out{SplitOutcome::Kind::matching_side, {u}, {v}};
		for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
			out.us.push_back(it->first);
			out.vs.push_back(it->second);
		}
		return out;
	};

	while (true) {
		if (a.none() || b.none())
			throw InvariantViolation("bipartite split ran out of vertices");
		if (n == 1) {
			const auto u = static_cast<Vertex>(a.find_first());
			const auto v = static_cast<Vertex>((g.neighbors(u) & b).find_first());
			return finish_matching(u, v);
		}
		for (auto v = b.find_first(); v != Bitset::npos; v = b.find_next(v)) {
			const Bitset hits = g.neighbors(static_cast<Vertex>(v)) & a;
			if (hits.count() >= m) {
				if (!peeled.empty())
					throw InvariantViolation("star side reached after peeling a matching pair");
				return {SplitOutcome::Kind::star_side, first_n(hits, m), {static_cast<Vertex>(v)}};
			}
		}
		const auto v = static_cast<Vertex>(b.find_first());
		b.reset(v);
		std::optional<Vertex> stranded;
		for (auto u = a.find_first(); u != Bitset::npos; u = a.find_next(u)) {
			if (!g.neighbors(static_cast<Vertex>(u)).intersects(b)) {
				stranded = static_cast<Vertex>(u);
				break;
			}
		}
		if (!stranded)
			continue;
		peeled.emplace_back(*stranded, v);
		a -= g.neighbors(v);
		--n;
	}
}

} // namespace

SplitOutcome bipartite_split(const Graph &g, const VertexSet &a, const VertexSet &b, std::size_t m, std::size_t n) {
	check_split_preconditions(g, a, b, m, n, 1);
	return split_unchecked(g, a, b, m, n);
}

SplitOutcome bipartite_split_general(const Graph &g, const VertexSet &a, const VertexSet &b,
                                     std::size_t m, std::size_t n, std::size_t p) {
	check_split_preconditions(g, a, b, m, n, p);
	if (p == 1)
		return split_unchecked(g, a, b, m, n);

	const auto widened = saturating_mul(m - 1, saturating_pow(n - 1, p - 1)) + 1;
	SplitOutcome first = split_unchecked(g, a, b, widened, n);
	if (first.kind == SplitOutcome::Kind::matching_side)
		return first;

	const Vertex v = first.vs.front();
	VertexSet narrowed_a = Bitset::from_list(g.order(), first.us);
	VertexSet narrowed_b = b;
	narrowed_b.reset(v);
	SplitOutcome rest = bipartite_split_general(g, narrowed_a, narrowed_b, m, n, p - 1);
	if (rest.kind == SplitOutcome::Kind::star_side)
		rest.vs.push_back(v);
	return rest;
}

bool split_outcome_valid(const Graph &g, const SplitOutcome &out) {
	if (out.kind == SplitOutcome::Kind::star_side) {
		for (Vertex u : out.us)
			for (Vertex v : out.vs)
				if (!g.adjacent(u, v))
					return false;
		return true;
	}
	if (out.us.size() != out.vs.size())
		return false;
	for (std::size_t i = 0; i < out.us.size(); ++i)
		for (std::size_t j = 0; j < out.vs.size(); ++j)
			if (g.adjacent(out.us[i], out.vs[j]) != (i == j))
				return false;
	return true;
}

VertexSet greedy_scattered(const Graph &g, const VertexSet &s, std::size_t r) {
	require_in_graph(g, s, "S");
	VertexSet chosen{g.order()};
	VertexSet covered{g.order()};
	s.for_each([&](Vertex v) {
		if (covered.test(v))
			return;
		chosen.set(v);
		covered |= r_ball(g, v, r);
	});
	return chosen;
}

std::pair<Graph, VertexMapping> scattered_reduce(const Graph &g, const VertexSet &s, std::size_t r) {
	const VertexSet t = greedy_scattered(g, s, r);
	return g.induced(r_ball(g, t, 2 * r));
}

bool scattered_exhaustive(const Graph &g, const VertexSet &s, std::size_t ell, std::size_t r) {
	require_in_graph(g, s, "S");
	const auto members = s.to_vector();
	std::vector<Edge> far;
	for (std::size_t i = 0; i < members.size(); ++i) {
		const VertexSet ball = r_ball(g, members[i], r);
		for (std::size_t j = i + 1; j < members.size(); ++j)
			if (!ball.test(members[j]))
				far.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
	}
	const Graph far_graph = Graph::from_edges(members.size(), far);
	return find_clique(far_graph, ell, far_graph.all_vertices()).has_value();
}

bool is_scattered(const Graph &g, const VertexSet &s, std::size_t ell, std::size_t r) {
	require_in_graph(g, s, "S");
	if (ell == 0)
		return true;
	if (s.count() < ell)
		return false;
	if (greedy_scattered(g, s, r).count() >= ell)
		return true;
	auto [reduced, map] = scattered_reduce(g, s, r);
	return scattered_exhaustive(reduced, map.restrict(s), ell, r);
}

bool dominated_diameter_check(const Graph &g, const VertexSet &s) {
	require_in_graph(g, s, "S");
	const VertexSet dominated = neighborhood(g, s) | s;
	if (dominated.count() != g.order())
		throw PreconditionError("S is not a dominating set");
	if (!is_connected(g))
		throw PreconditionError("graph is not connected");
	const std::size_t bound = 3 * s.count() - 1;
	for (Vertex v = 0; v < g.order(); ++v)
		for (const auto &d : distances_from(g, v))
			if (*d > bound)
				return false;
	return true;
}

} // namespace kedge
