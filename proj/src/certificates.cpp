#include "kedge/certificates.hpp"

#include <algorithm>

#include "kedge/errors.hpp"
#include "kedge/structure_finders.hpp"

namespace kedge {

std::string_view to_string(Provenance p) {
	switch (p) {
	case Provenance::trivial: return "trivial";
	case Provenance::independent_set_matching: return "independent_set_matching";
	case Provenance::clique_matching: return "clique_matching";
	case Provenance::apex: return "apex";
	case Provenance::three_cliques: return "three_cliques";
	case Provenance::large_independent_set: return "large_independent_set";
	case Provenance::small_degree: return "small_degree";
	case Provenance::apex_independent_set: return "apex_independent_set";
	case Provenance::bounded_search: return "bounded_search";
	case Provenance::fallback_search: return "fallback_search";
	}
	return "unknown";
}

std::string_view certificate_kind(const StructureCertificate &cert) {
	static constexpr std::string_view names[] = {"ism", "clique_matching", "apex",
	                                             "three_cliques", "large_is", "small_degree"};
	return names[cert.index()];
}

namespace {

Witness make_witness(const Graph &g, std::vector<Vertex> vertices, std::uint64_t k, Provenance p) {
	std::sort(vertices.begin(), vertices.end());
	vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
	if (vertices.empty() || edge_count_induced(g, vertices) != k)
		throw InvariantViolation("construction '" + std::string(to_string(p)) + "' did not yield "
		                         + std::to_string(k) + " induced edges");
	return {std::move(vertices), k, p};
}

Witness single_vertex(const Graph &g) {
	if (g.empty())
		throw PreconditionError("graph has no vertices");
	return {{0}, 0, Provenance::trivial};
}

void check_range(const Graph &g, std::span<const Vertex> vs, const char *what) {
	for (Vertex v : vs)
		if (v >= g.order())
			throw CertificateError("range", std::string(what) + " vertex " + std::to_string(v) + " out of range");
}

void check_distinct(std::vector<Vertex> all) {
	std::sort(all.begin(), all.end());
	if (auto it = std::adjacent_find(all.begin(), all.end()); it != all.end())
		throw CertificateError("distinct", "vertex " + std::to_string(*it) + " listed twice");
}

// u_i ~ v_j iff i == j
void check_matching(const Graph &g, std::span<const Vertex> us, std::span<const Vertex> vs, const char *cond) {
	for (std::size_t i = 0; i < us.size(); ++i)
		for (std::size_t j = 0; j < vs.size(); ++j)
			if (g.adjacent(us[i], vs[j]) != (i == j))
				throw CertificateError(cond, "u" + std::to_string(i + 1) + " and v" + std::to_string(j + 1)
				                                 + (i == j ? " are not adjacent" : " are adjacent"));
}

void check_sizes(std::span<const Vertex> us, std::span<const Vertex> vs, std::uint64_t k) {
	if (us.size() != k || vs.size() != k)
		throw CertificateError("size", "expected " + std::to_string(k) + " us and vs, got "
		                                   + std::to_string(us.size()) + " and " + std::to_string(vs.size()));
}

// Largest prefix length p <= limit of `vs` whose induced edge count stays
// within `budget`; returns (p, edges of that prefix).
std::pair<std::size_t, std::uint64_t> longest_prefix_within(const Graph &g, std::span<const Vertex> vs,
                                                            std::size_t limit, std::uint64_t budget) {
	std::size_t len = 0;
	std::uint64_t edges = 0;
	while (len < limit) {
		std::uint64_t added = 0;
		for (std::size_t j = 0; j < len; ++j)
			added += g.adjacent(vs[len], vs[j]) ? 1 : 0;
		if (edges + added > budget)
			break;
		edges += added;
		++len;
	}
	return {len, edges};
}

std::vector<Vertex> as_list(const VertexSet &s) { return s.to_vector(); }

} // namespace

void validate(const Graph &g, const IsmCertificate &c, std::uint64_t k) {
	check_sizes(c.us, c.vs, k);
	check_range(g, c.us, "u");
	check_range(g, c.vs, "v");
	std::vector<Vertex> all = c.us;
	all.insert(all.end(), c.vs.begin(), c.vs.end());
	check_distinct(all);
	check_matching(g, c.us, c.vs, "IM1");
	if (!is_independent(g, Bitset::from_list(g.order(), c.us)))
		throw CertificateError("IM2", "u vertices are not independent");
}

void validate(const Graph &g, const CliqueMatchingCertificate &c, std::uint64_t k) {
	check_sizes(c.us, c.vs, k);
	check_range(g, c.us, "u");
	check_range(g, c.vs, "v");
	std::vector<Vertex> all = c.us;
	all.insert(all.end(), c.vs.begin(), c.vs.end());
	check_distinct(all);
	check_matching(g, c.us, c.vs, "CM1");
	if (!is_clique(g, Bitset::from_list(g.order(), c.us)))
		throw CertificateError("CM2", "u vertices are not a clique");
}

void validate(const Graph &g, const ApexCertificate &c, std::uint64_t k, const Thresholds &t) {
	check_range(g, std::span<const Vertex>(&c.v0, 1), "apex");
	check_range(g, c.a, "A");
	check_range(g, c.b, "B");
	check_distinct(c.a);
	check_distinct(c.b);
	const VertexSet a = Bitset::from_list(g.order(), c.a);
	const VertexSet b = Bitset::from_list(g.order(), c.b);
	if (a.intersects(b))
		throw CertificateError("A1", "A and B are not disjoint");
	if (c.a.size() < k)
		throw CertificateError("A1", "|A| = " + std::to_string(c.a.size()) + " < k");
	if (BigInt(c.b.size()) < t.ramsey_bound())
		throw CertificateError("A1", "|B| = " + std::to_string(c.b.size()) + " is below the Ramsey bound "
		                                 + t.ramsey_bound().str());
	if (!is_clique(g, a))
		throw CertificateError("A2", "A is not a clique");
	if (!a.is_subset_of(g.neighbors(c.v0)))
		throw CertificateError("A3", "some vertex of A is not adjacent to v0");
	if (b.intersects(g.neighbors(c.v0)))
		throw CertificateError("A3", "some vertex of B is adjacent to v0");
	for (Vertex u : c.a)
		if (!b.is_subset_of(g.neighbors(u)))
			throw CertificateError("A4", "vertex " + std::to_string(u) + " of A misses part of B");
}

void validate(const Graph &g, const ThreeCliquesCertificate &c, std::uint64_t k) {
	const std::vector<Vertex> *parts[] = {&c.s1, &c.s2, &c.s3};
	std::vector<Vertex> all;
	for (const auto *p : parts) {
		check_range(g, *p, "clique");
		all.insert(all.end(), p->begin(), p->end());
	}
	check_distinct(all);
	for (const auto *p : parts) {
		if (p->size() < k)
			throw CertificateError("size", "clique of size " + std::to_string(p->size()) + " < k");
		if (!is_clique(g, Bitset::from_list(g.order(), *p)))
			throw CertificateError("clique", "a part is not a clique");
	}
	for (int i = 0; i < 3; ++i)
		for (int j = i + 1; j < 3; ++j)
			for (Vertex u : *parts[i])
				for (Vertex v : *parts[j])
					if (g.adjacent(u, v))
						throw CertificateError("cross_edge", "edge " + std::to_string(u) + "-" + std::to_string(v)
						                                         + " joins two cliques");
	const auto split = eureka(k);
	if (c.s1.size() < split.k0 || c.s2.size() < split.k1 || c.s3.size() < split.k2)
		throw CertificateError("size", "cliques too small for the decomposition of " + std::to_string(k));
}

void validate(const Graph &g, const LargeIsCertificate &c, std::uint64_t k) {
	if (k == 0)
		throw CertificateError("k", "large independent set certificates need k >= 1");
	check_range(g, c.s, "S");
	check_distinct(c.s);
	for (Vertex v = 0; v < g.order(); ++v)
		if (g.degree(v) == 0)
			throw CertificateError("isolated", "vertex " + std::to_string(v) + " is isolated");
	if (!is_independent(g, Bitset::from_list(g.order(), c.s)))
		throw CertificateError("independent", "S is not independent");
	if (c.s.size() < (k - 1) * (k - 1) + 1)
		throw CertificateError("size", "|S| = " + std::to_string(c.s.size()) + " < (k-1)^2 + 1");
}

void validate(const Graph &g, const SmallDegreeCertificate &c, std::uint64_t k) {
	if (k == 0 || c.d == 0)
		throw CertificateError("k", "small degree certificates need k, d >= 1");
	const auto have = small_degree_vertices(g, c.d).count();
	const auto need = saturating_mul(c.d + 1, (k - 1) * (k - 1));
	if (have <= need)
		throw CertificateError("size", std::to_string(have) + " vertices of degree in [1," + std::to_string(c.d)
		                                   + "], need more than " + std::to_string(need));
}

Witness extract_from_ism(const Graph &g, std::span<const Vertex> us, std::span<const Vertex> vs, std::uint64_t k) {
	validate(g, IsmCertificate{{us.begin(), us.end()}, {vs.begin(), vs.end()}}, k);
	if (k == 0)
		return single_vertex(g);
	// Longest v-prefix with at most k internal edges; top up with matched us.
	const auto [kp, ell] = longest_prefix_within(g, vs, k, k);
	std::vector<Vertex> chosen(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(kp));
	chosen.insert(chosen.end(), us.begin(), us.begin() + static_cast<std::ptrdiff_t>(k - ell));
	return make_witness(g, std::move(chosen), k, Provenance::independent_set_matching);
}

Witness extract_from_cm(const Graph &g, std::span<const Vertex> us, std::span<const Vertex> vs, std::uint64_t k) {
	validate(g, CliqueMatchingCertificate{{us.begin(), us.end()}, {vs.begin(), vs.end()}}, k);
	if (k == 0)
		return single_vertex(g);
	if (k == 1)
		return make_witness(g, {us[0], vs[0]}, k, Provenance::clique_matching);
	if (k == 2)
		return make_witness(g, {us[0], us[1], vs[0]}, k, Provenance::clique_matching);

	// k = C(k0,2) + r: a k0-clique from the us supplies C(k0,2) edges; the
	// longest v-prefix within budget r supplies ell more, and r - ell of the
	// matched us close the gap.
	const auto [k0, r] = max_triangular_le(k);
	const auto [rp, ell] = longest_prefix_within(g, vs, r, r);
	std::vector<Vertex> chosen(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(rp));
	for (std::size_t i = 0; i < r - ell; ++i)
		chosen.push_back(us[i]);
	for (std::size_t i = rp; i < rp + k0 - r + ell; ++i)
		chosen.push_back(us[i]);
	return make_witness(g, std::move(chosen), k, Provenance::clique_matching);
}

Witness extract_from_apex(const Graph &g, Vertex v0, const VertexSet &a, const VertexSet &b, std::uint64_t k,
                          const Thresholds &t) {
	validate(g, ApexCertificate{v0, as_list(a), as_list(b)}, k, t);
	return apex_witness(g, v0, a, b, k);
}

Witness apex_witness(const Graph &g, Vertex v0, const VertexSet &a, const VertexSet &b, std::uint64_t k) {
	if (k == 0)
		return single_vertex(g);
	const auto first_a = static_cast<Vertex>(a.find_first());
	if (k == 1)
		return make_witness(g, {v0, first_a}, k, Provenance::apex);

	auto found = find_clique_or_is(g, k, b);
	if (!found)
		throw RamseyExhausted("ramsey_exhausted: B contains no clique or independent set of size "
		                      + std::to_string(k));
	auto members = found->members.to_vector();
	if (found->kind == CliqueOrIS::Kind::independent_set) {
		members.push_back(first_a);
		return make_witness(g, std::move(members), k, Provenance::apex);
	}
	const auto [k0, r] = max_triangular_le(k);
	std::vector<Vertex> chosen{v0};
	const auto a_list = as_list(a);
	chosen.insert(chosen.end(), a_list.begin(), a_list.begin() + static_cast<std::ptrdiff_t>(r));
	chosen.insert(chosen.end(), members.begin(), members.begin() + static_cast<std::ptrdiff_t>(k0 - r));
	return make_witness(g, std::move(chosen), k, Provenance::apex);
}

Witness extract_from_three_cliques(const Graph &g, const VertexSet &s1, const VertexSet &s2, const VertexSet &s3,
                                   std::uint64_t k) {
	ThreeCliquesCertificate cert{as_list(s1), as_list(s2), as_list(s3)};
	validate(g, cert, k);
	if (k == 0)
		return single_vertex(g);
	const auto split = eureka(k);
	std::vector<Vertex> chosen;
	auto take = [&](const std::vector<Vertex> &from, std::uint64_t count) {
		chosen.insert(chosen.end(), from.begin(), from.begin() + static_cast<std::ptrdiff_t>(count));
	};
	take(cert.s1, split.k0);
	take(cert.s2, split.k1);
	take(cert.s3, split.k2);
	return make_witness(g, std::move(chosen), k, Provenance::three_cliques);
}

Witness extract_from_large_is(const Graph &g, const VertexSet &s, std::uint64_t k) {
	validate(g, LargeIsCertificate{as_list(s)}, k);
	const auto split = bipartite_split(g, s, neighborhood(g, s), k, k);
	if (split.kind == SplitOutcome::Kind::star_side) {
		std::vector<Vertex> chosen = split.us;
		chosen.push_back(split.vs.front());
		return make_witness(g, std::move(chosen), k, Provenance::large_independent_set);
	}
	Witness w = extract_from_ism(g, split.us, split.vs, k);
	w.provenance = Provenance::large_independent_set;
	return w;
}

Witness extract_from_small_degree(const Graph &g, std::size_t d, std::uint64_t k) {
	validate(g, SmallDegreeCertificate{d}, k);
	// Each pick removes itself and at most d neighbours from the pool.
	const std::uint64_t target = (k - 1) * (k - 1) + 1;
	VertexSet pool = small_degree_vertices(g, d);
	VertexSet chosen = g.empty_set();
	while (chosen.count() < target) {
		const auto v = pool.find_first();
		if (v == Bitset::npos)
			throw InvariantViolation("small degree pool exhausted");
		chosen.set(v);
		pool.reset(v);
		pool -= g.neighbors(static_cast<Vertex>(v));
	}
	auto [core, map] = remove_isolated(g);
	Witness w = extract_from_large_is(core, map.restrict(chosen), k);
	return make_witness(g, map.lift(w.vertices), k, Provenance::small_degree);
}

Witness extract(const Graph &g, const StructureCertificate &cert, std::uint64_t k, const Thresholds &t) {
	return std::visit(
		[&](const auto &c) -> Witness {
			using T = std::decay_t<decltype(c)>;
			if constexpr (std::is_same_v<T, IsmCertificate>)
				return extract_from_ism(g, c.us, c.vs, k);
			else if constexpr (std::is_same_v<T, CliqueMatchingCertificate>)
				return extract_from_cm(g, c.us, c.vs, k);
			else if constexpr (std::is_same_v<T, ApexCertificate>)
				return extract_from_apex(g, c.v0, Bitset::from_list(g.order(), c.a),
				                         Bitset::from_list(g.order(), c.b), k, t);
			else if constexpr (std::is_same_v<T, ThreeCliquesCertificate>)
				return extract_from_three_cliques(g, Bitset::from_list(g.order(), c.s1),
				                                  Bitset::from_list(g.order(), c.s2),
				                                  Bitset::from_list(g.order(), c.s3), k);
			else if constexpr (std::is_same_v<T, LargeIsCertificate>)
				return extract_from_large_is(g, Bitset::from_list(g.order(), c.s), k);
			else
				return extract_from_small_degree(g, c.d, k);
		},
		cert);
}

bool verify_witness(const Graph &g, const VertexSet &s, std::uint64_t k, bool strict) {
	if (edge_count_induced(g, s) != k)
		return false;
	if (!strict)
		return true;
	bool ok = true;
	s.for_each([&](Vertex v) {
		if (!g.neighbors(v).intersects(s))
			ok = false;
	});
	return ok;
}

bool verify_witness(const Graph &g, const Witness &w) {
	if (w.vertices.empty())
		return false;
	for (Vertex v : w.vertices)
		if (v >= g.order())
			return false;
	return verify_witness(g, Bitset::from_list(g.order(), w.vertices), w.k);
}

} // namespace kedge
