#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kedge/arithmetic.hpp"
#include "kedge/graph.hpp"

namespace kedge {

/// Which construction produced a witness.
enum class Provenance {
	trivial,
	independent_set_matching,
	clique_matching,
	apex,
	three_cliques,
	large_independent_set,
	small_degree,
	apex_independent_set, // independent set plus the splitting vertex v0
	bounded_search,
	fallback_search,
};

std::string_view to_string(Provenance p);

/// A vertex set S with exactly k induced edges.
struct Witness {
	std::vector<Vertex> vertices; // ascending
	std::uint64_t k = 0;
	Provenance provenance = Provenance::trivial;
};

/// u_1..u_k independent, u_i ~ v_j iff i == j.
struct IsmCertificate {
	std::vector<Vertex> us;
	std::vector<Vertex> vs;
};

/// u_1..u_k a clique, u_i ~ v_j iff i == j, all 2k vertices distinct.
struct CliqueMatchingCertificate {
	std::vector<Vertex> us;
	std::vector<Vertex> vs;
};

/// A a clique of size >= k, B of size >= the Ramsey bound, v0 adjacent to all
/// of A and to none of B, A fully joined to B.
struct ApexCertificate {
	Vertex v0;
	std::vector<Vertex> a;
	std::vector<Vertex> b;
};

/// Three disjoint cliques of size >= k with no edges between them.
struct ThreeCliquesCertificate {
	std::vector<Vertex> s1;
	std::vector<Vertex> s2;
	std::vector<Vertex> s3;
};

/// An independent set of size >= (k-1)^2 + 1 in a graph without isolated vertices.
struct LargeIsCertificate {
	std::vector<Vertex> s;
};

/// More than (d+1)(k-1)^2 vertices of degree in [1, d].
struct SmallDegreeCertificate {
	std::size_t d;
};

using StructureCertificate = std::variant<IsmCertificate, CliqueMatchingCertificate, ApexCertificate,
                                          ThreeCliquesCertificate, LargeIsCertificate,
                                          SmallDegreeCertificate>;

std::string_view certificate_kind(const StructureCertificate &cert);

// Validation raises CertificateError naming the violated condition.
void validate(const Graph &g, const IsmCertificate &c, std::uint64_t k);
void validate(const Graph &g, const CliqueMatchingCertificate &c, std::uint64_t k);
void validate(const Graph &g, const ApexCertificate &c, std::uint64_t k, const Thresholds &t);
void validate(const Graph &g, const ThreeCliquesCertificate &c, std::uint64_t k);
void validate(const Graph &g, const LargeIsCertificate &c, std::uint64_t k);
void validate(const Graph &g, const SmallDegreeCertificate &c, std::uint64_t k);

Witness extract_from_ism(const Graph &g, std::span<const Vertex> us, std::span<const Vertex> vs, std::uint64_t k);
Witness extract_from_cm(const Graph &g, std::span<const Vertex> us, std::span<const Vertex> vs, std::uint64_t k);
/// `t` supplies the Ramsey requirement on |B|.
Witness extract_from_apex(const Graph &g, Vertex v0, const VertexSet &a, const VertexSet &b, std::uint64_t k,
                          const Thresholds &t);
/// The apex construction without the |B| requirement. Raises RamseyExhausted
/// when B holds neither a k-clique nor a k-independent set.
Witness apex_witness(const Graph &g, Vertex v0, const VertexSet &a, const VertexSet &b, std::uint64_t k);
Witness extract_from_three_cliques(const Graph &g, const VertexSet &s1, const VertexSet &s2, const VertexSet &s3,
                                   std::uint64_t k);
Witness extract_from_large_is(const Graph &g, const VertexSet &s, std::uint64_t k);
Witness extract_from_small_degree(const Graph &g, std::size_t d, std::uint64_t k);

/// Dispatches on the certificate kind. `t` is consulted by apex certificates only.
Witness extract(const Graph &g, const StructureCertificate &cert, std::uint64_t k, const Thresholds &t);

/// True iff S is nonempty-checked and G[S] has exactly k edges. In strict
/// mode G[S] must also have no isolated vertex.
bool verify_witness(const Graph &g, const VertexSet &s, std::uint64_t k, bool strict = false);
bool verify_witness(const Graph &g, const Witness &w);

} // namespace kedge
