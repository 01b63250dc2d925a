#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include <boost/multiprecision/gmp.hpp>

namespace kedge {

using BigInt = boost::multiprecision::mpz_int;

/// C(m, 2) = m(m-1)/2, with C(0,2) = C(1,2) = 0.
std::uint64_t triangular(std::uint64_t m);

struct TriangularSplit {
	std::uint64_t k0;
	std::uint64_t r;
	bool operator==(const TriangularSplit &) const = default;
};

/// Largest k0 with C(k0,2) <= k (ties at k = 0 go to k0 = 1), and
/// r = k - C(k0,2).
TriangularSplit max_triangular_le(std::uint64_t k);

struct EurekaTriple {
	std::uint64_t k0;
	std::uint64_t k1;
	std::uint64_t k2;
	bool operator==(const EurekaTriple &) const = default;
};

/// Writes k as C(k0,2) + C(k1,2) + C(k2,2) with k0 >= k1 >= k2, choosing the
/// lexicographically smallest such triple.
EurekaTriple eureka(std::uint64_t k);

/// Test-mode replacements for the parameter-dependent constants. Each present
/// value is used everywhere the constant appears.
struct ThresholdOverrides {
	std::optional<BigInt> ramsey_bound;
	std::optional<BigInt> p_k;
	std::optional<BigInt> d0;

	bool any() const { return ramsey_bound || p_k || d0; }
};

/// The constants the decomposition algorithm is parameterised by:
///
///   ramsey_bound = 2^(2k)                       (upper bound on R_k)
///   p_k          = 2^(2k)
///   b_cap        = (p_k - 1)^(p_k + 1) + (p_k - 1)^2
///   d0           = 2 * b_cap + 2^(2((k-1)^2 + 1))
///
/// All values are exact. b_cap and d0 outgrow memory quickly (p_k = 2^20 at
/// k = 10), so they are materialised on first access only; the `*_u64`
/// accessors answer machine-size comparisons from a bit-length estimate
/// without materialising.
class Thresholds {
public:
	explicit Thresholds(std::uint64_t k, ThresholdOverrides overrides = {});

	std::uint64_t k() const { return k_; }
	bool overridden() const { return overrides_.any(); }
	const ThresholdOverrides &overrides() const { return overrides_; }

	const BigInt &ramsey_bound() const { return ramsey_bound_; }
	const BigInt &p_k() const { return p_k_; }
	/// (p_k - 1)^(p_k + 1): the W1 size beyond which a witness is forced.
	const BigInt &claim1_bound() const;
	/// (p_k - 1)^2: the N(W2) ∩ V2 size beyond which a witness is forced.
	const BigInt &claim2_bound() const { return claim2_bound_; }
	const BigInt &b_cap() const;
	const BigInt &d0() const;
	/// 2^(2((k-1)^2 + 1)), which equals d0 - 2*b_cap without overrides.
	BigInt final_branch_floor() const;

	// nullopt means "larger than any 64-bit value".
	std::optional<std::uint64_t> ramsey_bound_u64() const;
	std::optional<std::uint64_t> p_k_u64() const;
	std::optional<std::uint64_t> claim1_bound_u64() const;
	std::optional<std::uint64_t> claim2_bound_u64() const;
	std::optional<std::uint64_t> b_cap_u64() const;
	std::optional<std::uint64_t> d0_u64() const;

private:
	struct Lazy;

	std::uint64_t k_;
	ThresholdOverrides overrides_;
	BigInt ramsey_bound_;
	BigInt p_k_;
	BigInt claim2_bound_;
	std::shared_ptr<Lazy> lazy_;
};

Thresholds thresholds_for(std::uint64_t k, const ThresholdOverrides &overrides = {});

/// Sum_{i=0..r} (d + (d+1)(k-1)^2)^i. Bounds |N_r(v)| in the Gaifman graph of
/// a degree-extreme encoding whose small-degree class is below the
/// small-degree trigger, and therefore its local tree-width.
BigInt local_treewidth_bound(std::uint64_t r, std::uint64_t d, std::uint64_t k);

std::optional<std::uint64_t> to_u64(const BigInt &x);

// Saturating helpers for size preconditions.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

} // namespace kedge
