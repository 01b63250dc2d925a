#include "kedge/arithmetic.hpp"

#include <cmath>
#include <limits>
#include <mutex>

#include "kedge/errors.hpp"

namespace kedge {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();
// About 1 GiB of limbs.
constexpr std::uint64_t kMaxMaterialisedBits = std::uint64_t{1} << 33;

// Largest m with C(m,2) <= t.
std::uint64_t triangular_root(std::uint64_t t) {
	auto m = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(t))) / 2.0);
	while (m > 0 && triangular(m) > t)
		--m;
	while (triangular(m + 1) <= t)
		++m;
	return m;
}

// Smallest m <= cap with C(m,2) == t, if any.
std::optional<std::uint64_t> exact_triangular_index(std::uint64_t t, std::uint64_t cap) {
	if (t == 0)
		return 0;
	const auto m = triangular_root(t);
	if (triangular(m) != t || m > cap)
		return std::nullopt;
	return m;
}

BigInt pow2(std::uint64_t e) {
	BigInt x = 1;
	x <<= static_cast<unsigned long>(e);
	return x;
}

BigInt big_pow(const BigInt &base, const BigInt &exp) {
	return boost::multiprecision::pow(base, static_cast<unsigned>(exp.convert_to<unsigned long>()));
}

// Lower bound on log2((p-1)^(p+1)), saturating.
std::uint64_t claim1_bits_lower_bound(const BigInt &p) {
	if (p <= 2)
		return 0;
	const auto bits_p_minus_1 = static_cast<std::uint64_t>(msb(BigInt(p - 1)));
	auto exp = to_u64(BigInt(p + 1));
	if (!exp)
		return kU64Max;
	return saturating_mul(bits_p_minus_1, *exp);
}

void require_positive(const std::optional<BigInt> &v, const char *name) {
	if (v && *v < 1)
		throw PreconditionError(std::string("override ") + name + " must be >= 1");
}

} // namespace

std::uint64_t triangular(std::uint64_t m) {
	if (m < 2)
		return 0;
	return (m % 2 == 0) ? (m / 2) * (m - 1) : m * ((m - 1) / 2);
}

TriangularSplit max_triangular_le(std::uint64_t k) {
	const auto k0 = triangular_root(k);
	return {k0, k - triangular(k0)};
}

EurekaTriple eureka(std::uint64_t k) {
	// k0 must satisfy 3 * C(k0,2) >= k; start at the smallest such k0.
	std::uint64_t k0 = triangular_root(k / 3);
	while (k0 > 0 && triangular(k0 - 1) >= k / 3)
		--k0;
	while (triangular(k0) < k / 3)
		++k0;
	for (; triangular(k0) <= k; ++k0) {
		const auto rem = k - triangular(k0);
		// k2 <= k1 forces 2 * C(k1,2) >= rem.
		std::uint64_t k1 = triangular_root(rem / 2);
		while (k1 > 0 && 2 * triangular(k1 - 1) >= rem)
			--k1;
		while (2 * triangular(k1) < rem)
			++k1;
		for (; k1 <= k0 && triangular(k1) <= rem; ++k1) {
			if (auto k2 = exact_triangular_index(rem - triangular(k1), k1))
				return {k0, k1, *k2};
		}
	}
	throw InvariantViolation("no three-triangular decomposition of " + std::to_string(k));
}

struct Thresholds::Lazy {
	std::once_flag once;
	BigInt claim1_bound;
	BigInt b_cap;
	BigInt d0;
};

Thresholds::Thresholds(std::uint64_t k, ThresholdOverrides overrides)
: k_{k}, overrides_{std::move(overrides)}, lazy_{std::make_shared<Lazy>()} {
	require_positive(overrides_.ramsey_bound, "ramsey_bound");
	require_positive(overrides_.p_k, "p_k");
	require_positive(overrides_.d0, "d0");
	ramsey_bound_ = overrides_.ramsey_bound.value_or(pow2(2 * k));
	p_k_ = overrides_.p_k.value_or(pow2(2 * k));
	claim2_bound_ = (p_k_ - 1) * (p_k_ - 1);
}

const BigInt &Thresholds::claim1_bound() const {
	std::call_once(lazy_->once, [this] {
		if (claim1_bits_lower_bound(p_k_) > kMaxMaterialisedBits)
			throw PreconditionError("(p_k - 1)^(p_k + 1) is too large to materialise for k = "
			                        + std::to_string(k_));
		lazy_->claim1_bound = big_pow(p_k_ - 1, p_k_ + 1);
		lazy_->b_cap = lazy_->claim1_bound + claim2_bound_;
		lazy_->d0 = overrides_.d0 ? *overrides_.d0 : 2 * lazy_->b_cap + final_branch_floor();
	});
	return lazy_->claim1_bound;
}

const BigInt &Thresholds::b_cap() const {
	claim1_bound();
	return lazy_->b_cap;
}

const BigInt &Thresholds::d0() const {
	claim1_bound();
	return lazy_->d0;
}

BigInt Thresholds::final_branch_floor() const {
	const std::uint64_t km1 = k_ == 0 ? 1 : k_ - 1;
	return pow2(2 * (km1 * km1 + 1));
}

std::optional<std::uint64_t> Thresholds::ramsey_bound_u64() const { return to_u64(ramsey_bound_); }
std::optional<std::uint64_t> Thresholds::p_k_u64() const { return to_u64(p_k_); }
std::optional<std::uint64_t> Thresholds::claim2_bound_u64() const { return to_u64(claim2_bound_); }

std::optional<std::uint64_t> Thresholds::claim1_bound_u64() const {
	if (claim1_bits_lower_bound(p_k_) >= 64)
		return std::nullopt;
	return to_u64(claim1_bound());
}

std::optional<std::uint64_t> Thresholds::b_cap_u64() const {
	if (claim1_bits_lower_bound(p_k_) >= 64)
		return std::nullopt;
	return to_u64(b_cap());
}

std::optional<std::uint64_t> Thresholds::d0_u64() const {
	if (overrides_.d0)
		return to_u64(*overrides_.d0);
	// d0 > b_cap >= claim1_bound, and d0 >= final_branch_floor.
	const std::uint64_t km1 = k_ == 0 ? 1 : k_ - 1;
	if (claim1_bits_lower_bound(p_k_) >= 64 || km1 >= 6)
		return std::nullopt;
	return to_u64(d0());
}

Thresholds thresholds_for(std::uint64_t k, const ThresholdOverrides &overrides) {
	return Thresholds{k, overrides};
}

BigInt local_treewidth_bound(std::uint64_t r, std::uint64_t d, std::uint64_t k) {
	const std::uint64_t km1 = k == 0 ? 0 : k - 1;
	const BigInt base = BigInt(d) + BigInt(d + 1) * km1 * km1;
	BigInt sum = 0;
	BigInt term = 1;
	for (std::uint64_t i = 0; i <= r; ++i) {
		sum += term;
		term *= base;
	}
	return sum;
}

std::optional<std::uint64_t> to_u64(const BigInt &x) {
	if (x == 0)
		return 0;
	if (x < 0 || msb(x) >= 64)
		return std::nullopt;
	return x.convert_to<std::uint64_t>();
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
	if (a != 0 && b > kU64Max / a)
		return kU64Max;
	return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
	std::uint64_t acc = 1;
	for (std::uint64_t i = 0; i < exp; ++i) {
		acc = saturating_mul(acc, base);
		if (acc == kU64Max || acc == 0)
			break;
	}
	return acc;
}

} // namespace kedge
