#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace kedge {

using Vertex = std::uint32_t;

// Fixed-universe dynamic bitset. Adjacency rows and vertex sets both use it,
// so set algebra and induced edge counts reduce to word-wise popcounts.
class Bitset {
public:
	static constexpr std::size_t npos = static_cast<std::size_t>(-1);

	Bitset() = default;
	explicit Bitset(std::size_t universe)
	: universe_{universe}, words_((universe + 63) / 64, 0) { }

	static Bitset from_list(std::size_t universe, std::span<const Vertex> members);
	static Bitset from_list(std::size_t universe, std::initializer_list<Vertex> members) {
		return from_list(universe, std::span<const Vertex>{members.begin(), members.size()});
	}
	static Bitset full(std::size_t universe);

	std::size_t universe() const { return universe_; }

	bool test(std::size_t i) const {
		return (words_[i >> 6] >> (i & 63)) & 1u;
	}
	void set(std::size_t i) {
		words_[i >> 6] |= std::uint64_t{1} << (i & 63);
	}
	void reset(std::size_t i) {
		words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
	}
	void clear();

	std::size_t count() const;
	bool any() const;
	bool none() const { return !any(); }

	std::size_t find_first() const { return find_next_from(0); }
	std::size_t find_next(std::size_t i) const { return find_next_from(i + 1); }

	bool is_subset_of(const Bitset &other) const;
	bool intersects(const Bitset &other) const;

	Bitset &operator&=(const Bitset &other);
	Bitset &operator|=(const Bitset &other);
	Bitset &operator-=(const Bitset &other);

	friend Bitset operator&(Bitset a, const Bitset &b) { return a &= b; }
	friend Bitset operator|(Bitset a, const Bitset &b) { return a |= b; }
	friend Bitset operator-(Bitset a, const Bitset &b) { return a -= b; }

	bool operator==(const Bitset &other) const = default;

	std::vector<Vertex> to_vector() const;

	template <typename F>
	void for_each(F &&f) const {
		for (std::size_t w = 0; w < words_.size(); ++w) {
			std::uint64_t bits = words_[w];
			while (bits) {
				const int b = std::countr_zero(bits);
				f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
				bits &= bits - 1;
			}
		}
	}

	std::span<const std::uint64_t> words() const { return words_; }

	friend std::size_t intersection_count(const Bitset &a, const Bitset &b);

private:
	std::size_t find_next_from(std::size_t i) const;

	std::size_t universe_ = 0;
	std::vector<std::uint64_t> words_;
};

std::size_t intersection_count(const Bitset &a, const Bitset &b);

using VertexSet = Bitset;

} // namespace kedge
