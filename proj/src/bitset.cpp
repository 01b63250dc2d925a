#include "kedge/bitset.hpp"

#include <cassert>

#include "kedge/errors.hpp"

namespace kedge {

Bitset Bitset::from_list(std::size_t universe, std::span<const Vertex> members) {
	Bitset s{universe};
	for (Vertex v : members) {
		if (v >= universe)
			throw PreconditionError("vertex " + std::to_string(v) + " outside universe of size "
			                        + std::to_string(universe));
		s.set(v);
	}
	return s;
}

Bitset Bitset::full(std::size_t universe) {
	Bitset s{universe};
	for (auto &w : s.words_)
		w = ~std::uint64_t{0};
	if (universe % 64 != 0 && !s.words_.empty())
		s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
	return s;
}

void Bitset::clear() {
	for (auto &w : words_)
		w = 0;
}

std::size_t Bitset::count() const {
	std::size_t c = 0;
	for (auto w : words_)
		c += static_cast<std::size_t>(std::popcount(w));
	return c;
}

bool Bitset::any() const {
	for (auto w : words_)
		if (w)
			return true;
	return false;
}

bool Bitset::is_subset_of(const Bitset &other) const {
	assert(universe_ == other.universe_);
	for (std::size_t i = 0; i < words_.size(); ++i)
		if (words_[i] & ~other.words_[i])
			return false;
	return true;
}

bool Bitset::intersects(const Bitset &other) const {
	assert(universe_ == other.universe_);
	for (std::size_t i = 0; i < words_.size(); ++i)
		if (words_[i] & other.words_[i])
			return true;
	return false;
}

Bitset &Bitset::operator&=(const Bitset &other) {
	assert(universe_ == other.universe_);
	for (std::size_t i = 0; i < words_.size(); ++i)
		words_[i] &= other.words_[i];
	return *this;
}

Bitset &Bitset::operator|=(const Bitset &other) {
	assert(universe_ == other.universe_);
	for (std::size_t i = 0; i < words_.size(); ++i)
		words_[i] |= other.words_[i];
	return *this;
}

Bitset &Bitset::operator-=(const Bitset &other) {
	assert(universe_ == other.universe_);
	for (std::size_t i = 0; i < words_.size(); ++i)
		words_[i] &= ~other.words_[i];
	return *this;
}

std::vector<Vertex> Bitset::to_vector() const {
	std::vector<Vertex> out;
	out.reserve(count());
	for_each([&](Vertex v) { out.push_back(v); });
	return out;
}

std::size_t Bitset::find_next_from(std::size_t i) const {
	if (i >= universe_)
		return npos;
	std::size_t w = i >> 6;
	std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (i & 63));
	while (true) {
		if (bits)
			return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
		if (++w >= words_.size())
			return npos;
		bits = words_[w];
	}
}

std::size_t intersection_count(const Bitset &a, const Bitset &b) {
	assert(a.universe_ == b.universe_);
	std::size_t c = 0;
	for (std::size_t i = 0; i < a.words_.size(); ++i)
		c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
	return c;
}

} // namespace kedge
