#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace lesc {

/// Fixed-universe set of event indices, stored as packed 64-bit words.
class EventSet {
public:
	EventSet() = default;
	explicit EventSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) { }

	/// Builds a set from the low bits of `mask` (bit i <=> event i).
	static EventSet from_mask(std::size_t universe, std::uint64_t mask);

	std::size_t universe() const { return universe_; }

	bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
	void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
	void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

	std::size_t count() const {
		std::size_t c = 0;
		for(auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
		return c;
	}
	bool empty() const {
		for(auto w : words_) if(w) return false;
		return true;
	}
	bool intersects(const EventSet& other) const {
		for(std::size_t i = 0; i < words_.size(); ++i) if(words_[i] & other.words_[i]) return true;
		return false;
	}
	bool is_subset_of(const EventSet& other) const {
		for(std::size_t i = 0; i < words_.size(); ++i) if(words_[i] & ~other.words_[i]) return false;
		return true;
	}

	EventSet& operator|=(const EventSet& other) {
		for(std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
		return *this;
	}
	EventSet& operator&=(const EventSet& other) {
		for(std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
		return *this;
	}
	/// Set difference.
	EventSet& operator-=(const EventSet& other) {
		for(std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
		return *this;
	}
	friend EventSet operator|(EventSet a, const EventSet& b) { return a |= b; }
	friend EventSet operator&(EventSet a, const EventSet& b) { return a &= b; }
	friend EventSet operator-(EventSet a, const EventSet& b) { return a -= b; }
	friend bool operator==(const EventSet&, const EventSet&) = default;

	template <typename F>
	void for_each(F f) const {
		for(std::size_t w = 0; w < words_.size(); ++w) {
			std::uint64_t bits = words_[w];
			while(bits) {
				f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
				bits &= bits - 1;
			}
		}
	}
	std::vector<std::size_t> members() const {
		std::vector<std::size_t> out;
		for_each([&](std::size_t i) { out.push_back(i); });
		return out;
	}

	/// Complement within the universe.
	EventSet complement() const;

private:
	std::size_t universe_ = 0;
	std::vector<std::uint64_t> words_;
};

/// Binary relation over {0..n-1}; row i holds the successors of i.
class Relation {
public:
	Relation() = default;
	explicit Relation(std::size_t n) : rows_(n, EventSet(n)) { }

	static Relation identity(std::size_t n);

	std::size_t size() const { return rows_.size(); }
	bool test(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
	void set(std::size_t i, std::size_t j) { rows_[i].set(j); }
	/// Sets (i,j) and (j,i).
	void set_symmetric(std::size_t i, std::size_t j) { rows_[i].set(j); rows_[j].set(i); }

	const EventSet& row(std::size_t i) const { return rows_[i]; }
	EventSet& row(std::size_t i) { return rows_[i]; }
	EventSet column(std::size_t j) const;

	Relation transposed() const;
	std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
	std::size_t pair_count() const;

	friend bool operator==(const Relation&, const Relation&) = default;

private:
	std::vector<EventSet> rows_;
};

} // namespace lesc
