#include "lesc/relation.hpp"

namespace lesc {

EventSet EventSet::from_mask(std::size_t universe, std::uint64_t mask) {
	EventSet s(universe);
	if(!s.words_.empty()) {
		s.words_[0] = universe >= 64 ? mask : mask & ((std::uint64_t{1} << universe) - 1);
	}
	return s;
}

EventSet EventSet::complement() const {
	EventSet out(universe_);
	for(std::size_t i = 0; i < universe_; ++i) {
		if(!test(i)) out.set(i);
	}
	return out;
}

Relation Relation::identity(std::size_t n) {
	Relation r(n);
	for(std::size_t i = 0; i < n; ++i) r.set(i, i);
	return r;
}

EventSet Relation::column(std::size_t j) const {
	EventSet out(size());
	for(std::size_t i = 0; i < size(); ++i) {
		if(test(i, j)) out.set(i);
	}
	return out;
}

Relation Relation::transposed() const {
	Relation t(size());
	for(std::size_t i = 0; i < size(); ++i) {
		rows_[i].for_each([&](std::size_t j) { t.set(j, i); });
	}
	return t;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
	std::vector<std::pair<std::size_t, std::size_t>> out;
	for(std::size_t i = 0; i < size(); ++i) {
		rows_[i].for_each([&](std::size_t j) { out.emplace_back(i, j); });
	}
	return out;
}

std::size_t Relation::pair_count() const {
	std::size_t c = 0;
	for(const auto& r : rows_) c += r.count();
	return c;
}

} // namespace lesc
