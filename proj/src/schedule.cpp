#include "lesc/schedule.hpp"

#include <algorithm>

namespace lesc {

RankFunction rank_from_sequence(const EventStructure& model, const std::vector<std::size_t>& selected_sequence) {
	RankFunction r{model.name(), std::vector<std::size_t>(model.size(), 0)};
	std::size_t next = 1;
	EventSet placed(model.size());
	for(auto e : selected_sequence) {
		r.rank.at(e) = next++;
		placed.set(e);
	}
	// Unselected events: smallest id whose causal predecessors are all placed.
	while(next <= model.size()) {
		std::size_t pick = model.size();
		for(auto e : model.id_order()) {
			if(placed.test(e)) continue;
			if(pick == model.size()) pick = e;   // fallback when the sequence is not downward closed
			EventSet preds = model.causality().column(e);
			preds.reset(e);
			if(preds.is_subset_of(placed)) {
				pick = e;
				break;
			}
		}
		r.rank[pick] = next++;
		placed.set(pick);
	}
	return r;
}

std::vector<std::size_t> rank_ordered(const RankFunction& rank, const EventSet& selection) {
	std::vector<std::size_t> seq = selection.members();
	std::sort(seq.begin(), seq.end(), [&](auto a, auto b) { return rank.rank[a] < rank.rank[b]; });
	return seq;
}

bool validate_rank(const RankFunction& rank, const EventSet& selection, const Relation& causality) {
	const std::size_t n = causality.size();
	if(rank.rank.size() != n) throw UnknownEvent("rank function does not cover the model's events");
	if(selection.universe() != n) throw UnknownEvent("selection does not match the model's events");

	std::vector<bool> seen(n + 1, false);
	for(auto r : rank.rank) {
		if(r < 1 || r > n || seen[r]) return false;
		seen[r] = true;
	}
	for(auto [j, k] : causality.pairs()) {
		if(rank.rank[j] > rank.rank[k]) return false;
	}
	for(std::size_t j = 0; j < n; ++j) {
		if(!selection.test(j)) continue;
		for(std::size_t k = 0; k < n; ++k) {
			if(!selection.test(k) && rank.rank[j] >= rank.rank[k]) return false;
		}
	}
	return true;
}

std::vector<RankFunction> linear_extensions(const EventStructure& model, const EventSet& selection,
                                            std::size_t limit) {
	if(!is_trace(selection, model)) {
		throw NotATrace(model.format_set(selection) + " is not a trace of " + model.name());
	}
	std::vector<RankFunction> out;
	std::vector<std::size_t> sequence;
	EventSet placed(model.size());
	const std::size_t target = selection.count();

	auto recurse = [&](auto&& self) -> void {
		if(sequence.size() == target) {
			if(out.size() == limit) {
				throw TooLarge("more than " + std::to_string(limit) + " linear extensions of " + model.format_set(selection));
			}
			out.push_back(rank_from_sequence(model, sequence));
			return;
		}
		for(auto e : model.id_order()) {
			if(!selection.test(e) || placed.test(e)) continue;
			EventSet preds = model.causality().column(e);
			preds.reset(e);
			if(!preds.is_subset_of(placed)) continue;
			placed.set(e);
			sequence.push_back(e);
			self(self);
			sequence.pop_back();
			placed.reset(e);
		}
	};
	recurse(recurse);
	return out;
}

ModelClocks assign_clocks(const EventStructure& model, const RankFunction& rank, const EventSet& selection, Clock offset) {
	if(offset < 0) throw std::invalid_argument("negative offset for model " + model.name());
	if(!validate_rank(rank, selection, model.causality())) {
		throw InvalidRank("rank function for " + model.name() + " violates its constraints");
	}
	ModelClocks clocks{offset, std::vector<std::optional<Clock>>(model.size())};
	Clock t = offset;
	for(auto e : rank_ordered(rank, selection)) {
		clocks.start[e] = t;
		t += model.attributes(e).duration;
	}
	return clocks;
}

} // namespace lesc
