#include "lesc/config_trace.hpp"

#include <algorithm>

namespace lesc {

namespace {

void check_universe(const EventSet& c, std::size_t n) {
	if(c.universe() != n) {
		throw UnknownEvent("event set over " + std::to_string(c.universe()) + " events used with a model of " +
		                   std::to_string(n));
	}
}

std::vector<std::size_t> topological_order(const EventStructure& model) {
	// Sorting by number of causal predecessors is a valid linearization of a partial order.
	std::vector<std::size_t> order = model.id_order();
	std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
		return model.causality().column(a).count() < model.causality().column(b).count();
	});
	return order;
}

} // namespace

bool is_conflict_free(const EventSet& c, const Relation& conflict) {
	check_universe(c, conflict.size());
	bool ok = true;
	c.for_each([&](std::size_t e) { ok = ok && !conflict.row(e).intersects(c); });
	return ok;
}

bool is_downward_closed(const EventSet& c, const Relation& causality) {
	check_universe(c, causality.size());
	for(std::size_t e = 0; e < causality.size(); ++e) {
		if(!c.test(e) && causality.row(e).intersects(c)) return false;
	}
	return true;
}

bool is_configuration(const EventSet& c, const EventStructure& model) {
	return is_conflict_free(c, model.conflict()) && is_downward_closed(c, model.causality());
}

bool is_trace(const EventSet& c, const EventStructure& model) {
	if(!is_configuration(c, model)) return false;
	for(std::size_t z = 0; z < model.size(); ++z) {
		if(c.test(z)) continue;
		EventSet strict_preds = model.causality().column(z);
		strict_preds.reset(z);
		if(strict_preds.is_subset_of(c) && !model.conflict().row(z).intersects(c)) return false;
	}
	return true;
}

bool is_maximal_conf_smt(const EventSet& c, const EventStructure& model, MaximalityRule rule) {
	if(!is_configuration(c, model)) {
		throw NotAConfiguration(model.format_set(c) + " is not a configuration of " + model.name());
	}
	const Relation& g = model.immediate();
	for(std::size_t z = 0; z < model.size(); ++z) {
		if(rule == MaximalityRule::unselected_only && c.test(z)) continue;
		const bool selected_conflict = model.conflict().row(z).intersects(c);
		const bool unselected_pred = !immediate_predecessors(g, z).is_subset_of(c);
		if(!selected_conflict && !unselected_pred) return false;
	}
	return true;
}

bool lex_less(const EventStructure& model, const EventSet& a, const EventSet& b) {
	const auto& order = model.id_order();
	for(std::size_t r = 0; r < order.size(); ++r) {
		const bool in_a = a.test(order[r]);
		if(in_a == b.test(order[r])) continue;
		const EventSet& other = in_a ? b : a;
		bool other_continues = false;
		for(std::size_t s = r + 1; s < order.size() && !other_continues; ++s) other_continues = other.test(order[s]);
		return in_a ? other_continues : !other_continues;
	}
	return false;
}

Configuration::Configuration(const EventStructure& model, EventSet events) : events_(std::move(events)) {
	if(!is_configuration(events_, model)) {
		throw NotAConfiguration(model.format_set(events_) + " is not a configuration of " + model.name());
	}
}

Trace::Trace(const EventStructure& model, EventSet events) : events_(std::move(events)), model_(model.name()) {
	if(!is_trace(events_, model)) {
		throw NotATrace(model.format_set(events_) + " is not a trace of " + model.name());
	}
}

std::vector<Trace> enumerate_traces(const EventStructure& model) {
	const auto order = topological_order(model);
	const Relation& conflict = model.conflict();
	std::vector<EventSet> found;
	EventSet current(model.size());

	// Events decided so far are order[0..pos); later events are still open.
	auto recurse = [&](auto&& self, std::size_t pos) -> void {
		if(pos == order.size()) {
			if(is_trace(current, model)) found.push_back(current);
			return;
		}
		const std::size_t v = order[pos];
		EventSet preds = model.causality().column(v);
		preds.reset(v);
		const bool addable = preds.is_subset_of(current) && !conflict.row(v).intersects(current);
		if(addable) {
			current.set(v);
			self(self, pos + 1);
			current.reset(v);
			// Leaving v out only yields a trace if a later event can still block it.
			bool blockable = false;
			for(std::size_t q = pos + 1; q < order.size() && !blockable; ++q) {
				const std::size_t w = order[q];
				blockable = conflict.test(v, w) && !conflict.row(w).intersects(current);
			}
			if(blockable) self(self, pos + 1);
		} else {
			self(self, pos + 1);
		}
	};
	recurse(recurse, 0);

	std::sort(found.begin(), found.end(), [&](const EventSet& a, const EventSet& b) { return lex_less(model, a, b); });
	std::vector<Trace> traces;
	traces.reserve(found.size());
	for(auto& s : found) traces.emplace_back(model, std::move(s));
	return traces;
}

} // namespace lesc
