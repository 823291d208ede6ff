#pragma once

// Configurations (conflict-free, downward-closed sets) and traces (maximal ones).

#include <vector>

#include "lesc/les.hpp"

namespace lesc {

/// How the solver-side maximality formula quantifies over events.
enum class MaximalityRule {
	/// Only events outside the selection must be blocked (the sound reading).
	unselected_only,
	/// Every event must be blocked, selected or not. Kept as a regression probe:
	/// it rejects every nonempty configuration.
	all_events,
};

bool is_conflict_free(const EventSet& c, const Relation& conflict);
bool is_downward_closed(const EventSet& c, const Relation& causality);
bool is_configuration(const EventSet& c, const EventStructure& model);

/// Configuration with no strict superset configuration. Checks single-event extensions.
bool is_trace(const EventSet& c, const EventStructure& model);

/// For every blocked-candidate z: some selected y conflicts with z, or some immediate
/// predecessor of z is unselected. Throws NotAConfiguration.
bool is_maximal_conf_smt(const EventSet& c, const EventStructure& model,
                         MaximalityRule rule = MaximalityRule::unselected_only);

/// Lexicographic order of the id-sorted member sequences (a proper prefix sorts first).
bool lex_less(const EventStructure& model, const EventSet& a, const EventSet& b);

class Configuration {
public:
	/// Throws NotAConfiguration.
	Configuration(const EventStructure& model, EventSet events);
	const EventSet& events() const { return events_; }

private:
	EventSet events_;
};

class Trace {
public:
	/// Throws NotATrace.
	Trace(const EventStructure& model, EventSet events);
	const EventSet& events() const { return events_; }
	const ModelName& model() const { return model_; }
	friend bool operator==(const Trace&, const Trace&) = default;

private:
	EventSet events_;
	ModelName model_;
};

/// All traces of `model`, sorted by lex_less.
std::vector<Trace> enumerate_traces(const EventStructure& model);

} // namespace lesc
