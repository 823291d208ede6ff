#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lesc/gamma.hpp"
#include "lesc/les.hpp"
#include "lesc/schedule.hpp"

namespace lesc {

/// An event addressed by (model position, event index).
struct EventRef {
	std::size_t model = 0;
	std::size_t event = 0;
	friend auto operator<=>(const EventRef&, const EventRef&) = default;
};

/// Models to compose, the label-conflict set and per-model start offsets.
class CompositionProblem {
public:
	CompositionProblem() = default;
	/// Missing offsets default to 0. Throws DuplicateName, UnknownModel, std::invalid_argument.
	CompositionProblem(std::vector<EventStructure> models, LabelConflictSet gamma,
	                   const std::map<ModelName, Clock>& offsets = {});

	const std::vector<EventStructure>& models() const { return models_; }
	const EventStructure& model(std::size_t m) const { return models_.at(m); }
	std::size_t model_count() const { return models_.size(); }
	const LabelConflictSet& gamma() const { return gamma_; }
	Clock offset(std::size_t m) const { return offsets_.at(m); }
	std::map<ModelName, Clock> offsets() const;

	std::optional<std::size_t> find_model(const std::string& name) const;
	/// Throws UnknownModel.
	std::size_t model_index(const std::string& name) const;
	/// Throws UnknownEvent / UnknownModel.
	EventRef find_event(const std::string& qualified) const;

	std::string qualified(EventRef r) const { return model(r.model).id(r.event).qualified(); }
	const EventAttributes& attributes(EventRef r) const { return model(r.model).attributes(r.event); }
	std::size_t event_count() const;

	/// Same models and gamma, new offsets (missing ones default to 0).
	CompositionProblem with_offsets(const std::map<ModelName, Clock>& offsets) const;
	CompositionProblem with_gamma(LabelConflictSet gamma) const;

private:
	std::vector<EventStructure> models_;
	LabelConflictSet gamma_;
	std::vector<Clock> offsets_;
};

/// Selected trace, its rank function and clocks for one model.
struct ModelSchedule {
	EventSet selection;
	RankFunction rank;
	ModelClocks clocks;

	friend bool operator==(const ModelSchedule&, const ModelSchedule&) = default;
};

struct PairScore {
	EventRef first;
	EventRef second;
	std::int64_t score = 0;
	friend bool operator==(const PairScore&, const PairScore&) = default;
};

struct ObjectiveBreakdown {
	/// event_scores[m][e]; 0 for unselected events.
	std::vector<std::vector<std::int64_t>> event_scores;
	/// Nonzero ordered cross-model pair scores, sorted by (first, second).
	std::vector<PairScore> pair_scores;
	std::int64_t total = 0;

	friend bool operator==(const ObjectiveBreakdown&, const ObjectiveBreakdown&) = default;
};

struct ScheduledTrace {
	std::vector<ModelSchedule> models;
	ObjectiveBreakdown breakdown;

	friend bool operator==(const ScheduledTrace&, const ScheduledTrace&) = default;
};

/// Builds a ModelSchedule from an execution order of selected events.
/// Throws NotATrace / InvalidRank.
ModelSchedule make_model_schedule(const CompositionProblem& problem, std::size_t m,
                                  const std::vector<std::size_t>& selected_sequence);

/// Tie-break order: per model in declaration order, the rank-ordered sequence of
/// selected ids compared lexicographically.
bool schedule_less(const CompositionProblem& problem, const std::vector<ModelSchedule>& a,
                   const std::vector<ModelSchedule>& b);

/// Rank-ordered sequence of selected local ids.
std::vector<std::string> selected_sequence_ids(const EventStructure& model, const ModelSchedule& s);

} // namespace lesc
