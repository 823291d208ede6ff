#pragma once

// Objective evaluation: event priorities plus overlap-gated label-conflict penalties.

#include <cstdint>
#include <vector>

#include "lesc/problem.hpp"

namespace lesc {

/// `z` when `x2 - x1` lies in the half-open window [0, y), else 0.
constexpr std::int64_t overlap_penalty(Clock x1, Clock x2, std::int64_t y, std::int64_t z) {
	const Clock distance = x2 - x1;
	return distance >= 0 && distance < y ? z : 0;
}

/// Sum of gamma weights over every label pair drawn from the two sets.
std::int64_t label_conflict_weight(const LabelSet& labels1, const LabelSet& labels2, const LabelConflictSet& gamma);

/// Priority when selected, else 0.
std::int64_t event_score(const EventStructure& model, std::size_t e, const EventSet& selection);

/// Penalty of j's span being hit by k's start; 0 unless both are selected.
/// Throws SameModel.
std::int64_t pair_score(const CompositionProblem& problem, EventRef j, EventRef k,
                        const std::vector<ModelSchedule>& schedules);

/// Recomputes the full breakdown after checking that every model schedule is a
/// trace with a valid rank and matching clocks. Throws InvalidSchedule.
ObjectiveBreakdown objective(const CompositionProblem& problem, const std::vector<ModelSchedule>& schedules);
inline ObjectiveBreakdown objective(const CompositionProblem& problem, const ScheduledTrace& schedule) {
	return objective(problem, schedule.models);
}

/// Throws InvalidSchedule when `schedule` is not internally consistent or its
/// breakdown differs from a fresh recomputation.
void revalidate(const CompositionProblem& problem, const ScheduledTrace& schedule);

/// Cross-model event pairs with a nonzero label-conflict weight, precomputed once
/// per problem for fast repeated evaluation.
class PenaltyTable {
public:
	struct Entry {
		EventRef a;   ///< a.model < b.model
		EventRef b;
		std::int64_t weight;
	};

	explicit PenaltyTable(const CompositionProblem& problem);

	const std::vector<Entry>& entries() const { return entries_; }

	/// Objective total for per-model selections and clocks, without validation.
	std::int64_t total(const CompositionProblem& problem, const std::vector<const EventSet*>& selections,
	                   const std::vector<const ModelClocks*>& clocks) const;

private:
	std::vector<Entry> entries_;
};

} // namespace lesc
