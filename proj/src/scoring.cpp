#include "lesc/scoring.hpp"

#include <algorithm>
#include <tuple>

#include "lesc/error.hpp"

namespace lesc {

void LabelConflictSet::add(const std::string& a, const std::string& b, std::int64_t weight) {
	if(weight >= 0) {
		throw NonNegativeWeight("label conflict (" + a + ", " + b + ") needs a negative weight, got " +
		                        std::to_string(weight));
	}
	pairs_[key(a, b)] = weight;
}

std::optional<std::int64_t> LabelConflictSet::weight(const std::string& a, const std::string& b) const {
	auto it = pairs_.find(key(a, b));
	if(it == pairs_.end()) return std::nullopt;
	return it->second;
}

std::vector<LabelConflictSet::Entry> LabelConflictSet::entries() const {
	std::vector<Entry> out;
	for(const auto& [k, w] : pairs_) out.push_back({k.first, k.second, w});
	return out;
}

std::int64_t label_conflict_weight(const LabelSet& labels1, const LabelSet& labels2, const LabelConflictSet& gamma) {
	std::int64_t sum = 0;
	if(gamma.empty()) return sum;
	for(const auto& a : labels1) {
		for(const auto& b : labels2) {
			if(auto w = gamma.weight(a, b)) sum += *w;
		}
	}
	return sum;
}

std::int64_t event_score(const EventStructure& model, std::size_t e, const EventSet& selection) {
	if(e >= model.size()) throw UnknownEvent("unknown event index " + std::to_string(e) + " in " + model.name());
	return selection.test(e) ? model.attributes(e).priority : 0;
}

std::int64_t pair_score(const CompositionProblem& problem, EventRef j, EventRef k,
                        const std::vector<ModelSchedule>& schedules) {
	if(j.model == k.model) {
		throw SameModel(problem.qualified(j) + " and " + problem.qualified(k) + " belong to the same model");
	}
	const auto& sj = schedules.at(j.model);
	const auto& sk = schedules.at(k.model);
	if(!sj.selection.test(j.event) || !sk.selection.test(k.event)) return 0;
	const auto& aj = problem.attributes(j);
	const auto& ak = problem.attributes(k);
	return overlap_penalty(*sj.clocks.start[j.event], *sk.clocks.start[k.event], aj.duration,
	                       label_conflict_weight(aj.labels, ak.labels, problem.gamma()));
}

namespace {

void check_schedule(const CompositionProblem& problem, const std::vector<ModelSchedule>& schedules) {
	if(schedules.size() != problem.model_count()) {
		throw InvalidSchedule("schedule covers " + std::to_string(schedules.size()) + " models, problem has " +
		                      std::to_string(problem.model_count()));
	}
	for(std::size_t m = 0; m < schedules.size(); ++m) {
		const auto& model = problem.model(m);
		const auto& s = schedules[m];
		const std::string where = "model " + model.name() + ": ";
		if(s.selection.universe() != model.size() || s.rank.rank.size() != model.size() ||
		   s.clocks.start.size() != model.size()) {
			throw InvalidSchedule(where + "schedule sized for a different event set");
		}
		if(!is_trace(s.selection, model)) throw InvalidSchedule(where + model.format_set(s.selection) + " is not a trace");
		if(!validate_rank(s.rank, s.selection, model.causality())) throw InvalidSchedule(where + "invalid rank function");
		if(s.clocks.offset != problem.offset(m)) throw InvalidSchedule(where + "offset differs from the problem's");
		if(s.clocks != assign_clocks(model, s.rank, s.selection, problem.offset(m))) {
			throw InvalidSchedule(where + "clocks do not follow ranks and durations");
		}
	}
}

} // namespace

ObjectiveBreakdown objective(const CompositionProblem& problem, const std::vector<ModelSchedule>& schedules) {
	check_schedule(problem, schedules);
	ObjectiveBreakdown out;
	for(std::size_t m = 0; m < problem.model_count(); ++m) {
		const auto& model = problem.model(m);
		auto& scores = out.event_scores.emplace_back(model.size(), 0);
		for(std::size_t e = 0; e < model.size(); ++e) {
			scores[e] = event_score(model, e, schedules[m].selection);
			out.total += scores[e];
		}
	}
	for(std::size_t mj = 0; mj < problem.model_count(); ++mj) {
		for(auto j : schedules[mj].selection.members()) {
			for(std::size_t mk = 0; mk < problem.model_count(); ++mk) {
				if(mk == mj) continue;
				for(auto k : schedules[mk].selection.members()) {
					const EventRef rj{mj, j}, rk{mk, k};
					if(auto s = pair_score(problem, rj, rk, schedules); s != 0) {
						out.pair_scores.push_back({rj, rk, s});
						out.total += s;
					}
				}
			}
		}
	}
	std::sort(out.pair_scores.begin(), out.pair_scores.end(), [](const PairScore& a, const PairScore& b) {
		return std::tie(a.first, a.second) < std::tie(b.first, b.second);
	});
	return out;
}

void revalidate(const CompositionProblem& problem, const ScheduledTrace& schedule) {
	const ObjectiveBreakdown fresh = objective(problem, schedule.models);
	if(fresh != schedule.breakdown) {
		throw InvalidSchedule("stored objective breakdown (total " + std::to_string(schedule.breakdown.total) +
		                      ") differs from recomputation (total " + std::to_string(fresh.total) + ")");
	}
}

PenaltyTable::PenaltyTable(const CompositionProblem& problem) {
	for(std::size_t ma = 0; ma < problem.model_count(); ++ma) {
		for(std::size_t mb = ma + 1; mb < problem.model_count(); ++mb) {
			for(std::size_t a = 0; a < problem.model(ma).size(); ++a) {
				for(std::size_t b = 0; b < problem.model(mb).size(); ++b) {
					const EventRef ra{ma, a}, rb{mb, b};
					const auto w = label_conflict_weight(problem.attributes(ra).labels, problem.attributes(rb).labels,
					                                     problem.gamma());
					if(w != 0) entries_.push_back({ra, rb, w});
				}
			}
		}
	}
}

std::int64_t PenaltyTable::total(const CompositionProblem& problem, const std::vector<const EventSet*>& selections,
                                 const std::vector<const ModelClocks*>& clocks) const {
	std::int64_t sum = 0;
	for(std::size_t m = 0; m < problem.model_count(); ++m) {
		selections[m]->for_each([&](std::size_t e) { sum += problem.model(m).attributes(e).priority; });
	}
	for(const auto& entry : entries_) {
		if(!selections[entry.a.model]->test(entry.a.event) || !selections[entry.b.model]->test(entry.b.event)) continue;
		const Clock ca = *clocks[entry.a.model]->start[entry.a.event];
		const Clock cb = *clocks[entry.b.model]->start[entry.b.event];
		sum += overlap_penalty(ca, cb, problem.attributes(entry.a).duration, entry.weight);
		sum += overlap_penalty(cb, ca, problem.attributes(entry.b).duration, entry.weight);
	}
	return sum;
}

} // namespace lesc
