#include "lesc/problem.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lesc/error.hpp"

namespace lesc {

namespace {

std::string smt_safe(const std::string& qualified) {
	std::string s = qualified;
	std::replace(s.begin(), s.end(), '.', '_');
	return s;
}

} // namespace

CompositionProblem::CompositionProblem(std::vector<EventStructure> models, LabelConflictSet gamma,
                                       const std::map<ModelName, Clock>& offsets)
	: models_(std::move(models)), gamma_(std::move(gamma)), offsets_(models_.size(), 0) {
	std::set<std::string> names;
	std::set<std::string> symbols;
	for(const auto& m : models_) {
		if(!names.insert(m.name()).second) throw DuplicateName("duplicate model " + m.name());
		for(std::size_t e = 0; e < m.size(); ++e) {
			const std::string q = m.id(e).qualified();
			if(!symbols.insert(smt_safe(q)).second) {
				throw DuplicateName("event " + q + " collides with another event once '.' becomes '_'");
			}
		}
	}
	for(const auto& [name, offset] : offsets) {
		if(offset < 0) throw std::invalid_argument("negative offset for model " + name);
		offsets_[model_index(name)] = offset;
	}
}

std::map<ModelName, Clock> CompositionProblem::offsets() const {
	std::map<ModelName, Clock> out;
	for(std::size_t m = 0; m < models_.size(); ++m) out[models_[m].name()] = offsets_[m];
	return out;
}

std::optional<std::size_t> CompositionProblem::find_model(const std::string& name) const {
	for(std::size_t m = 0; m < models_.size(); ++m) {
		if(models_[m].name() == name) return m;
	}
	return std::nullopt;
}

std::size_t CompositionProblem::model_index(const std::string& name) const {
	if(auto m = find_model(name)) return *m;
	throw UnknownModel("unknown model " + name);
}

EventRef CompositionProblem::find_event(const std::string& qualified) const {
	const auto dot = qualified.find('.');
	if(dot == std::string::npos) throw UnknownEvent("event id " + qualified + " is not qualified");
	const std::size_t m = model_index(qualified.substr(0, dot));
	return {m, model(m).index(qualified.substr(dot + 1))};
}

std::size_t CompositionProblem::event_count() const {
	std::size_t n = 0;
	for(const auto& m : models_) n += m.size();
	return n;
}

CompositionProblem CompositionProblem::with_offsets(const std::map<ModelName, Clock>& offsets) const {
	return CompositionProblem(models_, gamma_, offsets);
}

CompositionProblem CompositionProblem::with_gamma(LabelConflictSet gamma) const {
	return CompositionProblem(models_, std::move(gamma), offsets());
}

ModelSchedule make_model_schedule(const CompositionProblem& problem, std::size_t m,
                                  const std::vector<std::size_t>& selected_sequence) {
	const auto& model = problem.model(m);
	EventSet selection(model.size());
	for(auto e : selected_sequence) selection.set(e);
	if(!is_trace(selection, model)) {
		throw NotATrace(model.format_set(selection) + " is not a trace of " + model.name());
	}
	RankFunction rank = rank_from_sequence(model, selected_sequence);
	ModelClocks clocks = assign_clocks(model, rank, selection, problem.offset(m));
	return {std::move(selection), std::move(rank), std::move(clocks)};
}

std::vector<std::string> selected_sequence_ids(const EventStructure& model, const ModelSchedule& s) {
	std::vector<std::string> ids;
	for(auto e : rank_ordered(s.rank, s.selection)) ids.push_back(model.local(e));
	return ids;
}

bool schedule_less(const CompositionProblem& problem, const std::vector<ModelSchedule>& a,
                   const std::vector<ModelSchedule>& b) {
	for(std::size_t m = 0; m < problem.model_count(); ++m) {
		const auto sa = selected_sequence_ids(problem.model(m), a.at(m));
		const auto sb = selected_sequence_ids(problem.model(m), b.at(m));
		if(sa != sb) return sa < sb;
	}
	return false;
}

} // namespace lesc
