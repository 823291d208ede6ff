#pragma once

// Shared test fixtures: the three care-pathway models built in code, and random
// instance generators.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lesc/io.hpp"
#include "lesc/problem.hpp"

namespace lesc::test {

inline EventDecl ev(std::string id, std::int64_t priority, std::int64_t duration, LabelSet labels = {}) {
	return {std::move(id), {std::move(labels), priority, duration}};
}

inline EventStructure model_a() {
	return EventStructure("A",
	                      {ev("e0", 1, 1), ev("e1", 1, 1), ev("e2", 5, 3, {"pro1", "ma1"}), ev("e3", 1, 3, {"pro2", "ma3"}),
	                       ev("e4", 5, 2, {"ma2"})},
	                      {{"e0", "e1"}, {"e1", "e2"}, {"e1", "e3"}, {"e2", "e4"}}, {{"e2", "e3"}});
}

inline EventStructure model_b() {
	return EventStructure("B",
	                      {ev("g0", 1, 1), ev("g1", 1, 1), ev("g2", 1, 2, {"mb1"}), ev("g3", 1, 1, {"mb2"}), ev("g4", 1, 4)},
	                      {{"g0", "g1"}, {"g1", "g2"}, {"g1", "g3"}, {"g2", "g4"}, {"g3", "g4"}}, {});
}

inline EventStructure model_c() {
	return EventStructure("C",
	                      {ev("f0", 1, 1), ev("f1", 1, 1), ev("f2", 3, 3, {"x>9", "mc1"}), ev("f3", 1, 2, {"x>20", "mc3"})},
	                      {{"f0", "f1"}, {"f1", "f2"}, {"f1", "f3"}}, {{"f2", "f3"}});
}

inline LabelConflictSet pathway_gamma() {
	LabelConflictSet g;
	g.add("ma1", "mc1");
	g.add("ma2", "mb2");
	return g;
}

inline CompositionProblem pathway_problem(const std::map<ModelName, Clock>& offsets = {}) {
	return CompositionProblem({model_a(), model_b(), model_c()}, pathway_gamma(), offsets);
}

inline CompositionProblem dephased_problem() {
	return pathway_problem({{"C", 4}, {"B", 1}});
}

inline std::string data_path(const std::string& relative) {
	return std::string(LESC_DATA_DIR) + "/" + relative;
}

/// Random DAG plus random direct conflicts; retries until no self-conflict arises.
struct RandomModelSpec {
	std::size_t min_events = 1;
	std::size_t max_events = 8;
	double edge_probability = 0.3;
	double conflict_probability = 0.15;
	std::vector<std::string> label_pool;
	std::int64_t max_priority = 5;
	std::int64_t max_duration = 3;
};

inline EventStructure random_model(std::mt19937& rng, const std::string& name, const RandomModelSpec& spec) {
	std::uniform_int_distribution<std::size_t> size_dist(spec.min_events, spec.max_events);
	std::bernoulli_distribution edge(spec.edge_probability), conflict(spec.conflict_probability), labelled(0.4);
	std::uniform_int_distribution<std::int64_t> prio(0, spec.max_priority), dur(0, spec.max_duration);
	for(;;) {
		const std::size_t n = size_dist(rng);
		std::vector<std::size_t> perm(n);
		for(std::size_t i = 0; i < n; ++i) perm[i] = i;
		std::shuffle(perm.begin(), perm.end(), rng);
		auto id = [&](std::size_t i) { return name + "x" + std::to_string(perm[i]); };

		std::vector<EventDecl> events;
		for(std::size_t i = 0; i < n; ++i) {
			LabelSet labels;
			if(!spec.label_pool.empty() && labelled(rng)) {
				labels.insert(spec.label_pool[std::uniform_int_distribution<std::size_t>(0, spec.label_pool.size() - 1)(rng)]);
			}
			events.push_back(ev(id(i), prio(rng), dur(rng), labels));
		}
		std::shuffle(events.begin(), events.end(), rng);
		std::vector<IdPair> edges, conflicts;
		for(std::size_t i = 0; i < n; ++i) {
			for(std::size_t j = i + 1; j < n; ++j) {
				if(edge(rng)) edges.emplace_back(id(i), id(j));
				else if(conflict(rng)) conflicts.emplace_back(id(i), id(j));
			}
		}
		try {
			return EventStructure(name, std::move(events), edges, conflicts);
		} catch(const SelfConflict&) {
		}
	}
}

inline CompositionProblem random_problem(std::mt19937& rng, std::size_t max_models, const RandomModelSpec& spec) {
	std::uniform_int_distribution<std::size_t> model_count(1, max_models);
	const std::size_t k = model_count(rng);
	std::vector<EventStructure> models;
	std::map<ModelName, Clock> offsets;
	std::uniform_int_distribution<Clock> offset(0, 4);
	for(std::size_t m = 0; m < k; ++m) {
		const std::string name = std::string(1, static_cast<char>('P' + m));
		models.push_back(random_model(rng, name, spec));
		offsets[name] = offset(rng);
	}
	LabelConflictSet gamma;
	std::bernoulli_distribution pick(0.35), heavy(0.5);
	std::uniform_int_distribution<std::int64_t> light(-6, -1);
	for(std::size_t i = 0; i < spec.label_pool.size(); ++i) {
		for(std::size_t j = i; j < spec.label_pool.size(); ++j) {
			if(pick(rng)) gamma.add(spec.label_pool[i], spec.label_pool[j], heavy(rng) ? LabelConflictSet::default_weight : light(rng));
		}
	}
	return CompositionProblem(std::move(models), std::move(gamma), offsets);
}

} // namespace lesc::test
