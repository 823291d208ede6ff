// Serial reference versus OpenMP kernels.

#include <random>

#include <benchmark/benchmark.h>

#include "lesc/kernels.hpp"
#include "lesc/problem.hpp"
#include "lesc/solver.hpp"
#include "lesc/verify.hpp"

namespace {

lesc::Relation random_dag(std::size_t n, double p, unsigned seed) {
	std::mt19937 rng(seed);
	std::bernoulli_distribution edge(p);
	lesc::Relation g(n);
	for(std::size_t i = 0; i < n; ++i)
		for(std::size_t j = i + 1; j < n; ++j)
			if(edge(rng)) g.set(i, j);
	return g;
}

lesc::Execution mode(const benchmark::State& state) {
	return state.range(1) ? lesc::Execution::parallel : lesc::Execution::serial;
}

void BM_Closure(benchmark::State& state) {
	const auto g = random_dag(static_cast<std::size_t>(state.range(0)), 0.05, 7);
	const auto exec = mode(state);
	for(auto _ : state) benchmark::DoNotOptimize(lesc::kernels::reflexive_transitive_closure(g, exec));
}
BENCHMARK(BM_Closure)->ArgsProduct({{128, 512, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);

// Wide fan-out model: a root, `width` parallel chains of two events, alternate chains in conflict.
lesc::EventStructure wide_model(std::size_t width) {
	std::vector<lesc::EventDecl> events{{"r", {{}, 1, 1}}};
	std::vector<lesc::IdPair> edges, conflicts;
	for(std::size_t i = 0; i < width; ++i) {
		const auto a = "a" + std::to_string(i), b = "b" + std::to_string(i);
		events.push_back({a, {{}, 1, 1}});
		events.push_back({b, {{}, 1, 1}});
		edges.emplace_back("r", a);
		edges.emplace_back(a, b);
		if(i % 2 == 1) conflicts.emplace_back("a" + std::to_string(i - 1), b);
	}
	return lesc::EventStructure("W", std::move(events), edges, conflicts);
}

void BM_MaximalitySweep(benchmark::State& state) {
	const auto model = wide_model(static_cast<std::size_t>(state.range(0)));
	const auto exec = mode(state);
	for(auto _ : state)
		benchmark::DoNotOptimize(
			lesc::check_maximality_equivalence(model, lesc::MaximalityRule::unselected_only, exec));
}
BENCHMARK(BM_MaximalitySweep)->ArgsProduct({{5, 7}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_OracleArgmax(benchmark::State& state) {
	std::vector<lesc::EventStructure> models;
	for(const char* name : {"P", "Q"}) {
		std::vector<lesc::EventDecl> events;
		for(int i = 0; i < static_cast<int>(state.range(0)); ++i)
			events.push_back({"x" + std::to_string(i), {{i % 2 ? "l1" : "l2"}, i % 3, 1 + i % 2}});
		models.emplace_back(name, std::move(events), std::vector<lesc::IdPair>{}, std::vector<lesc::IdPair>{});
	}
	lesc::LabelConflictSet gamma;
	gamma.add("l1", "l2", -3);
	const lesc::CompositionProblem problem(std::move(models), gamma, {});
	lesc::OracleOptions options;
	options.max_candidates = 100'000'000;
	options.execution = mode(state);
	for(auto _ : state) benchmark::DoNotOptimize(lesc::solve_oracle(problem, options));
}
BENCHMARK(BM_OracleArgmax)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
