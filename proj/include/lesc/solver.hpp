#pragma once

// Optimal joint schedules: exhaustive oracle and exact branch-and-bound.
//
// Both solvers return the objective-maximal schedule that is smallest under
// schedule_less, so their outputs are identical on any instance they both solve.

#include <cstdint>

#include "lesc/scoring.hpp"

namespace lesc {

struct OracleOptions {
	/// Upper bound on the number of (trace, extension) tuples enumerated.
	std::uint64_t max_candidates = 1'000'000;
	Execution execution = Execution::parallel;
};

/// Enumerates every combination of per-model trace and linear extension.
/// Throws TooLarge when the candidate product exceeds the guard.
ScheduledTrace solve_oracle(const CompositionProblem& problem, const OracleOptions& options = {});

struct NativeOptions {
	/// Upper bound on distinct execution sequences kept per model.
	std::uint64_t max_sequences_per_model = 2'000'000;
};

struct NativeStats {
	std::uint64_t sequences = 0;   ///< per-model candidates after deduplication, summed
	std::uint64_t nodes = 0;       ///< search nodes expanded
	std::uint64_t pruned = 0;      ///< subtrees cut by the bound
};

/// Branch-and-bound over per-model execution sequences with the bound
/// "current value + best remaining priorities" (penalties are never positive).
ScheduledTrace solve_native(const CompositionProblem& problem, const NativeOptions& options = {},
                            NativeStats* stats = nullptr);

} // namespace lesc
