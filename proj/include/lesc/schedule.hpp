#pragma once

// Per-model total orders of selected events (rank functions) and start clocks.

#include <cstdint>
#include <optional>
#include <vector>

#include "lesc/config_trace.hpp"

namespace lesc {

using Clock = std::int64_t;

/// Injective ranking of every event of one model onto 1..n.
struct RankFunction {
	ModelName model;
	std::vector<std::size_t> rank;   ///< rank[e], 1-based

	friend bool operator==(const RankFunction&, const RankFunction&) = default;
};

/// Builds a rank function from an explicit execution order of selected events;
/// the remaining events follow in causal order, smallest id first.
RankFunction rank_from_sequence(const EventStructure& model, const std::vector<std::size_t>& selected_sequence);

/// Selected events ordered by rank.
std::vector<std::size_t> rank_ordered(const RankFunction& rank, const EventSet& selection);

/// Order preservation, injectivity, range [1, n], and selected-before-unselected.
bool validate_rank(const RankFunction& rank, const EventSet& selection, const Relation& causality);

/// Every valid rank function for `selection`, ordered lexicographically by the
/// id sequence of the selected events. Throws NotATrace, and TooLarge once more
/// than `limit` extensions exist.
std::vector<RankFunction> linear_extensions(const EventStructure& model, const EventSet& selection,
                                            std::size_t limit = static_cast<std::size_t>(-1));

/// Start clocks of one model; only selected events carry a clock.
struct ModelClocks {
	Clock offset = 0;
	std::vector<std::optional<Clock>> start;

	friend bool operator==(const ModelClocks&, const ModelClocks&) = default;
};

/// Rank-1 event starts at `offset`; each next selected event starts when the
/// previous one ends. Throws InvalidRank, std::invalid_argument on negative offset.
ModelClocks assign_clocks(const EventStructure& model, const RankFunction& rank, const EventSet& selection, Clock offset);

} // namespace lesc
