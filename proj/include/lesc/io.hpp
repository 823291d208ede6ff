#pragma once

// Model/scenario file formats and text renderers.
//
// Model file (one model per file, `#` starts a comment):
//   model <name>
//   event <id> priority=<nat> duration=<nat> [labels=<token>(,<token>)*]
//   edge <id> <id>          immediate causality, source before target
//   conflict <id> <id>      direct conflict
//
// Scenario file:
//   offset <model> <nat>
//   gamma <label> <label> [weight=<negative-int>]

#include <string>
#include <string_view>
#include <vector>

#include "lesc/problem.hpp"
#include "lesc/scoring.hpp"

namespace lesc {

/// Throws SyntaxError, UnknownEvent, CycleDetected, SelfConflict; messages start
/// with "source:line:column: ".
EventStructure parse_model_file(std::string_view text, std::string_view source = "<model>");

/// Canonical text that parses back to an identical structure.
std::string render_model_file(const EventStructure& model);

struct Scenario {
	CompositionProblem problem;
	/// Gamma labels not carried by any event (legal, reported only).
	std::vector<std::string> warnings;
};

/// Throws SyntaxError, UnknownModel, NonNegativeWeight.
Scenario parse_scenario_file(std::string_view text, std::vector<EventStructure> models,
                             std::string_view source = "<scenario>");

/// `clock event order priority duration` rows sorted by (clock, local id, qualified id),
/// then `objective=<total>`.
std::string render_table(const CompositionProblem& problem, const ScheduledTrace& schedule);

/// Key-value records: one per selected event, one per nonzero pair score, and a summary.
std::string render_machine(const CompositionProblem& problem, const ScheduledTrace& schedule);

/// One lane per model; each time unit is a fixed-width cell.
std::string render_gantt(const CompositionProblem& problem, const ScheduledTrace& schedule);

std::string render_report(const EventStructure& model, const ValidationReport& report);
std::string render_traces(const EventStructure& model, const std::vector<Trace>& traces);

} // namespace lesc
