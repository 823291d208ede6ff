#pragma once

// SMT-LIB v2 encoding of the composition problem and the external-solver driver.
//
// The emitted file is ground: every quantifier is expanded over the finite event
// sets. Symbols: sort `Event` (constructors are qualified ids with '.' -> '_'),
// `sel`, one rank function `s_<model>` per model, `clock`, `score`, `Score`, and
// the integer constant `objective` that is maximized.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lesc/scoring.hpp"

namespace lesc {

/// SMT-LIB symbol for a raw name; quoted with |...| when not a simple symbol.
std::string smt_symbol(std::string_view raw);
/// Event constant: qualified id with '.' replaced by '_'.
std::string smt_event(const EventStructure& model, std::size_t e);

/// Optimization script for `problem`. Byte-deterministic.
std::string emit_smtlib(const CompositionProblem& problem);

/// Parses a solver reply to emit_smtlib's script, rebuilds the schedule and
/// checks it locally. Throws SolverReportedUnsat, ModelParseError, ObjectiveMismatch.
ScheduledTrace decode_solver_output(const CompositionProblem& problem, std::string_view output);

/// Runs `solver_command` once through the shell with the script on its standard
/// input. Throws SolverUnavailable plus everything decode_solver_output throws.
ScheduledTrace run_external(const CompositionProblem& problem, const std::string& solver_command);

/// Runs a command with `input` on its standard input; returns its standard output.
/// Throws SolverUnavailable when the command cannot be started or is not found.
std::string run_with_input(const std::string& command, std::string_view input);

namespace sexpr {

/// Minimal S-expression tree for reading solver replies.
struct Node {
	std::variant<std::string, std::vector<Node>> value;

	bool is_atom() const { return std::holds_alternative<std::string>(value); }
	const std::string& atom() const { return std::get<std::string>(value); }
	const std::vector<Node>& list() const { return std::get<std::vector<Node>>(value); }
	/// Canonical single-line rendering.
	std::string str() const;
};

/// Parses a sequence of top-level S-expressions. Throws ModelParseError.
std::vector<Node> parse_all(std::string_view text);

} // namespace sexpr

} // namespace lesc
