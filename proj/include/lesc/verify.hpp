#pragma once

// Executable evidence that the solver-side maximality formula coincides with
// the definition of a trace, per concrete model.

#include <optional>
#include <string>

#include "lesc/config_trace.hpp"

namespace lesc {

struct MaximalityCheck {
	bool passed = true;
	/// First configuration (lex order) where the two notions disagree.
	std::optional<EventSet> counterexample;
};

inline constexpr std::size_t max_exhaustive_events = 16;

/// Compares is_trace and is_maximal_conf_smt on every configuration.
/// Throws TooLarge above max_exhaustive_events.
MaximalityCheck check_maximality_equivalence(const EventStructure& model,
                                             MaximalityRule rule = MaximalityRule::unselected_only,
                                             Execution exec = Execution::parallel);

/// Models up to this size get the literal "no strict superset is a configuration"
/// formulation; larger ones use the single-event-extension form.
inline constexpr std::size_t literal_definition_limit = 12;

/// Script asserting that the two ground maximality formulations disagree on some
/// configuration; `unsat` certifies equivalence for this model.
std::string emit_equivalence_smt(const EventStructure& model, MaximalityRule rule = MaximalityRule::unselected_only);

} // namespace lesc
