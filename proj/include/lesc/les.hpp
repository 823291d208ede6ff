#pragma once

// Finite labelled prime event structures and their derived relations.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lesc/error.hpp"
#include "lesc/kernels.hpp"
#include "lesc/relation.hpp"

namespace lesc {

using ModelName = std::string;
using Label = std::string;
using LabelSet = std::set<Label>;

/// Model-qualified event identity; renders as `model.local`.
struct EventId {
	ModelName model;
	std::string local;

	std::string qualified() const { return model + "." + local; }
	friend auto operator<=>(const EventId&, const EventId&) = default;
};

struct EventAttributes {
	LabelSet labels;
	std::int64_t priority = 0;
	std::int64_t duration = 0;

	friend bool operator==(const EventAttributes&, const EventAttributes&) = default;
};

struct EventDecl {
	std::string id;
	EventAttributes attributes;
};

using IdPair = std::pair<std::string, std::string>;

/// Full causality, propagated conflict and concurrency of one structure.
struct DerivedRelations {
	Relation causality;
	Relation conflict;
	Relation concurrency;
};

/// One labelled event structure. Immutable once built; construction computes the
/// derived relations and rejects causality cycles and self-conflicts.
class EventStructure {
public:
	EventStructure() = default;

	/// Throws DuplicateName, UnknownEvent, CycleDetected, SelfConflict, std::invalid_argument.
	EventStructure(ModelName name, std::vector<EventDecl> events, const std::vector<IdPair>& edges,
	               const std::vector<IdPair>& conflicts);

	const ModelName& name() const { return name_; }
	std::size_t size() const { return locals_.size(); }

	const std::string& local(std::size_t e) const { return locals_.at(e); }
	EventId id(std::size_t e) const { return {name_, locals_.at(e)}; }
	const EventAttributes& attributes(std::size_t e) const { return attributes_.at(e); }

	std::optional<std::size_t> find(std::string_view local) const;
	/// Throws UnknownEvent.
	std::size_t index(std::string_view local) const;
	/// Throws UnknownEvent.
	EventSet make_set(const std::vector<std::string>& locals) const;
	EventSet all_events() const { return EventSet(size()).complement(); }

	/// Immediate causality as declared (G).
	const Relation& immediate() const { return immediate_; }
	const Relation& direct_conflicts() const { return direct_; }
	const Relation& causality() const { return derived_.causality; }
	const Relation& conflict() const { return derived_.conflict; }
	const Relation& concurrency() const { return derived_.concurrency; }
	const DerivedRelations& derived() const { return derived_; }

	/// Event indices sorted by id (the deterministic order used everywhere).
	const std::vector<std::size_t>& id_order() const { return id_order_; }
	/// Position of each event within id_order().
	std::size_t id_rank(std::size_t e) const { return id_rank_.at(e); }

	/// Sorted local ids of the members of `s`.
	std::vector<std::string> sorted_ids(const EventSet& s) const;
	std::string format_set(const EventSet& s) const;

private:
	ModelName name_;
	std::vector<std::string> locals_;
	std::vector<EventAttributes> attributes_;
	std::map<std::string, std::size_t, std::less<>> index_;
	Relation immediate_;
	Relation direct_;
	DerivedRelations derived_;
	std::vector<std::size_t> id_order_;
	std::vector<std::size_t> id_rank_;
};

/// Reflexive-transitive closure of `g`. Throws CycleDetected.
Relation close_causality(const Relation& g, Execution exec = Execution::parallel);

/// Smallest symmetric superset of `direct` closed under e#e' and e' ->* e'' => e#e''.
/// Throws SelfConflict when an event ends up in conflict with itself.
Relation propagate_conflicts(const Relation& direct, const Relation& causality);

/// Distinct pairs neither causally related nor in conflict (stored symmetrically).
Relation derive_concurrency(const Relation& causality, const Relation& conflict);

enum class Axiom {
	causality_reflexive,
	causality_transitive,
	causality_antisymmetric,
	conflict_symmetric,
	conflict_irreflexive,
	conflict_propagates,
};

std::string_view to_string(Axiom a);

struct AxiomResult {
	Axiom axiom;
	bool passed = true;
	/// Event indices of the first violation found (pair or triple), empty on pass.
	std::vector<std::size_t> witness;
};

struct ValidationReport {
	std::vector<AxiomResult> axioms;

	bool passed() const;
	const AxiomResult& result(Axiom a) const;
};

/// Checks the six event-structure axioms on a (causality, conflict) pair.
/// Propagation witnesses are (e, e', e'') with e # e', e' ->* e'', not e # e''.
ValidationReport validate_les(const Relation& causality, const Relation& conflict);
ValidationReport validate_les(const EventStructure& les);

/// All causal predecessors of `e`, including `e`. Throws UnknownEvent.
EventSet local_configuration(const Relation& causality, std::size_t e);

/// {e' | (e', e) in g}. Throws UnknownEvent.
EventSet immediate_predecessors(const Relation& g, std::size_t e);

} // namespace lesc
