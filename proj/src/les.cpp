#include "lesc/les.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace lesc {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
	std::string out;
	for(std::size_t i = 0; i < parts.size(); ++i) {
		if(i) out += sep;
		out += parts[i];
	}
	return out;
}

// Shortest path start -> ... -> start in g, as the list of visited nodes.
std::vector<std::size_t> find_cycle_through(const Relation& g, std::size_t start) {
	const std::size_t n = g.size();
	std::vector<std::size_t> parent(n, n);
	std::deque<std::size_t> queue;
	g.row(start).for_each([&](std::size_t s) {
		if(parent[s] == n) {
			parent[s] = start;
			queue.push_back(s);
		}
	});
	while(!queue.empty()) {
		const std::size_t v = queue.front();
		queue.pop_front();
		if(v == start) break;
		g.row(v).for_each([&](std::size_t w) {
			if(parent[w] == n) {
				parent[w] = v;
				queue.push_back(w);
			}
		});
	}
	std::vector<std::size_t> cycle;
	if(parent[start] == n) return cycle;
	for(std::size_t v = parent[start]; v != start; v = parent[v]) cycle.push_back(v);
	cycle.push_back(start);
	std::reverse(cycle.begin(), cycle.end());
	return cycle;
}

} // namespace

Relation close_causality(const Relation& g, Execution exec) {
	const std::size_t n = g.size();
	for(std::size_t i = 0; i < n; ++i) {
		if(g.test(i, i)) throw CycleDetected("causality cycle through event " + std::to_string(i), {i});
	}
	Relation closure = kernels::reflexive_transitive_closure(g, exec);
	for(std::size_t i = 0; i < n; ++i) {
		EventSet back = closure.row(i) & closure.column(i);
		back.reset(i);
		if(!back.empty()) {
			auto cycle = find_cycle_through(g, i);
			std::vector<std::string> names;
			for(auto v : cycle) names.push_back(std::to_string(v));
			throw CycleDetected("causality cycle: " + join(names, " -> "), std::move(cycle));
		}
	}
	return closure;
}

Relation propagate_conflicts(const Relation& direct, const Relation& causality) {
	const std::size_t n = direct.size();
	Relation conflict(n);
	for(auto [a, b] : direct.pairs()) conflict.set_symmetric(a, b);
	bool changed = true;
	while(changed) {
		changed = false;
		for(std::size_t e = 0; e < n; ++e) {
			EventSet grown = conflict.row(e);
			conflict.row(e).for_each([&](std::size_t other) { grown |= causality.row(other); });
			if(grown != conflict.row(e)) {
				(grown - conflict.row(e)).for_each([&](std::size_t f) { conflict.set_symmetric(e, f); });
				changed = true;
			}
		}
	}
	for(std::size_t e = 0; e < n; ++e) {
		if(conflict.test(e, e)) throw SelfConflict("event " + std::to_string(e) + " conflicts with itself", e);
	}
	return conflict;
}

Relation derive_concurrency(const Relation& causality, const Relation& conflict) {
	const std::size_t n = causality.size();
	Relation co(n);
	for(std::size_t i = 0; i < n; ++i) {
		for(std::size_t j = i + 1; j < n; ++j) {
			if(!causality.test(i, j) && !causality.test(j, i) && !conflict.test(i, j) && !conflict.test(j, i)) {
				co.set_symmetric(i, j);
			}
		}
	}
	return co;
}

std::string_view to_string(Axiom a) {
	switch(a) {
	case Axiom::causality_reflexive: return "causality-reflexive";
	case Axiom::causality_transitive: return "causality-transitive";
	case Axiom::causality_antisymmetric: return "causality-antisymmetric";
	case Axiom::conflict_symmetric: return "conflict-symmetric";
	case Axiom::conflict_irreflexive: return "conflict-irreflexive";
	case Axiom::conflict_propagates: return "conflict-propagates";
	}
	return "?";
}

bool ValidationReport::passed() const {
	return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult& ValidationReport::result(Axiom a) const {
	for(const auto& r : axioms) {
		if(r.axiom == a) return r;
	}
	throw std::out_of_range("axiom missing from report");
}

ValidationReport validate_les(const Relation& causality, const Relation& conflict) {
	const std::size_t n = causality.size();
	if(conflict.size() != n) throw std::invalid_argument("relations over different event sets");

	auto fail_first = [](Axiom axiom, auto&& search) {
		AxiomResult r{axiom, true, {}};
		if(auto w = search(); !w.empty()) {
			r.passed = false;
			r.witness = std::move(w);
		}
		return r;
	};
	using Witness = std::vector<std::size_t>;

	ValidationReport report;
	report.axioms.push_back(fail_first(Axiom::causality_reflexive, [&]() -> Witness {
		for(std::size_t i = 0; i < n; ++i) if(!causality.test(i, i)) return {i, i};
		return {};
	}));
	report.axioms.push_back(fail_first(Axiom::causality_transitive, [&]() -> Witness {
		for(std::size_t i = 0; i < n; ++i) {
			for(auto j : causality.row(i).members()) {
				EventSet missing = causality.row(j) - causality.row(i);
				if(!missing.empty()) return {i, j, missing.members().front()};
			}
		}
		return {};
	}));
	report.axioms.push_back(fail_first(Axiom::causality_antisymmetric, [&]() -> Witness {
		for(std::size_t i = 0; i < n; ++i) {
			for(std::size_t j = i + 1; j < n; ++j) {
				if(causality.test(i, j) && causality.test(j, i)) return {i, j};
			}
		}
		return {};
	}));
	report.axioms.push_back(fail_first(Axiom::conflict_symmetric, [&]() -> Witness {
		for(auto [i, j] : conflict.pairs()) if(!conflict.test(j, i)) return {i, j};
		return {};
	}));
	report.axioms.push_back(fail_first(Axiom::conflict_irreflexive, [&]() -> Witness {
		for(std::size_t i = 0; i < n; ++i) if(conflict.test(i, i)) return {i, i};
		return {};
	}));
	report.axioms.push_back(fail_first(Axiom::conflict_propagates, [&]() -> Witness {
		for(std::size_t e = 0; e < n; ++e) {
			for(auto mid : conflict.row(e).members()) {
				EventSet missing = causality.row(mid) - conflict.row(e);
				if(!missing.empty()) return {e, mid, missing.members().front()};
			}
		}
		return {};
	}));
	return report;
}

ValidationReport validate_les(const EventStructure& les) {
	return validate_les(les.causality(), les.conflict());
}

EventSet local_configuration(const Relation& causality, std::size_t e) {
	if(e >= causality.size()) throw UnknownEvent("unknown event index " + std::to_string(e));
	return causality.column(e);
}

EventSet immediate_predecessors(const Relation& g, std::size_t e) {
	if(e >= g.size()) throw UnknownEvent("unknown event index " + std::to_string(e));
	EventSet preds = g.column(e);
	preds.reset(e);
	return preds;
}

EventStructure::EventStructure(ModelName name, std::vector<EventDecl> events, const std::vector<IdPair>& edges,
                               const std::vector<IdPair>& conflicts)
	: name_(std::move(name)) {
	for(auto& decl : events) {
		if(decl.attributes.priority < 0 || decl.attributes.duration < 0) {
			throw std::invalid_argument("event " + decl.id + ": priority and duration must be non-negative");
		}
		if(!index_.emplace(decl.id, locals_.size()).second) {
			throw DuplicateName("duplicate event " + name_ + "." + decl.id);
		}
		locals_.push_back(std::move(decl.id));
		attributes_.push_back(std::move(decl.attributes));
	}
	const std::size_t n = locals_.size();

	id_order_.resize(n);
	std::iota(id_order_.begin(), id_order_.end(), std::size_t{0});
	std::sort(id_order_.begin(), id_order_.end(), [&](auto a, auto b) { return locals_[a] < locals_[b]; });
	id_rank_.resize(n);
	for(std::size_t r = 0; r < n; ++r) id_rank_[id_order_[r]] = r;

	immediate_ = Relation(n);
	for(const auto& [from, to] : edges) immediate_.set(index(from), index(to));
	direct_ = Relation(n);
	for(const auto& [a, b] : conflicts) {
		const auto ia = index(a), ib = index(b);
		if(ia == ib) throw SelfConflict("event " + name_ + "." + a + " declared in conflict with itself", ia);
		direct_.set_symmetric(ia, ib);
	}

	try {
		derived_.causality = close_causality(immediate_);
	} catch(const CycleDetected& c) {
		std::vector<std::string> names;
		for(auto v : c.cycle()) names.push_back(name_ + "." + locals_[v]);
		names.push_back(names.front());
		throw CycleDetected("causality cycle: " + join(names, " -> "), c.cycle());
	}
	try {
		derived_.conflict = propagate_conflicts(direct_, derived_.causality);
	} catch(const SelfConflict& s) {
		throw SelfConflict("event " + name_ + "." + locals_[s.event()] + " inherits a conflict with itself", s.event());
	}
	derived_.concurrency = derive_concurrency(derived_.causality, derived_.conflict);
}

std::optional<std::size_t> EventStructure::find(std::string_view local) const {
	auto it = index_.find(local);
	if(it == index_.end()) return std::nullopt;
	return it->second;
}

std::size_t EventStructure::index(std::string_view local) const {
	if(auto i = find(local)) return *i;
	throw UnknownEvent("unknown event " + name_ + "." + std::string(local));
}

EventSet EventStructure::make_set(const std::vector<std::string>& locals) const {
	EventSet s(size());
	for(const auto& l : locals) s.set(index(l));
	return s;
}

std::vector<std::string> EventStructure::sorted_ids(const EventSet& s) const {
	std::vector<std::string> out;
	for(auto e : id_order_) {
		if(s.test(e)) out.push_back(locals_[e]);
	}
	return out;
}

std::string EventStructure::format_set(const EventSet& s) const {
	return "{" + join(sorted_ids(s), ",") + "}";
}

} // namespace lesc
