#include "lesc/verify.hpp"

#include <sstream>

#include "lesc/kernels.hpp"
#include "lesc/smtlib.hpp"

namespace lesc {

MaximalityCheck check_maximality_equivalence(const EventStructure& model, MaximalityRule rule, Execution exec) {
	const std::size_t n = model.size();
	if(n > max_exhaustive_events) {
		throw TooLarge("model " + model.name() + " has " + std::to_string(n) + " events; exhaustive check stops at " +
		               std::to_string(max_exhaustive_events));
	}
	auto disagrees = [&](std::uint64_t mask) {
		const EventSet c = EventSet::from_mask(n, mask);
		if(!is_configuration(c, model)) return false;
		return is_trace(c, model) != is_maximal_conf_smt(c, model, rule);
	};
	auto less = [&](std::uint64_t a, std::uint64_t b) {
		return lex_less(model, EventSet::from_mask(n, a), EventSet::from_mask(n, b));
	};
	const auto witness = kernels::find_min_mask(static_cast<unsigned>(n), disagrees, less, exec);
	if(!witness) return {};
	return {false, EventSet::from_mask(n, *witness)};
}

namespace {

std::string conj(const std::vector<std::string>& xs) {
	if(xs.empty()) return "true";
	if(xs.size() == 1) return xs.front();
	std::string out = "(and";
	for(const auto& x : xs) out += " " + x;
	return out + ")";
}

std::string disj(const std::vector<std::string>& xs) {
	if(xs.empty()) return "false";
	if(xs.size() == 1) return xs.front();
	std::string out = "(or";
	for(const auto& x : xs) out += " " + x;
	return out + ")";
}

} // namespace

std::string emit_equivalence_smt(const EventStructure& model, MaximalityRule rule) {
	const std::size_t n = model.size();
	std::ostringstream out;
	out << "; maximality cross-check for " << model.name() << ": unsat means both formulations agree\n";
	if(n == 0) {
		out << "(define-fun maximality () Bool true)\n";
		out << "(define-fun maximalityDefinition () Bool true)\n";
		out << "(assert (distinct maximality maximalityDefinition))\n";
		out << "(check-sat)\n";
		return out.str();
	}

	auto sel = [&](std::size_t e) { return "(sel " + smt_event(model, e) + ")"; };
	auto unsel = [&](std::size_t e) { return "(not " + sel(e) + ")"; };

	out << "(declare-datatypes ((Event 0)) ((";
	for(std::size_t e = 0; e < n; ++e) out << (e ? " " : "") << "(" << smt_event(model, e) << ")";
	out << ")))\n";
	out << "(declare-fun sel (Event) Bool)\n";

	out << "; the selection is a configuration\n";
	for(std::size_t j = 0; j < n; ++j) {
		for(std::size_t k = j + 1; k < n; ++k) {
			if(model.conflict().test(j, k)) out << "(assert (not (and " << sel(j) << " " << sel(k) << ")))\n";
		}
	}
	for(auto [from, to] : model.immediate().pairs()) out << "(assert (=> " << sel(to) << " " << sel(from) << "))\n";

	std::vector<std::string> blocked;
	for(std::size_t z = 0; z < n; ++z) {
		std::vector<std::string> reasons;
		for(std::size_t y = 0; y < n; ++y) {
			if(model.conflict().test(y, z)) reasons.push_back(sel(y));
		}
		immediate_predecessors(model.immediate(), z).for_each([&](std::size_t y) { reasons.push_back(unsel(y)); });
		if(rule == MaximalityRule::unselected_only) {
			blocked.push_back("(=> " + unsel(z) + " " + disj(reasons) + ")");
		} else {
			blocked.push_back(disj(reasons));
		}
	}
	out << "(define-fun maximality () Bool " << conj(blocked) << ")\n";

	std::vector<std::string> no_bigger;
	if(n <= literal_definition_limit) {
		// For every configuration Y: not (selection strictly inside Y).
		for(std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
			const EventSet y = EventSet::from_mask(n, mask);
			if(!is_configuration(y, model)) continue;
			std::vector<std::string> inside;
			std::vector<std::string> missing_some;
			for(std::size_t e = 0; e < n; ++e) {
				if(y.test(e)) missing_some.push_back(unsel(e));
				else inside.push_back(unsel(e));
			}
			inside.push_back(disj(missing_some));
			no_bigger.push_back("(not " + conj(inside) + ")");
		}
	} else {
		// No unselected event has all causal predecessors selected and no selected conflict.
		for(std::size_t z = 0; z < n; ++z) {
			std::vector<std::string> extendable{unsel(z)};
			for(std::size_t y = 0; y < n; ++y) {
				if(y != z && model.causality().test(y, z)) extendable.push_back(sel(y));
				if(model.conflict().test(y, z)) extendable.push_back(unsel(y));
			}
			no_bigger.push_back("(not " + conj(extendable) + ")");
		}
	}
	out << "(define-fun maximalityDefinition () Bool " << conj(no_bigger) << ")\n";
	out << "(assert (or (and maximality (not maximalityDefinition)) (and (not maximality) maximalityDefinition)))\n";
	out << "(check-sat)\n";
	return out.str();
}

} // namespace lesc
