#include "lesc/io.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace lesc {

namespace {

struct Row {
	Clock clock;
	std::string local;
	std::string qualified;
	std::size_t rank;
	EventRef ref;
};

std::vector<Row> selected_rows(const CompositionProblem& problem, const ScheduledTrace& schedule) {
	std::vector<Row> rows;
	for(std::size_t m = 0; m < schedule.models.size(); ++m) {
		const auto& model = problem.model(m);
		const auto& s = schedule.models[m];
		s.selection.for_each([&](std::size_t e) {
			rows.push_back({*s.clocks.start[e], model.local(e), model.id(e).qualified(), s.rank.rank[e], {m, e}});
		});
	}
	return rows;
}

std::string pad(std::string s, std::size_t width) {
	if(s.size() < width) s.append(width - s.size(), ' ');
	return s;
}

} // namespace

std::string render_table(const CompositionProblem& problem, const ScheduledTrace& schedule) {
	auto rows = selected_rows(problem, schedule);
	std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
		return std::tie(a.clock, a.local, a.qualified) < std::tie(b.clock, b.local, b.qualified);
	});
	std::ostringstream out;
	out << "clock event order priority duration\n";
	for(const auto& r : rows) {
		const auto& a = problem.attributes(r.ref);
		out << r.clock << " " << r.local << " " << r.rank << " " << a.priority << " " << a.duration << "\n";
	}
	out << "objective=" << schedule.breakdown.total << "\n";
	return out.str();
}

std::string render_machine(const CompositionProblem& problem, const ScheduledTrace& schedule) {
	std::ostringstream out;
	std::int64_t priority_sum = 0;
	for(std::size_t m = 0; m < schedule.models.size(); ++m) {
		const auto& model = problem.model(m);
		const auto& s = schedule.models[m];
		for(auto e : rank_ordered(s.rank, s.selection)) {
			const auto& a = model.attributes(e);
			out << "event id=" << model.id(e).qualified() << " model=" << model.name() << " clock=" << *s.clocks.start[e]
			    << " rank=" << s.rank.rank[e] << " priority=" << a.priority << " duration=" << a.duration << " labels=";
			bool first = true;
			for(const auto& l : a.labels) {
				out << (first ? "" : ",") << l;
				first = false;
			}
			out << "\n";
			priority_sum += schedule.breakdown.event_scores.at(m).at(e);
		}
	}
	std::int64_t penalty_sum = 0;
	for(const auto& p : schedule.breakdown.pair_scores) {
		out << "pair first=" << problem.qualified(p.first) << " second=" << problem.qualified(p.second)
		    << " score=" << p.score << "\n";
		penalty_sum += p.score;
	}
	out << "objective total=" << schedule.breakdown.total << " priority=" << priority_sum << " penalty=" << penalty_sum
	    << "\n";
	return out.str();
}

std::string render_gantt(const CompositionProblem& problem, const ScheduledTrace& schedule) {
	const auto rows = selected_rows(problem, schedule);
	Clock horizon = 1;
	std::size_t longest_id = 1;
	for(const auto& r : rows) {
		horizon = std::max(horizon, r.clock + problem.attributes(r.ref).duration);
		longest_id = std::max(longest_id, r.local.size());
	}
	const std::size_t cell = std::max(longest_id, std::to_string(horizon - 1).size()) + 1;
	std::size_t label_width = 4;
	for(const auto& m : problem.models()) label_width = std::max(label_width, m.name().size());

	std::ostringstream out;
	out << pad("time", label_width) << " |";
	for(Clock t = 0; t < horizon; ++t) out << pad(std::to_string(t), cell);
	out << "\n";
	for(std::size_t m = 0; m < schedule.models.size(); ++m) {
		std::string lane(static_cast<std::size_t>(horizon) * cell, '.');
		std::vector<std::string> instants;
		for(const auto& r : rows) {
			if(r.ref.model != m) continue;
			const auto duration = static_cast<std::size_t>(problem.attributes(r.ref).duration);
			if(duration == 0) {
				instants.push_back(r.local + "@" + std::to_string(r.clock));
				continue;
			}
			// id, '-' filler, '|' closing the span
			std::string span = r.local;
			span.append(duration * cell - 1 - r.local.size(), '-');
			span += '|';
			lane.replace(static_cast<std::size_t>(r.clock) * cell, span.size(), span);
		}
		out << pad(problem.model(m).name(), label_width) << " |" << lane;
		if(!instants.empty()) {
			out << "  (instant:";
			for(const auto& i : instants) out << " " << i;
			out << ")";
		}
		out << "\n";
	}
	return out.str();
}

std::string render_report(const EventStructure& model, const ValidationReport& report) {
	std::ostringstream out;
	out << "model " << model.name() << ": " << model.size() << " events, " << model.immediate().pair_count()
	    << " edges, " << model.direct_conflicts().pair_count() / 2 << " direct conflicts\n";
	for(const auto& r : report.axioms) {
		out << to_string(r.axiom) << ": ";
		if(r.passed) {
			out << "pass\n";
			continue;
		}
		out << "FAIL (";
		for(std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? ", " : "") << model.id(r.witness[i]).qualified();
		out << ")\n";
	}
	out << "result: " << (report.passed() ? "valid" : "invalid") << "\n";
	return out.str();
}

std::string render_traces(const EventStructure& model, const std::vector<Trace>& traces) {
	std::ostringstream out;
	out << "model " << model.name() << ": " << traces.size() << " trace" << (traces.size() == 1 ? "" : "s") << "\n";
	for(const auto& t : traces) out << model.format_set(t.events()) << "\n";
	return out.str();
}

} // namespace lesc
