#include "lesc/smtlib.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "lesc/error.hpp"

namespace lesc {

namespace {

bool is_simple_symbol(std::string_view s) {
	static constexpr std::string_view extra = "~!@$%^&*_-+=<>.?/";
	if(s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
	for(char c : s) {
		if(!std::isalnum(static_cast<unsigned char>(c)) && extra.find(c) == std::string_view::npos) return false;
	}
	return true;
}

std::string int_lit(std::int64_t v) {
	return v < 0 ? "(- " + std::to_string(-v) + ")" : std::to_string(v);
}

std::string nary(std::string_view op, const std::vector<std::string>& args, std::string_view unit) {
	if(args.empty()) return std::string(unit);
	if(args.size() == 1) return args.front();
	std::string out = "(" + std::string(op);
	for(const auto& a : args) out += " " + a;
	return out + ")";
}

std::string rank_fn(const EventStructure& model) {
	return smt_symbol("s_" + model.name());
}

std::string app(std::string_view f, const std::string& arg) {
	return "(" + std::string(f) + " " + arg + ")";
}

} // namespace

std::string smt_symbol(std::string_view raw) {
	if(is_simple_symbol(raw)) return std::string(raw);
	std::string out = "|";
	for(char c : raw) {
		if(c != '|' && c != '\\') out += c;
	}
	return out + "|";
}

std::string smt_event(const EventStructure& model, std::size_t e) {
	std::string q = model.id(e).qualified();
	for(auto& c : q) {
		if(c == '.') c = '_';
	}
	return smt_symbol(q);
}

std::string emit_smtlib(const CompositionProblem& problem) {
	std::ostringstream out;
	out << "; joint schedule of " << problem.model_count() << " event structure(s)\n";
	out << "(set-option :produce-models true)\n";

	std::vector<std::string> objective_terms;
	if(problem.event_count() == 0) {
		out << "(declare-const objective Int)\n";
		out << "(assert true)\n";
	} else {
		out << "(declare-datatypes ((Event 0)) ((";
		bool first = true;
		for(const auto& model : problem.models()) {
			for(std::size_t e = 0; e < model.size(); ++e) {
				out << (first ? "" : " ") << "(" << smt_event(model, e) << ")";
				first = false;
			}
		}
		out << ")))\n";
		out << "(declare-fun sel (Event) Bool)\n";
		for(const auto& model : problem.models()) {
			if(model.size()) out << "(declare-fun " << rank_fn(model) << " (Event) Int)\n";
		}
		out << "(declare-fun clock (Event) Int)\n";
		out << "(declare-fun score (Event) Int)\n";
		out << "(declare-fun Score (Event Event) Int)\n";
		out << "(declare-const objective Int)\n";
	}

	for(std::size_t m = 0; m < problem.model_count(); ++m) {
		const auto& model = problem.model(m);
		const std::size_t n = model.size();
		if(n == 0) continue;
		auto ev = [&](std::size_t e) { return smt_event(model, e); };
		auto sel = [&](std::size_t e) { return app("sel", ev(e)); };
		auto rank = [&](std::size_t e) { return app(rank_fn(model), ev(e)); };
		auto clock = [&](std::size_t e) { return app("clock", ev(e)); };

		out << "\n; ---- model " << model.name() << "\n";
		out << "; conflict-free\n";
		for(std::size_t j = 0; j < n; ++j) {
			for(std::size_t k = j + 1; k < n; ++k) {
				if(model.conflict().test(j, k)) out << "(assert (not (and " << sel(j) << " " << sel(k) << ")))\n";
			}
		}
		out << "; downward-closed\n";
		for(auto [from, to] : model.immediate().pairs()) {
			out << "(assert (=> " << sel(to) << " " << sel(from) << "))\n";
		}
		out << "; maximality: every unselected event is blocked\n";
		for(std::size_t z = 0; z < n; ++z) {
			std::vector<std::string> reasons;
			for(std::size_t y = 0; y < n; ++y) {
				if(model.conflict().test(y, z)) reasons.push_back(sel(y));
			}
			immediate_predecessors(model.immediate(), z).for_each([&](std::size_t y) {
				reasons.push_back("(not " + sel(y) + ")");
			});
			out << "(assert (=> (not " << sel(z) << ") " << nary("or", reasons, "false") << "))\n";
		}
		out << "; rank: order-preserving, injective, onto 1.." << n << ", selected first\n";
		for(auto [j, k] : model.causality().pairs()) {
			if(j != k) out << "(assert (<= " << rank(j) << " " << rank(k) << "))\n";
		}
		if(n > 1) {
			out << "(assert (distinct";
			for(std::size_t e = 0; e < n; ++e) out << " " << rank(e);
			out << "))\n";
		}
		for(std::size_t e = 0; e < n; ++e) {
			out << "(assert (and (>= " << rank(e) << " 1) (<= " << rank(e) << " " << n << ")))\n";
		}
		for(std::size_t j = 0; j < n; ++j) {
			for(std::size_t k = 0; k < n; ++k) {
				if(j == k) continue;
				out << "(assert (=> (and " << sel(j) << " (not " << sel(k) << ")) (< " << rank(j) << " " << rank(k)
				    << ")))\n";
			}
		}
		out << "; clocks: root at offset " << problem.offset(m) << ", successor starts when predecessor ends\n";
		for(std::size_t e = 0; e < n; ++e) {
			out << "(assert (=> (and " << sel(e) << " (= " << rank(e) << " 1)) (= " << clock(e) << " "
			    << int_lit(problem.offset(m)) << ")))\n";
		}
		for(std::size_t j = 0; j < n; ++j) {
			for(std::size_t k = 0; k < n; ++k) {
				if(j == k) continue;
				out << "(assert (=> (and " << sel(j) << " " << sel(k) << " (= (- " << rank(k) << " " << rank(j)
				    << ") 1)) (= " << clock(k) << " (+ " << clock(j) << " " << int_lit(model.attributes(j).duration)
				    << "))))\n";
			}
		}
		out << "; event scores\n";
		for(std::size_t e = 0; e < n; ++e) {
			out << "(assert (= " << app("score", ev(e)) << " (ite " << sel(e) << " "
			    << int_lit(model.attributes(e).priority) << " 0)))\n";
			objective_terms.push_back(app("score", ev(e)));
		}
	}

	const PenaltyTable penalties(problem);
	if(!penalties.entries().empty()) out << "\n; pair scores (pairs without a label conflict score 0 and are omitted)\n";
	for(const auto& entry : penalties.entries()) {
		for(int orientation = 0; orientation < 2; ++orientation) {
			const EventRef j = orientation == 0 ? entry.a : entry.b;
			const EventRef k = orientation == 0 ? entry.b : entry.a;
			const std::string ej = smt_event(problem.model(j.model), j.event);
			const std::string ek = smt_event(problem.model(k.model), k.event);
			const std::string distance = "(- (clock " + ek + ") (clock " + ej + "))";
			const std::string score = "(Score " + ej + " " + ek + ")";
			out << "(assert (= " << score << " (ite (and (sel " << ej << ") (sel " << ek << ") (<= 0 " << distance
			    << ") (< " << distance << " " << int_lit(problem.attributes(j).duration) << ")) "
			    << int_lit(entry.weight) << " 0)))\n";
			objective_terms.push_back(score);
		}
	}

	out << "\n(assert (= objective " << nary("+", objective_terms, "0") << "))\n";
	out << "(maximize objective)\n";
	out << "(check-sat)\n";
	out << "(get-objectives)\n";
	out << "(get-value (objective))\n";
	if(problem.event_count() > 0) {
		out << "(get-value (";
		bool first = true;
		for(const auto& model : problem.models()) {
			for(std::size_t e = 0; e < model.size(); ++e) {
				const std::string ev = smt_event(model, e);
				out << (first ? "" : " ") << "(sel " << ev << ") (" << rank_fn(model) << " " << ev << ") (clock " << ev
				    << ")";
				first = false;
			}
		}
		out << "))\n";
	}
	return out.str();
}

// ---------------------------------------------------------------------------
// Reply parsing

namespace sexpr {

std::string Node::str() const {
	if(is_atom()) return atom();
	std::string out = "(";
	for(std::size_t i = 0; i < list().size(); ++i) {
		if(i) out += " ";
		out += list()[i].str();
	}
	return out + ")";
}

std::vector<Node> parse_all(std::string_view text) {
	std::size_t pos = 0;
	auto skip = [&] {
		while(pos < text.size()) {
			if(std::isspace(static_cast<unsigned char>(text[pos]))) {
				++pos;
			} else if(text[pos] == ';') {
				while(pos < text.size() && text[pos] != '\n') ++pos;
			} else {
				break;
			}
		}
	};
	auto parse = [&](auto&& self) -> Node {
		skip();
		if(pos >= text.size()) throw ModelParseError("unexpected end of solver output");
		const char c = text[pos];
		if(c == '(') {
			++pos;
			std::vector<Node> items;
			for(;;) {
				skip();
				if(pos >= text.size()) throw ModelParseError("unbalanced parenthesis in solver output");
				if(text[pos] == ')') {
					++pos;
					break;
				}
				items.push_back(self(self));
			}
			return Node{std::move(items)};
		}
		if(c == ')') throw ModelParseError("unexpected ')' in solver output");
		const std::size_t start = pos;
		if(c == '"' || c == '|') {
			++pos;
			while(pos < text.size() && text[pos] != c) ++pos;
			if(pos >= text.size()) throw ModelParseError("unterminated literal in solver output");
			++pos;
		} else {
			while(pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '(' &&
			      text[pos] != ')' && text[pos] != ';') {
				++pos;
			}
		}
		return Node{std::string(text.substr(start, pos - start))};
	};

	std::vector<Node> out;
	for(skip(); pos < text.size(); skip()) out.push_back(parse(parse));
	return out;
}

} // namespace sexpr

namespace {

std::optional<std::int64_t> read_int(const sexpr::Node& n) {
	try {
		if(n.is_atom()) {
			std::size_t used = 0;
			const auto v = std::stoll(n.atom(), &used);
			if(used == n.atom().size()) return v;
			return std::nullopt;
		}
		if(n.list().size() == 2 && n.list()[0].is_atom() && n.list()[0].atom() == "-") {
			if(auto v = read_int(n.list()[1])) return -*v;
		}
	} catch(const std::exception&) {
	}
	return std::nullopt;
}

} // namespace

ScheduledTrace decode_solver_output(const CompositionProblem& problem, std::string_view output) {
	const auto items = sexpr::parse_all(output);
	if(items.empty()) throw ModelParseError("empty solver output");
	for(const auto& item : items) {
		if(!item.is_atom() && !item.list().empty() && item.list()[0].is_atom() && item.list()[0].atom() == "error") {
			throw ModelParseError("solver error: " + item.str());
		}
	}
	if(!items[0].is_atom()) throw ModelParseError("expected sat/unsat, got " + items[0].str());
	if(items[0].atom() == "unsat") throw SolverReportedUnsat("solver reported unsat");
	if(items[0].atom() != "sat") throw ModelParseError("solver answered " + items[0].atom());

	// Every get-value reply is a list of (term value) pairs.
	std::map<std::string, const sexpr::Node*> values;
	for(std::size_t i = 1; i < items.size(); ++i) {
		if(items[i].is_atom()) continue;
		for(const auto& pair : items[i].list()) {
			if(pair.is_atom() || pair.list().size() != 2) continue;
			values[pair.list()[0].str()] = &pair.list()[1];
		}
	}
	auto lookup = [&](const std::string& term) -> const sexpr::Node& {
		auto it = values.find(term);
		if(it == values.end()) throw ModelParseError("solver output has no value for " + term);
		return *it->second;
	};
	auto lookup_int = [&](const std::string& term) {
		if(auto v = read_int(lookup(term))) return *v;
		throw ModelParseError("non-integer value for " + term + ": " + lookup(term).str());
	};

	const std::int64_t reported = lookup_int("objective");

	std::vector<ModelSchedule> models;
	for(std::size_t m = 0; m < problem.model_count(); ++m) {
		const auto& model = problem.model(m);
		ModelSchedule s{EventSet(model.size()), {model.name(), std::vector<std::size_t>(model.size(), 0)},
		                {problem.offset(m), std::vector<std::optional<Clock>>(model.size())}};
		std::vector<std::optional<Clock>> solver_clocks(model.size());
		for(std::size_t e = 0; e < model.size(); ++e) {
			const std::string ev = smt_event(model, e);
			const auto& sel = lookup("(sel " + ev + ")");
			if(!sel.is_atom() || (sel.atom() != "true" && sel.atom() != "false")) {
				throw ModelParseError("non-boolean selection for " + ev + ": " + sel.str());
			}
			if(sel.atom() == "true") s.selection.set(e);
			const auto r = lookup_int("(" + rank_fn(model) + " " + ev + ")");
			if(r < 1 || r > static_cast<std::int64_t>(model.size())) {
				throw ObjectiveMismatch("rank " + std::to_string(r) + " of " + ev + " is out of range");
			}
			s.rank.rank[e] = static_cast<std::size_t>(r);
			if(s.selection.test(e)) solver_clocks[e] = lookup_int("(clock " + ev + ")");
		}
		if(!is_trace(s.selection, model)) {
			throw ObjectiveMismatch("solver selection " + model.format_set(s.selection) + " is not a trace of " +
			                        model.name());
		}
		if(!validate_rank(s.rank, s.selection, model.causality())) {
			throw ObjectiveMismatch("solver rank function for " + model.name() + " is invalid");
		}
		s.clocks = assign_clocks(model, s.rank, s.selection, problem.offset(m));
		if(s.clocks.start != solver_clocks) {
			throw ObjectiveMismatch("solver clocks for " + model.name() + " disagree with ranks and durations");
		}
		models.push_back(std::move(s));
	}

	ScheduledTrace out{std::move(models), {}};
	out.breakdown = objective(problem, out.models);
	if(out.breakdown.total != reported) {
		throw ObjectiveMismatch("solver reported objective " + std::to_string(reported) + ", local recomputation gives " +
		                        std::to_string(out.breakdown.total));
	}
	return out;
}

std::string run_with_input(const std::string& command, std::string_view input) {
	char path[] = "/tmp/lesc-XXXXXX.smt2";
	const int fd = ::mkstemps(path, 5);
	if(fd < 0) throw SolverUnavailable("cannot create a temporary input file");
	::close(fd);
	{
		std::ofstream f(path, std::ios::binary);
		f << input;
	}
	struct Cleanup {
		const char* p;
		~Cleanup() { std::remove(p); }
	} cleanup{path};

	const std::string full = "(" + command + ") < " + path;
	FILE* pipe = ::popen(full.c_str(), "r");
	if(!pipe) throw SolverUnavailable("cannot start solver command: " + command);
	std::string output;
	char buffer[4096];
	std::size_t got = 0;
	while((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
	const int status = ::pclose(pipe);
	if(status == -1 || (WIFEXITED(status) && (WEXITSTATUS(status) == 127 || WEXITSTATUS(status) == 126))) {
		throw SolverUnavailable("solver command not runnable: " + command);
	}
	if(output.empty()) throw SolverUnavailable("solver command produced no output: " + command);
	return output;
}

ScheduledTrace run_external(const CompositionProblem& problem, const std::string& solver_command) {
	return decode_solver_output(problem, run_with_input(solver_command, emit_smtlib(problem)));
}

} // namespace lesc
