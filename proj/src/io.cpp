#include "lesc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "lesc/error.hpp"

namespace lesc {

namespace {

struct Token {
	std::string text;
	std::size_t column;   // 1-based
};

struct Line {
	std::size_t number;   // 1-based
	std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
	std::vector<Line> lines;
	std::size_t number = 0;
	std::size_t start = 0;
	while(start <= text.size()) {
		std::size_t end = text.find('\n', start);
		if(end == std::string_view::npos) end = text.size();
		std::string_view raw = text.substr(start, end - start);
		++number;
		if(auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
		Line line{number, {}};
		std::size_t i = 0;
		while(i < raw.size()) {
			while(i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
			if(i >= raw.size()) break;
			const std::size_t begin = i;
			while(i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
			line.tokens.push_back({std::string(raw.substr(begin, i - begin)), begin + 1});
		}
		if(!line.tokens.empty()) lines.push_back(std::move(line));
		if(end == text.size()) break;
		start = end + 1;
	}
	return lines;
}

class Locator {
public:
	explicit Locator(std::string_view source) : source_(source) { }

	std::string at(std::size_t line, std::size_t column) const {
		return source_ + ":" + std::to_string(line) + ":" + std::to_string(column) + ": ";
	}
	[[noreturn]] void syntax(const Line& l, const Token& t, const std::string& msg) const {
		throw SyntaxError(at(l.number, t.column) + msg, l.number, t.column);
	}
	[[noreturn]] void syntax_end(const Line& l, const std::string& msg) const {
		const auto& last = l.tokens.back();
		const std::size_t col = last.column + last.text.size();
		throw SyntaxError(at(l.number, col) + msg, l.number, col);
	}

private:
	std::string source_;
};

bool valid_name(std::string_view s) {
	if(s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
	return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool valid_event_id(std::string_view s) {
	return !s.empty() &&
	       std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::optional<std::int64_t> parse_int(std::string_view s) {
	std::int64_t v = 0;
	if(s.empty()) return std::nullopt;
	auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
	if(ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
	return v;
}

std::optional<std::int64_t> parse_nat(std::string_view s) {
	if(s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
		return std::nullopt;
	}
	return parse_int(s);
}

void expect_arity(const Locator& loc, const Line& l, std::size_t n, std::string_view usage) {
	if(l.tokens.size() < n) loc.syntax_end(l, "expected: " + std::string(usage));
	if(l.tokens.size() > n) loc.syntax(l, l.tokens[n], "unexpected token '" + l.tokens[n].text + "'; expected: " +
	                                                       std::string(usage));
}

} // namespace

EventStructure parse_model_file(std::string_view text, std::string_view source) {
	const Locator loc(source);
	const auto lines = tokenize(text);

	std::optional<std::string> name;
	std::vector<EventDecl> events;
	std::map<std::string, std::size_t> declared;
	struct Located {
		IdPair pair;
		std::size_t line;
		std::size_t column;
	};
	std::vector<Located> edges;
	std::vector<Located> conflicts;

	auto resolve = [&](const Line& l, const Token& t) {
		if(!declared.count(t.text)) {
			throw UnknownEvent(loc.at(l.number, t.column) + "event '" + t.text + "' used before its declaration");
		}
		return declared.at(t.text);
	};

	for(const auto& l : lines) {
		const auto& kw = l.tokens[0];
		if(!name && kw.text != "model") loc.syntax(l, kw, "file must start with 'model <name>'");
		if(kw.text == "model") {
			if(name) loc.syntax(l, kw, "second 'model' statement; one model per file");
			expect_arity(loc, l, 2, "model <name>");
			if(!valid_name(l.tokens[1].text)) loc.syntax(l, l.tokens[1], "invalid model name '" + l.tokens[1].text + "'");
			name = l.tokens[1].text;
		} else if(kw.text == "event") {
			if(l.tokens.size() < 2) loc.syntax_end(l, "expected: event <id> priority=<nat> duration=<nat> [labels=...]");
			const auto& id = l.tokens[1];
			if(!valid_event_id(id.text)) loc.syntax(l, id, "invalid event id '" + id.text + "'");
			if(declared.count(id.text)) loc.syntax(l, id, "event '" + id.text + "' declared twice");
			EventDecl decl{id.text, {}};
			std::set<std::string> seen;
			for(std::size_t i = 2; i < l.tokens.size(); ++i) {
				const auto& t = l.tokens[i];
				const auto eq = t.text.find('=');
				if(eq == std::string::npos) loc.syntax(l, t, "expected key=value, got '" + t.text + "'");
				const std::string key = t.text.substr(0, eq);
				const std::string value = t.text.substr(eq + 1);
				if(!seen.insert(key).second) loc.syntax(l, t, "attribute '" + key + "' given twice");
				if(key == "priority" || key == "duration") {
					auto v = parse_nat(value);
					if(!v) loc.syntax(l, t, key + " must be a natural number, got '" + value + "'");
					(key == "priority" ? decl.attributes.priority : decl.attributes.duration) = *v;
				} else if(key == "labels") {
					std::size_t from = 0;
					while(from <= value.size()) {
						auto comma = value.find(',', from);
						if(comma == std::string::npos) comma = value.size();
						const std::string label = value.substr(from, comma - from);
						if(label.empty()) loc.syntax(l, t, "empty label in '" + t.text + "'");
						decl.attributes.labels.insert(label);
						from = comma + 1;
					}
				} else {
					loc.syntax(l, t, "unknown attribute '" + key + "'");
				}
			}
			if(!seen.count("priority")) loc.syntax_end(l, "missing priority=<nat>");
			if(!seen.count("duration")) loc.syntax_end(l, "missing duration=<nat>");
			declared.emplace(decl.id, events.size());
			events.push_back(std::move(decl));
		} else if(kw.text == "edge" || kw.text == "conflict") {
			expect_arity(loc, l, 3, kw.text + " <id> <id>");
			resolve(l, l.tokens[1]);
			resolve(l, l.tokens[2]);
			if(l.tokens[1].text == l.tokens[2].text) {
				const std::size_t e = declared.at(l.tokens[1].text);
				if(kw.text == "edge") {
					throw CycleDetected(loc.at(l.number, kw.column) + "event '" + l.tokens[1].text + "' causes itself", {e});
				}
				throw SelfConflict(loc.at(l.number, kw.column) + "event '" + l.tokens[1].text + "' conflicts with itself",
				                   e);
			}
			Located item{{l.tokens[1].text, l.tokens[2].text}, l.number, kw.column};
			(kw.text == "edge" ? edges : conflicts).push_back(std::move(item));
		} else {
			loc.syntax(l, kw, "unknown statement '" + kw.text + "'");
		}
	}
	if(!name) throw SyntaxError(loc.at(1, 1) + "missing 'model <name>' statement", 1, 1);

	std::vector<IdPair> edge_pairs, conflict_pairs;
	for(const auto& e : edges) edge_pairs.push_back(e.pair);
	for(const auto& c : conflicts) conflict_pairs.push_back(c.pair);
	std::vector<std::string> locals;
	for(const auto& e : events) locals.push_back(e.id);

	try {
		return EventStructure(*name, std::move(events), edge_pairs, conflict_pairs);
	} catch(const CycleDetected& c) {
		// Point at the first edge statement on the reported cycle.
		const auto& cyc = c.cycle();
		for(const auto& e : edges) {
			for(std::size_t i = 0; i < cyc.size(); ++i) {
				if(e.pair.first == locals[cyc[i]] && e.pair.second == locals[cyc[(i + 1) % cyc.size()]]) {
					throw CycleDetected(loc.at(e.line, e.column) + c.what(), cyc);
				}
			}
		}
		throw CycleDetected(loc.at(1, 1) + c.what(), cyc);
	} catch(const SelfConflict& s) {
		// Point at the first direct conflict whose two sides both precede the event.
		Relation g(locals.size());
		for(const auto& e : edges) g.set(declared.at(e.pair.first), declared.at(e.pair.second));
		const Relation causality = close_causality(g, Execution::serial);
		for(const auto& c : conflicts) {
			if(causality.test(declared.at(c.pair.first), s.event()) && causality.test(declared.at(c.pair.second), s.event())) {
				throw SelfConflict(loc.at(c.line, c.column) + s.what(), s.event());
			}
		}
		throw SelfConflict(loc.at(1, 1) + s.what(), s.event());
	}
}

std::string render_model_file(const EventStructure& model) {
	std::ostringstream out;
	out << "model " << model.name() << "\n";
	for(std::size_t e = 0; e < model.size(); ++e) {
		const auto& a = model.attributes(e);
		out << "event " << model.local(e) << " priority=" << a.priority << " duration=" << a.duration;
		if(!a.labels.empty()) {
			out << " labels=";
			bool first = true;
			for(const auto& l : a.labels) {
				out << (first ? "" : ",") << l;
				first = false;
			}
		}
		out << "\n";
	}
	for(auto [from, to] : model.immediate().pairs()) out << "edge " << model.local(from) << " " << model.local(to) << "\n";
	for(auto [a, b] : model.direct_conflicts().pairs()) {
		if(a < b) out << "conflict " << model.local(a) << " " << model.local(b) << "\n";
	}
	return out.str();
}

Scenario parse_scenario_file(std::string_view text, std::vector<EventStructure> models, std::string_view source) {
	const Locator loc(source);
	std::set<std::string> model_names;
	std::set<std::string> known_labels;
	for(const auto& m : models) {
		model_names.insert(m.name());
		for(std::size_t e = 0; e < m.size(); ++e) {
			for(const auto& label : m.attributes(e).labels) known_labels.insert(label);
		}
	}

	std::map<ModelName, Clock> offsets;
	LabelConflictSet gamma;
	std::vector<std::string> warnings;

	for(const auto& l : tokenize(text)) {
		const auto& kw = l.tokens[0];
		if(kw.text == "offset") {
			expect_arity(loc, l, 3, "offset <model> <nat>");
			const auto& m = l.tokens[1];
			if(!model_names.count(m.text)) throw UnknownModel(loc.at(l.number, m.column) + "unknown model '" + m.text + "'");
			if(offsets.count(m.text)) loc.syntax(l, m, "offset for model '" + m.text + "' given twice");
			auto v = parse_nat(l.tokens[2].text);
			if(!v) loc.syntax(l, l.tokens[2], "offset must be a natural number, got '" + l.tokens[2].text + "'");
			offsets[m.text] = *v;
		} else if(kw.text == "gamma") {
			if(l.tokens.size() != 3 && l.tokens.size() != 4) {
				if(l.tokens.size() < 3) loc.syntax_end(l, "expected: gamma <label> <label> [weight=<negative-int>]");
				loc.syntax(l, l.tokens[4], "unexpected token '" + l.tokens[4].text + "'");
			}
			const auto& a = l.tokens[1];
			const auto& b = l.tokens[2];
			std::int64_t weight = LabelConflictSet::default_weight;
			if(l.tokens.size() == 4) {
				const auto& w = l.tokens[3];
				if(w.text.rfind("weight=", 0) != 0) loc.syntax(l, w, "expected weight=<negative-int>, got '" + w.text + "'");
				auto v = parse_int(std::string_view(w.text).substr(7));
				if(!v) loc.syntax(l, w, "weight must be an integer, got '" + w.text.substr(7) + "'");
				if(*v >= 0) {
					throw NonNegativeWeight(loc.at(l.number, w.column) + "gamma weight must be negative, got " +
					                        std::to_string(*v));
				}
				weight = *v;
			}
			if(gamma.contains(a.text, b.text)) loc.syntax(l, a, "gamma pair (" + a.text + ", " + b.text + ") given twice");
			gamma.add(a.text, b.text, weight);
			for(const auto* t : {&a, &b}) {
				if(!known_labels.count(t->text)) {
					warnings.push_back(loc.at(l.number, t->column) + "label '" + t->text + "' is not carried by any event");
				}
			}
		} else {
			loc.syntax(l, kw, "unknown statement '" + kw.text + "'");
		}
	}
	return {CompositionProblem(std::move(models), std::move(gamma), offsets), std::move(warnings)};
}

} // namespace lesc
