#include "lesc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lesc/error.hpp"
#include "lesc/io.hpp"
#include "lesc/smtlib.hpp"
#include "lesc/solver.hpp"
#include "lesc/verify.hpp"

namespace lesc {

namespace {

class CliFailure : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if(!in) throw CliFailure("cannot read " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
	std::ofstream f(path, std::ios::binary);
	if(!f || !(f << text)) throw CliFailure("cannot write " + path);
}

EventStructure load_model(const std::string& path) {
	return parse_model_file(read_file(path), path);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	CLI::App app{"Compose labelled event structures into an optimal joint schedule", "lesc"};
	app.require_subcommand(1);

	std::string model_path;
	auto* validate = app.add_subcommand("validate", "Check the event-structure axioms of one model");
	validate->add_option("--model", model_path, "Model file")->required();

	auto* traces = app.add_subcommand("traces", "List every trace (maximal configuration) of one model");
	traces->add_option("--model", model_path, "Model file")->required();

	std::vector<std::string> model_paths;
	std::string scenario_path;
	std::string backend = "native";
	std::string solver_cmd = "z3 -in";
	std::string format = "table";
	std::string emit_path;
	auto* solve = app.add_subcommand("solve", "Find the objective-maximal joint schedule");
	solve->add_option("--model", model_paths, "Model file (repeat for each model)");
	solve->add_option("--scenario", scenario_path, "Scenario file (offsets and label conflicts)")->required();
	solve->add_option("--backend", backend, "oracle | native | smt")
		->check(CLI::IsMember({"oracle", "native", "smt"}));
	solve->add_option("--solver-cmd", solver_cmd, "External solver command reading SMT-LIB v2 on stdin");
	solve->add_option("--format", format, "table | machine | gantt")->check(CLI::IsMember({"table", "machine", "gantt"}));
	solve->add_option("--emit-smt", emit_path, "Also write the SMT-LIB encoding to this path");

	auto* verify = app.add_subcommand("verify-maximality",
	                                  "Check that the solver-side maximality formula matches the trace definition");
	verify->add_option("--model", model_path, "Model file")->required();
	verify->add_option("--emit-smt", emit_path, "Also write the SMT-LIB cross-check to this path");

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
		if(solve->parsed() && model_paths.empty()) throw CLI::RequiredError("solve requires at least one --model");
	} catch(const CLI::ParseError& e) {
		if(e.get_exit_code() == 0) {
			out << app.help();
			return 0;
		}
		err << "error: " << e.what() << "\n" << "run with --help for usage\n";
		return 2;
	}

	try {
		if(validate->parsed()) {
			const auto model = load_model(model_path);
			const auto report = validate_les(model);
			out << render_report(model, report);
			return report.passed() ? 0 : 1;
		}
		if(traces->parsed()) {
			const auto model = load_model(model_path);
			out << render_traces(model, enumerate_traces(model));
			return 0;
		}
		if(solve->parsed()) {
			std::vector<EventStructure> models;
			for(const auto& p : model_paths) models.push_back(load_model(p));
			auto scenario = parse_scenario_file(read_file(scenario_path), std::move(models), scenario_path);
			for(const auto& w : scenario.warnings) err << "warning: " << w << "\n";
			const auto& problem = scenario.problem;
			if(!emit_path.empty()) write_file(emit_path, emit_smtlib(problem));

			ScheduledTrace schedule;
			if(backend == "oracle") schedule = solve_oracle(problem);
			else if(backend == "native") schedule = solve_native(problem);
			else schedule = run_external(problem, solver_cmd);
			revalidate(problem, schedule);

			if(format == "table") out << render_table(problem, schedule);
			else if(format == "machine") out << render_machine(problem, schedule);
			else out << render_gantt(problem, schedule);
			return 0;
		}
		if(verify->parsed()) {
			const auto model = load_model(model_path);
			if(!emit_path.empty()) write_file(emit_path, emit_equivalence_smt(model));
			const auto result = check_maximality_equivalence(model);
			if(result.passed) {
				out << "model " << model.name() << ": maximality formulations agree on every configuration\n";
				return 0;
			}
			out << "model " << model.name() << ": formulations disagree on " << model.format_set(*result.counterexample)
			    << "\n";
			return 1;
		}
	} catch(const CliFailure& e) {
		err << "error: " << e.what() << "\n";
		return 1;
	} catch(const Error& e) {
		err << "error: " << e.what() << "\n";
		return 1;
	}
	return 2;
}

} // namespace lesc
