#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"

#include "lesc/cli.hpp"

using namespace lesc;

namespace {

struct Run {
	int code;
	std::string out;
	std::string err;
};

Run run(std::vector<std::string> args) {
	std::ostringstream out, err;
	const int code = run_cli(args, out, err);
	return {code, out.str(), err.str()};
}

std::vector<std::string> solve_args(const std::string& scenario) {
	return {"solve",
	        "--model", test::data_path("pathways/A.les"),
	        "--model", test::data_path("pathways/B.les"),
	        "--model", test::data_path("pathways/C.les"),
	        "--scenario", test::data_path("pathways/" + scenario)};
}

std::string temp_file(const std::string& name, const std::string& text = "") {
	const auto dir = std::filesystem::temp_directory_path() / "lesc_test_cli";
	std::filesystem::create_directories(dir);
	const auto path = (dir / name).string();
	if(!text.empty()) std::ofstream(path) << text;
	return path;
}

} // namespace

TEST_CASE("solve prints the golden table") {
	auto args = solve_args("base.scn");
	args.insert(args.end(), {"--backend", "native", "--format", "table"});
	const auto r = run(args);
	CHECK(r.code == 0);
	CHECK(r.out.rfind("clock event order priority duration\n0 e0 1 1 1\n", 0) == 0);
	CHECK(r.out.find("5 g4 5 1 4\nobjective=20\n") != std::string::npos);
	CHECK(run(args).out == r.out);

	auto oracle = solve_args("base.scn");
	oracle.insert(oracle.end(), {"--backend", "oracle"});
	CHECK(run(oracle).out == r.out);

	const auto dephased = run(solve_args("dephased.scn"));
	CHECK(dephased.code == 0);
	CHECK(dephased.out.find("6 f2 3 3 3\n") != std::string::npos);
	CHECK(dephased.out.find("objective=22\n") != std::string::npos);
}

TEST_CASE("solve formats and SMT emission") {
	auto machine = solve_args("base.scn");
	machine.insert(machine.end(), {"--format", "machine"});
	CHECK(run(machine).out.find("objective total=20") != std::string::npos);

	auto gantt = solve_args("base.scn");
	gantt.insert(gantt.end(), {"--format", "gantt"});
	CHECK(run(gantt).out.rfind("time |", 0) == 0);

	const auto path = temp_file("out.smt2");
	std::filesystem::remove(path);
	auto emit = solve_args("base.scn");
	emit.insert(emit.end(), {"--emit-smt", path});
	CHECK(run(emit).code == 0);
	CHECK(std::filesystem::file_size(path) > 0);
}

TEST_CASE("solve with an external solver") {
	const char* cmd = std::getenv("LESC_SOLVER_CMD");
	auto args = solve_args("dephased.scn");
	args.insert(args.end(), {"--backend", "smt", "--solver-cmd", cmd && *cmd ? cmd : "/nonexistent/solver"});
	const auto r = run(args);
	if(cmd && *cmd) {
		CHECK(r.code == 0);
		CHECK(r.out.find("objective=22\n") != std::string::npos);
	} else {
		CHECK(r.code == 1);
	}
}

TEST_CASE("usage errors exit with 2") {
	CHECK(run({}).code == 2);
	CHECK(run({"frobnicate"}).code == 2);
	CHECK(run({"solve", "--scenario", test::data_path("pathways/base.scn")}).code == 2);
	CHECK(run({"traces"}).code == 2);
	auto bad_backend = solve_args("base.scn");
	bad_backend.insert(bad_backend.end(), {"--backend", "quantum"});
	CHECK(run(bad_backend).code == 2);
	const auto help = run({"--help"});
	CHECK(help.code == 0);
	CHECK(help.out.find("verify-maximality") != std::string::npos);
}

TEST_CASE("failures exit with 1") {
	CHECK(run({"traces", "--model", "/nonexistent/model.les"}).code == 1);
	const auto cyclic = temp_file("cyclic.les", "model M\nevent a priority=1 duration=1\nevent b priority=1 duration=1\n"
	                                            "edge a b\nedge b a\n");
	const auto r = run({"validate", "--model", cyclic});
	CHECK(r.code == 1);
	CHECK(r.err.find("cyclic.les:") != std::string::npos);

	const auto scn = temp_file("bad.scn", "gamma ma1 mc1 weight=5\n");
	auto args = solve_args("base.scn");
	args.back() = scn;
	CHECK(run(args).code == 1);
}

TEST_CASE("validate, traces and verify-maximality") {
	const auto v = run({"validate", "--model", test::data_path("pathways/A.les")});
	CHECK(v.code == 0);
	CHECK(v.out.find("result: valid") != std::string::npos);

	const auto t = run({"traces", "--model", test::data_path("pathways/A.les")});
	CHECK(t.code == 0);
	CHECK(t.out == "model A: 2 traces\n{e0,e1,e2,e4}\n{e0,e1,e3}\n");

	const auto path = temp_file("eq.smt2");
	const auto m = run({"verify-maximality", "--model", test::data_path("pathways/B.les"), "--emit-smt", path});
	CHECK(m.code == 0);
	CHECK(m.out.find("agree") != std::string::npos);
	CHECK(std::filesystem::file_size(path) > 0);
}

TEST_CASE("scenario warnings go to stderr") {
	const auto scn = temp_file("warn.scn", "gamma ma1 nothing\n");
	auto args = solve_args("base.scn");
	args.back() = scn;
	const auto r = run(args);
	CHECK(r.code == 0);
	CHECK(r.err.find("warning:") != std::string::npos);
}
