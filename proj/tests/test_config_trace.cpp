#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace lesc;

namespace {

std::uint64_t to_mask(const EventSet& s) {
	std::uint64_t m = 0;
	s.for_each([&](std::size_t i) { m |= std::uint64_t{1} << i; });
	return m;
}

EventSet from_mask(const EventStructure& model, std::uint64_t mask) {
	return EventSet::from_mask(model.size(), mask);
}

test::RandomModelSpec spec_up_to(std::size_t n) {
	test::RandomModelSpec spec;
	spec.max_events = n;
	spec.min_events = 0;
	return spec;
}

} // namespace

TEST_CASE("conflict-free and downward-closed checks on model A") {
	const auto a = test::model_a();
	CHECK(is_conflict_free(a.make_set({"e0", "e1", "e2", "e4"}), a.conflict()));
	CHECK_FALSE(is_conflict_free(a.make_set({"e2", "e3"}), a.conflict()));
	CHECK_FALSE(is_conflict_free(a.make_set({"e3", "e4"}), a.conflict()));
	CHECK(is_conflict_free(EventSet(a.size()), a.conflict()));

	CHECK(is_downward_closed(a.make_set({"e0", "e1", "e3"}), a.causality()));
	CHECK_FALSE(is_downward_closed(a.make_set({"e1"}), a.causality()));
	CHECK(is_downward_closed(EventSet(a.size()), a.causality()));

	CHECK(is_configuration(a.make_set({"e0", "e1", "e2"}), a));
	CHECK_FALSE(is_configuration(a.make_set({"e0", "e1", "e2", "e3"}), a));
	CHECK(is_configuration(EventSet(a.size()), a));
}

TEST_CASE("is_trace on model A") {
	const auto a = test::model_a();
	CHECK(is_trace(a.make_set({"e0", "e1", "e2", "e4"}), a));
	CHECK(is_trace(a.make_set({"e0", "e1", "e3"}), a));
	CHECK_FALSE(is_trace(a.make_set({"e0", "e1"}), a));
	CHECK_FALSE(is_trace(a.make_set({"e0", "e1", "e2"}), a));
	CHECK_FALSE(is_trace(a.make_set({"e1", "e3"}), a));   // not a configuration
	CHECK_FALSE(is_trace(EventSet(a.size()), a));
}

TEST_CASE("is_maximal_conf_smt") {
	const auto a = test::model_a();
	CHECK(is_maximal_conf_smt(a.make_set({"e0", "e1", "e3"}), a));
	CHECK(is_maximal_conf_smt(a.make_set({"e0", "e1", "e2", "e4"}), a));
	CHECK_FALSE(is_maximal_conf_smt(a.make_set({"e0", "e1"}), a));
	CHECK_FALSE(is_maximal_conf_smt(EventSet(a.size()), a));
	CHECK_THROWS_AS(is_maximal_conf_smt(a.make_set({"e2", "e3"}), a), NotAConfiguration);

	SUBCASE("the unguarded rule rejects every nonempty configuration") {
		CHECK_FALSE(is_maximal_conf_smt(a.make_set({"e0", "e1", "e2", "e4"}), a, MaximalityRule::all_events));
		CHECK_FALSE(is_maximal_conf_smt(a.make_set({"e0", "e1", "e3"}), a, MaximalityRule::all_events));
	}
	SUBCASE("empty model: the empty set is maximal under both rules") {
		const EventStructure empty("E", {}, {}, {});
		CHECK(is_trace(EventSet(0), empty));
		CHECK(is_maximal_conf_smt(EventSet(0), empty));
		CHECK(is_maximal_conf_smt(EventSet(0), empty, MaximalityRule::all_events));
	}
}

TEST_CASE("Configuration and Trace constructors check their argument") {
	const auto a = test::model_a();
	CHECK_NOTHROW(Configuration(a, a.make_set({"e0"})));
	CHECK_THROWS_AS(Configuration(a, a.make_set({"e1"})), NotAConfiguration);
	CHECK_THROWS_AS(Configuration(a, EventSet(3)), UnknownEvent);
	CHECK_NOTHROW(Trace(a, a.make_set({"e0", "e1", "e3"})));
	CHECK_THROWS_AS(Trace(a, a.make_set({"e0", "e1"})), NotATrace);
	CHECK(Trace(a, a.make_set({"e0", "e1", "e3"})).model() == "A");
}

TEST_CASE("enumerate_traces on the pathway models") {
	const auto a = test::model_a();
	const auto b = test::model_b();
	const auto c = test::model_c();
	const auto ta = enumerate_traces(a);
	REQUIRE(ta.size() == 2);
	CHECK(ta[0].events() == a.make_set({"e0", "e1", "e2", "e4"}));
	CHECK(ta[1].events() == a.make_set({"e0", "e1", "e3"}));
	const auto tb = enumerate_traces(b);
	REQUIRE(tb.size() == 1);
	CHECK(tb[0].events() == b.all_events());
	const auto tc = enumerate_traces(c);
	REQUIRE(tc.size() == 2);
	CHECK(tc[0].events() == c.make_set({"f0", "f1", "f2"}));
	CHECK(tc[1].events() == c.make_set({"f0", "f1", "f3"}));

	const EventStructure empty("E", {}, {}, {});
	REQUIRE(enumerate_traces(empty).size() == 1);
	CHECK(enumerate_traces(empty)[0].events().empty());
}

TEST_CASE("lex_less") {
	const auto a = test::model_a();
	CHECK(lex_less(a, a.make_set({"e0"}), a.make_set({"e0", "e1"})));
	CHECK(lex_less(a, a.make_set({"e0", "e1", "e2", "e4"}), a.make_set({"e0", "e1", "e3"})));
	CHECK_FALSE(lex_less(a, a.make_set({"e0"}), a.make_set({"e0"})));
	CHECK(lex_less(a, EventSet(a.size()), a.make_set({"e4"})));
}

TEST_CASE("enumerate_traces matches brute force over all subsets") {
	std::mt19937 rng(2024);
	const auto spec = spec_up_to(10);
	for(int round = 0; round < 150; ++round) {
		const auto m = test::random_model(rng, "T", spec);
		const auto traces = enumerate_traces(m);
		auto expected = oracle::all_traces(m);
		std::vector<std::uint64_t> got;
		for(const auto& t : traces) got.push_back(to_mask(t.events()));
		CHECK(got.size() == expected.size());
		std::vector<std::uint64_t> sorted_got = got;
		std::sort(sorted_got.begin(), sorted_got.end());
		std::sort(expected.begin(), expected.end());
		CHECK(sorted_got == expected);
		CHECK(std::adjacent_find(sorted_got.begin(), sorted_got.end()) == sorted_got.end());
		for(std::size_t i = 0; i + 1 < traces.size(); ++i) CHECK(lex_less(m, traces[i].events(), traces[i + 1].events()));
		if(m.size() > 0) {
			for(const auto& t : traces) CHECK_FALSE(t.events().empty());
		}
		if(m.direct_conflicts().pair_count() == 0) {
			REQUIRE(traces.size() == 1);
			CHECK(traces[0].events() == m.all_events());
		}
	}
}

TEST_CASE("is_trace equals the all-supersets definition on small models") {
	std::mt19937 rng(5);
	const auto spec = spec_up_to(10);
	for(int round = 0; round < 80; ++round) {
		const auto m = test::random_model(rng, "S", spec);
		const auto r = oracle::relations_of(m);
		for(std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.size()); ++mask) {
			const EventSet s = from_mask(m, mask);
			CHECK(is_configuration(s, m) == oracle::is_configuration(r, mask));
			CHECK(is_trace(s, m) == oracle::is_trace(r, mask));
		}
	}
}

TEST_CASE("is_trace and is_maximal_conf_smt agree on every configuration") {
	std::mt19937 rng(31337);
	const auto spec = spec_up_to(12);
	for(int round = 0; round < 60; ++round) {
		const auto m = test::random_model(rng, "Q", spec);
		for(std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.size()); ++mask) {
			const EventSet s = from_mask(m, mask);
			if(!is_configuration(s, m)) continue;
			CHECK(is_trace(s, m) == is_maximal_conf_smt(s, m));
		}
	}
}
