#pragma once

// Brute-force reference computations. These only read the raw declared
// relations and attributes, never the library's derived results.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lesc/problem.hpp"

namespace lesc::oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix to_matrix(const Relation& r) {
	Matrix m(r.size(), std::vector<bool>(r.size(), false));
	for(std::size_t i = 0; i < r.size(); ++i)
		for(std::size_t j = 0; j < r.size(); ++j) m[i][j] = r.test(i, j);
	return m;
}

/// I + R + R^2 + ... + R^n by repeated boolean matrix products.
inline Matrix matrix_power_closure(const Matrix& r) {
	const std::size_t n = r.size();
	Matrix result(n, std::vector<bool>(n, false));
	Matrix power(n, std::vector<bool>(n, false));
	for(std::size_t i = 0; i < n; ++i) result[i][i] = power[i][i] = true;
	for(std::size_t step = 0; step < n; ++step) {
		Matrix next(n, std::vector<bool>(n, false));
		for(std::size_t i = 0; i < n; ++i)
			for(std::size_t k = 0; k < n; ++k)
				if(power[i][k])
					for(std::size_t j = 0; j < n; ++j)
						if(r[k][j]) next[i][j] = true;
		power = next;
		for(std::size_t i = 0; i < n; ++i)
			for(std::size_t j = 0; j < n; ++j)
				if(power[i][j]) result[i][j] = true;
	}
	return result;
}

/// Repeats the rule e#e', e'->*e'' => e#e'' (and symmetry) until nothing changes.
inline Matrix fixpoint_conflicts(const Matrix& direct, const Matrix& causality) {
	const std::size_t n = direct.size();
	Matrix c = direct;
	for(std::size_t i = 0; i < n; ++i)
		for(std::size_t j = 0; j < n; ++j)
			if(direct[i][j]) c[j][i] = true;
	for(bool changed = true; changed;) {
		changed = false;
		for(std::size_t a = 0; a < n; ++a)
			for(std::size_t b = 0; b < n; ++b)
				if(c[a][b])
					for(std::size_t d = 0; d < n; ++d)
						if(causality[b][d] && !c[a][d]) {
							c[a][d] = c[d][a] = true;
							changed = true;
						}
	}
	return c;
}

struct Relations {
	Matrix causality;
	Matrix conflict;
};

inline Relations relations_of(const EventStructure& m) {
	Relations r;
	r.causality = matrix_power_closure(to_matrix(m.immediate()));
	r.conflict = fixpoint_conflicts(to_matrix(m.direct_conflicts()), r.causality);
	return r;
}

/// Conflict-free and downward-closed, checked pair by pair.
inline bool is_configuration(const Relations& r, std::uint64_t mask) {
	const std::size_t n = r.causality.size();
	for(std::size_t i = 0; i < n; ++i) {
		if(!(mask >> i & 1)) continue;
		for(std::size_t j = 0; j < n; ++j) {
			if((mask >> j & 1) && r.conflict[i][j]) return false;
			if(!(mask >> j & 1) && r.causality[j][i]) return false;
		}
	}
	return true;
}

/// A configuration none of whose strict supersets is a configuration.
inline bool is_trace(const Relations& r, std::uint64_t mask) {
	const std::size_t n = r.causality.size();
	if(!is_configuration(r, mask)) return false;
	const std::uint64_t all = (std::uint64_t{1} << n) - 1;
	const std::uint64_t rest = all & ~mask;
	for(std::uint64_t extra = rest; extra; extra = (extra - 1) & rest) {
		if(is_configuration(r, mask | extra)) return false;
	}
	return true;
}

inline std::vector<std::uint64_t> all_traces(const EventStructure& m) {
	const auto r = relations_of(m);
	std::vector<std::uint64_t> out;
	for(std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.size()); ++mask) {
		if(is_trace(r, mask)) out.push_back(mask);
	}
	return out;
}

/// Every order of the selected events that respects causality.
inline std::vector<std::vector<std::size_t>> permutation_extensions(const EventStructure& m, std::uint64_t selection) {
	const auto r = relations_of(m);
	std::vector<std::size_t> sel;
	for(std::size_t i = 0; i < m.size(); ++i)
		if(selection >> i & 1) sel.push_back(i);
	std::sort(sel.begin(), sel.end());
	std::vector<std::vector<std::size_t>> out;
	do {
		bool ok = true;
		for(std::size_t a = 0; a < sel.size() && ok; ++a)
			for(std::size_t b = a + 1; b < sel.size() && ok; ++b)
				if(r.causality[sel[b]][sel[a]]) ok = false;
		if(ok) out.push_back(sel);
	} while(std::next_permutation(sel.begin(), sel.end()));
	return out;
}

/// One model's part of a schedule: execution order of the selected events.
struct Lane {
	std::vector<std::size_t> order;
};

/// Objective straight from its definition: priorities of selected events plus,
/// for every ordered cross-model pair, the summed gamma weight when the second
/// event starts inside the first one's [start, start + duration) window.
inline std::int64_t objective(const CompositionProblem& p, const std::vector<Lane>& lanes) {
	struct Placed {
		std::size_t model;
		std::size_t event;
		std::int64_t start;
	};
	std::vector<Placed> placed;
	std::int64_t total = 0;
	for(std::size_t m = 0; m < lanes.size(); ++m) {
		std::int64_t t = p.offset(m);
		for(auto e : lanes[m].order) {
			placed.push_back({m, e, t});
			total += p.model(m).attributes(e).priority;
			t += p.model(m).attributes(e).duration;
		}
	}
	for(const auto& j : placed) {
		for(const auto& k : placed) {
			if(j.model == k.model) continue;
			std::int64_t d = 0;
			for(const auto& lj : p.model(j.model).attributes(j.event).labels)
				for(const auto& lk : p.model(k.model).attributes(k.event).labels)
					if(auto w = p.gamma().weight(lj, lk)) d += *w;
			const std::int64_t dist = k.start - j.start;
			if(dist >= 0 && dist < p.model(j.model).attributes(j.event).duration) total += d;
		}
	}
	return total;
}

} // namespace lesc::oracle
