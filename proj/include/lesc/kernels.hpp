#pragma once

// Data-parallel kernels. Each kernel has a serial reference in `serial::` and an
// OpenMP version in `parallel::`; both return bit-identical results.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <omp.h>

#include "lesc/relation.hpp"

namespace lesc {

enum class Execution { serial, parallel };

namespace kernels {

/// Result of an argmax sweep: best value and the smallest index attaining it.
struct ArgMax {
	std::int64_t value = std::numeric_limits<std::int64_t>::min();
	std::uint64_t index = std::numeric_limits<std::uint64_t>::max();

	bool found() const { return index != std::numeric_limits<std::uint64_t>::max(); }
	void offer(std::int64_t v, std::uint64_t i) {
		if(v > value || (v == value && i < index)) {
			value = v;
			index = i;
		}
	}
};

namespace serial {

/// Warshall closure of `r` (reflexive pairs are added).
inline Relation reflexive_transitive_closure(const Relation& r) {
	Relation out = r;
	const std::size_t n = out.size();
	for(std::size_t i = 0; i < n; ++i) out.set(i, i);
	for(std::size_t k = 0; k < n; ++k) {
		for(std::size_t i = 0; i < n; ++i) {
			if(out.test(i, k)) out.row(i) |= out.row(k);
		}
	}
	return out;
}

/// Smallest mask in [0, 2^bits) under `less` among those satisfying `pred`.
template <typename Pred, typename Less>
std::optional<std::uint64_t> find_min_mask(unsigned bits, Pred pred, Less less) {
	std::optional<std::uint64_t> best;
	const std::uint64_t total = std::uint64_t{1} << bits;
	for(std::uint64_t m = 0; m < total; ++m) {
		if(pred(m) && (!best || less(m, *best))) best = m;
	}
	return best;
}

/// Maximum of `eval(i)` over [0, count); ties go to the smallest index.
template <typename Eval>
ArgMax argmax(std::uint64_t count, Eval eval) {
	ArgMax best;
	for(std::uint64_t i = 0; i < count; ++i) best.offer(eval(i), i);
	return best;
}

} // namespace serial

namespace parallel {

inline Relation reflexive_transitive_closure(const Relation& r) {
	Relation out = r;
	const auto n = static_cast<std::int64_t>(out.size());
	for(std::int64_t i = 0; i < n; ++i) out.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
	for(std::int64_t k = 0; k < n; ++k) {
		const EventSet pivot = out.row(static_cast<std::size_t>(k));
#pragma omp parallel for schedule(static)
		for(std::int64_t i = 0; i < n; ++i) {
			auto& row = out.row(static_cast<std::size_t>(i));
			if(row.test(static_cast<std::size_t>(k))) row |= pivot;
		}
	}
	return out;
}

template <typename Pred, typename Less>
std::optional<std::uint64_t> find_min_mask(unsigned bits, Pred pred, Less less) {
	std::optional<std::uint64_t> best;
	const auto total = static_cast<std::int64_t>(std::uint64_t{1} << bits);
#pragma omp parallel
	{
		std::optional<std::uint64_t> local;
#pragma omp for schedule(dynamic, 256) nowait
		for(std::int64_t i = 0; i < total; ++i) {
			const auto m = static_cast<std::uint64_t>(i);
			if(pred(m) && (!local || less(m, *local))) local = m;
		}
#pragma omp critical(lesc_find_min_mask)
		{
			if(local && (!best || less(*local, *best))) best = local;
		}
	}
	return best;
}

template <typename Eval>
ArgMax argmax(std::uint64_t count, Eval eval) {
	ArgMax best;
	const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel
	{
		ArgMax local;
#pragma omp for schedule(dynamic, 1024) nowait
		for(std::int64_t i = 0; i < total; ++i) {
			local.offer(eval(static_cast<std::uint64_t>(i)), static_cast<std::uint64_t>(i));
		}
#pragma omp critical(lesc_argmax)
		{
			if(local.found()) best.offer(local.value, local.index);
		}
	}
	return best;
}

} // namespace parallel

inline Relation reflexive_transitive_closure(const Relation& r, Execution exec) {
	return exec == Execution::parallel ? parallel::reflexive_transitive_closure(r)
	                                   : serial::reflexive_transitive_closure(r);
}

template <typename Pred, typename Less>
std::optional<std::uint64_t> find_min_mask(unsigned bits, Pred pred, Less less, Execution exec) {
	return exec == Execution::parallel ? parallel::find_min_mask(bits, pred, less)
	                                   : serial::find_min_mask(bits, pred, less);
}

template <typename Eval>
ArgMax argmax(std::uint64_t count, Eval eval, Execution exec) {
	return exec == Execution::parallel ? parallel::argmax(count, eval) : serial::argmax(count, eval);
}

} // namespace kernels
} // namespace lesc
