#include "lesc/solver.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "lesc/error.hpp"
#include "lesc/kernels.hpp"

namespace lesc {

namespace {

ScheduledTrace finish(const CompositionProblem& problem, std::vector<ModelSchedule> models) {
	ScheduledTrace out{std::move(models), {}};
	out.breakdown = objective(problem, out.models);
	return out;
}

// ---------------------------------------------------------------------------
// Oracle

std::vector<ModelSchedule> oracle_candidates(const CompositionProblem& problem, std::size_t m, std::uint64_t guard) {
	const auto& model = problem.model(m);
	std::vector<ModelSchedule> out;
	for(const auto& trace : enumerate_traces(model)) {
		const std::uint64_t room = guard - std::min<std::uint64_t>(guard, out.size());
		for(auto& rank : linear_extensions(model, trace.events(), room)) {
			ModelClocks clocks = assign_clocks(model, rank, trace.events(), problem.offset(m));
			out.push_back({trace.events(), std::move(rank), std::move(clocks)});
		}
	}
	std::vector<std::vector<std::string>> keys;
	keys.reserve(out.size());
	for(const auto& s : out) keys.push_back(selected_sequence_ids(model, s));
	std::vector<std::size_t> order(out.size());
	for(std::size_t i = 0; i < order.size(); ++i) order[i] = i;
	std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
	std::vector<ModelSchedule> sorted;
	sorted.reserve(out.size());
	for(auto i : order) sorted.push_back(std::move(out[i]));
	return sorted;
}

} // namespace

ScheduledTrace solve_oracle(const CompositionProblem& problem, const OracleOptions& options) {
	const std::size_t models = problem.model_count();
	std::vector<std::vector<ModelSchedule>> candidates;
	std::uint64_t product = 1;
	for(std::size_t m = 0; m < models; ++m) {
		try {
			candidates.push_back(oracle_candidates(problem, m, options.max_candidates));
		} catch(const TooLarge&) {
			throw TooLarge("oracle: model " + problem.model(m).name() + " alone exceeds " +
			               std::to_string(options.max_candidates) + " candidates");
		}
		product *= candidates.back().size();
		if(product > options.max_candidates) {
			throw TooLarge("oracle: more than " + std::to_string(options.max_candidates) + " candidate schedules");
		}
	}

	const PenaltyTable penalties(problem);
	// Index digits are mixed-radix with model 0 most significant, so increasing
	// index is increasing tie-break order.
	auto decode = [&](std::uint64_t index) {
		std::vector<std::size_t> digits(models);
		for(std::size_t m = models; m-- > 0;) {
			digits[m] = static_cast<std::size_t>(index % candidates[m].size());
			index /= candidates[m].size();
		}
		return digits;
	};
	auto eval = [&](std::uint64_t index) {
		const auto digits = decode(index);
		std::vector<const EventSet*> selections(models);
		std::vector<const ModelClocks*> clocks(models);
		for(std::size_t m = 0; m < models; ++m) {
			selections[m] = &candidates[m][digits[m]].selection;
			clocks[m] = &candidates[m][digits[m]].clocks;
		}
		return penalties.total(problem, selections, clocks);
	};
	const auto best = kernels::argmax(product, eval, options.execution);

	std::vector<ModelSchedule> chosen;
	const auto digits = decode(best.index);
	for(std::size_t m = 0; m < models; ++m) chosen.push_back(candidates[m][digits[m]]);
	return finish(problem, std::move(chosen));
}

// ---------------------------------------------------------------------------
// Native branch-and-bound

namespace {

struct Sequence {
	std::vector<std::size_t> order;
	EventSet selection;
	std::vector<Clock> start;   // valid for selected events only
	std::int64_t priority = 0;
};

class SequenceGenerator {
public:
	SequenceGenerator(const CompositionProblem& problem, std::size_t m, const EventSet& relevant, std::uint64_t limit)
		: model_(problem.model(m)), offset_(problem.offset(m)), relevant_(relevant), limit_(limit),
		  fired_(model_.size()), start_(model_.size(), 0) {
		for(std::size_t e = 0; e < model_.size(); ++e) {
			EventSet p = model_.causality().column(e);
			p.reset(e);
			strict_preds_.push_back(std::move(p));
		}
	}

	// Firing sequences explored in id order come out lexicographically sorted.
	// A prefix whose fired set and relevant clocks repeat an earlier prefix can
	// only produce duplicates of earlier (smaller) sequences, so it is skipped.
	std::vector<Sequence> run() {
		explore(offset_, 0);
		return std::move(out_);
	}

private:
	void explore(Clock now, std::int64_t priority) {
		bool any = false;
		for(auto e : model_.id_order()) {
			if(fired_.test(e) || !strict_preds_[e].is_subset_of(fired_) || model_.conflict().row(e).intersects(fired_)) {
				continue;
			}
			any = true;
			fired_.set(e);
			order_.push_back(e);
			start_[e] = now;
			if(seen_.insert(state_key()).second) {
				explore(now + model_.attributes(e).duration, priority + model_.attributes(e).priority);
			}
			order_.pop_back();
			fired_.reset(e);
		}
		if(!any) {
			if(++explored_ > limit_) {
				throw TooLarge("native: model " + model_.name() + " has more than " + std::to_string(limit_) +
				               " execution sequences");
			}
			out_.push_back({order_, fired_, start_, priority});
		}
	}

	std::vector<std::int64_t> state_key() const {
		std::vector<std::int64_t> key;
		key.reserve(model_.size());
		for(std::size_t e = 0; e < model_.size(); ++e) {
			if(!fired_.test(e)) key.push_back(-2);
			else key.push_back(relevant_.test(e) ? start_[e] : -1);
		}
		return key;
	}

	const EventStructure& model_;
	Clock offset_;
	const EventSet& relevant_;
	std::uint64_t limit_;
	std::uint64_t explored_ = 0;
	std::vector<EventSet> strict_preds_;
	EventSet fired_;
	std::vector<std::size_t> order_;
	std::vector<Clock> start_;
	std::set<std::vector<std::int64_t>> seen_;
	std::vector<Sequence> out_;
};

struct ConflictPair {
	std::size_t a;   // event in the lower-indexed model
	std::size_t b;
	std::int64_t weight;
	std::int64_t duration_a;
	std::int64_t duration_b;
};

class BranchAndBound {
public:
	BranchAndBound(const CompositionProblem& problem, std::vector<std::vector<Sequence>> sequences)
		: problem_(problem), seqs_(std::move(sequences)), models_(problem.model_count()),
		  pairs_(models_, std::vector<std::vector<ConflictPair>>(models_)), choice_(models_, 0),
		  suffix_best_(models_ + 1, 0) {
		const PenaltyTable table(problem);
	for(const auto& entry : table.entries()) {
			pairs_[entry.a.model][entry.b.model].push_back(
				{entry.a.event, entry.b.event, entry.weight, problem.attributes(entry.a).duration,
				 problem.attributes(entry.b).duration});
		}
		for(std::size_t m = models_; m-- > 0;) {
			std::int64_t best = std::numeric_limits<std::int64_t>::min();
			for(const auto& s : seqs_[m]) best = std::max(best, s.priority);
			suffix_best_[m] = suffix_best_[m + 1] + best;
		}
	}

	std::vector<std::size_t> solve(NativeStats& stats) {
		stats_ = &stats;
		search(0, 0);
		return best_choice_;
	}

	std::int64_t best_value() const { return best_value_; }

private:
	std::int64_t penalty(std::size_t ma, const Sequence& x, std::size_t mb, const Sequence& y) const {
		std::int64_t sum = 0;
		for(const auto& p : pairs_[ma][mb]) {
			if(!x.selection.test(p.a) || !y.selection.test(p.b)) continue;
			sum += overlap_penalty(x.start[p.a], y.start[p.b], p.duration_a, p.weight);
			sum += overlap_penalty(y.start[p.b], x.start[p.a], p.duration_b, p.weight);
		}
		return sum;
	}

	// Leaves are reached in tie-break order, so only strict improvements replace
	// the incumbent and a bound equal to it cannot win.
	void search(std::size_t m, std::int64_t value) {
		++stats_->nodes;
		if(m == models_) {
			if(!have_best_ || value > best_value_) {
				have_best_ = true;
				best_value_ = value;
				best_choice_ = choice_;
			}
			return;
		}
		for(std::size_t c = 0; c < seqs_[m].size(); ++c) {
			const Sequence& s = seqs_[m][c];
			std::int64_t v = value + s.priority;
			if(have_best_ && v + suffix_best_[m + 1] <= best_value_) {
				++stats_->pruned;
				continue;
			}
			for(std::size_t p = 0; p < m; ++p) v += penalty(p, seqs_[p][choice_[p]], m, s);
			if(have_best_ && v + suffix_best_[m + 1] <= best_value_) {
				++stats_->pruned;
				continue;
			}
			choice_[m] = c;
			search(m + 1, v);
		}
	}

	const CompositionProblem& problem_;
	std::vector<std::vector<Sequence>> seqs_;
	std::size_t models_;
	std::vector<std::vector<std::vector<ConflictPair>>> pairs_;
	std::vector<std::size_t> choice_;
	std::vector<std::int64_t> suffix_best_;
	bool have_best_ = false;
	std::int64_t best_value_ = 0;
	std::vector<std::size_t> best_choice_;
	NativeStats* stats_ = nullptr;
};

} // namespace

ScheduledTrace solve_native(const CompositionProblem& problem, const NativeOptions& options, NativeStats* stats) {
	NativeStats local;
	NativeStats& st = stats ? *stats : local;
	st = {};

	std::vector<EventSet> relevant;
	for(const auto& m : problem.models()) relevant.emplace_back(m.size());
	const PenaltyTable table(problem);
	for(const auto& entry : table.entries()) {
		relevant[entry.a.model].set(entry.a.event);
		relevant[entry.b.model].set(entry.b.event);
	}

	std::vector<std::vector<Sequence>> sequences;
	for(std::size_t m = 0; m < problem.model_count(); ++m) {
		sequences.push_back(SequenceGenerator(problem, m, relevant[m], options.max_sequences_per_model).run());
		st.sequences += sequences.back().size();
	}

	BranchAndBound search(problem, sequences);
	const auto choice = search.solve(st);

	std::vector<ModelSchedule> chosen;
	for(std::size_t m = 0; m < problem.model_count(); ++m) {
		chosen.push_back(make_model_schedule(problem, m, sequences[m][choice[m]].order));
	}
	ScheduledTrace out = finish(problem, std::move(chosen));
	if(out.breakdown.total != search.best_value()) {
		throw std::logic_error("native search value " + std::to_string(search.best_value()) +
		                       " disagrees with objective recomputation " + std::to_string(out.breakdown.total));
	}
	return out;
}

} // namespace lesc
