#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lesc {

/// Weighted label-conflict pairs. Stored symmetrically: (a, b) and (b, a) are the same pair.
class LabelConflictSet {
public:
	static constexpr std::int64_t default_weight = -1000;

	struct Entry {
		std::string first;
		std::string second;
		std::int64_t weight;
	};

	/// Throws NonNegativeWeight. Re-adding a pair replaces its weight.
	void add(const std::string& a, const std::string& b, std::int64_t weight = default_weight);

	std::optional<std::int64_t> weight(const std::string& a, const std::string& b) const;
	bool contains(const std::string& a, const std::string& b) const { return weight(a, b).has_value(); }
	std::size_t size() const { return pairs_.size(); }
	bool empty() const { return pairs_.empty(); }
	/// Pairs in canonical order (first <= second), sorted.
	std::vector<Entry> entries() const;

private:
	static std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
		return a <= b ? std::pair{a, b} : std::pair{b, a};
	}
	std::map<std::pair<std::string, std::string>, std::int64_t> pairs_;
};

} // namespace lesc
