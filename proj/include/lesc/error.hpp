#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lesc {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

class CycleDetected : public Error {
public:
	CycleDetected(const std::string& what, std::vector<std::size_t> cycle)
		: Error(what), cycle_(std::move(cycle)) { }
	/// Event indices along the cycle, first event not repeated.
	const std::vector<std::size_t>& cycle() const { return cycle_; }

private:
	std::vector<std::size_t> cycle_;
};

class SelfConflict : public Error {
public:
	SelfConflict(const std::string& what, std::size_t event) : Error(what), event_(event) { }
	std::size_t event() const { return event_; }

private:
	std::size_t event_;
};

class UnknownEvent : public Error { using Error::Error; };
class DuplicateName : public Error { using Error::Error; };
class NotAConfiguration : public Error { using Error::Error; };
class NotATrace : public Error { using Error::Error; };
class InvalidRank : public Error { using Error::Error; };
class InvalidSchedule : public Error { using Error::Error; };
class SameModel : public Error { using Error::Error; };
class TooLarge : public Error { using Error::Error; };
class UnknownModel : public Error { using Error::Error; };
class NonNegativeWeight : public Error { using Error::Error; };

class SolverUnavailable : public Error { using Error::Error; };
class SolverReportedUnsat : public Error { using Error::Error; };
class ModelParseError : public Error { using Error::Error; };
class ObjectiveMismatch : public Error { using Error::Error; };

/// Input-file diagnostic; `what()` already carries "source:line:column: ".
class SyntaxError : public Error {
public:
	SyntaxError(const std::string& what, std::size_t line, std::size_t column)
		: Error(what), line_(line), column_(column) { }
	std::size_t line() const { return line_; }
	std::size_t column() const { return column_; }

private:
	std::size_t line_;
	std::size_t column_;
};

} // namespace lesc
