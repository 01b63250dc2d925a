#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kedge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Malformed graph input. Carries the 1-based line number that failed.
class ParseError : public Error {
public:
	ParseError(std::size_t line, const std::string &what)
	: Error("line " + std::to_string(line) + ": " + what), line_{line} { }

	std::size_t line() const { return line_; }

private:
	std::size_t line_;
};

/// An operation was called with arguments outside its contract.
class PreconditionError : public Error {
public:
	using Error::Error;
};

/// A structure certificate does not satisfy its defining conditions.
/// `condition()` names the violated condition, e.g. "IM1" or "A4".
class CertificateError : public Error {
public:
	CertificateError(std::string condition, const std::string &what)
	: Error(condition + ": " + what), condition_{std::move(condition)} { }

	const std::string &condition() const { return condition_; }

private:
	std::string condition_;
};

/// A Ramsey-style search came back empty. Only reachable when thresholds
/// have been overridden below the values that guarantee success.
class RamseyExhausted : public Error {
public:
	using Error::Error;
};

/// An exhaustive enumeration was refused because the input is over the guard.
class GuardExceeded : public Error {
public:
	using Error::Error;
};

/// An internal invariant failed. Always a bug.
class InvariantViolation : public Error {
public:
	using Error::Error;
};

} // namespace kedge
