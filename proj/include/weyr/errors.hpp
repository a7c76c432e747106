#ifndef WEYR_ERRORS_HPP
#define WEYR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weyr {

/// Malformed input document or scalar literal.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A stated precondition of an operation does not hold for the given input
/// (non-commuting pair, non-nilpotent matrix, wrong common kernel dimension,
/// invalid structure data, ...).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal invariant of the reduction failed. With valid inputs this is
/// unreachable; it aborts the computation loudly instead of repairing state.
class ReductionInvariantError : public std::logic_error {
 public:
  explicit ReductionInvariantError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace weyr

#endif
