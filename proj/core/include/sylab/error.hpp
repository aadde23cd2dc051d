#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sylab {

enum class ErrorKind {
  LoopArgument,
  DependentContraction,
  SizeLimit,
  OverlappingConstraints,
  BadRange,
  BadParameters,
  NotAPartition,
  NotSymmetric,
  PreconditionUnmet,
  UnknownEdge,
  DegenerateEdge,
  ZeroDenominator,
  NoCandidate,
  BadQuotient,
  ParallelPair,
  EmptyMatroid,
  ParseError,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so
// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace sylab
