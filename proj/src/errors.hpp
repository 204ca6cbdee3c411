#pragma once

#include <stdexcept>
#include <string>

namespace primhom {

// Error categories. The C API collapses these onto its status codes
// (bad input / budget / failed mathematical check / internal).
enum class Err {
  Schema,            // malformed spec/JSON/arguments
  BadParameters,     // constructor preconditions violated
  Io,                // file errors
  ClosureBoundExceeded,
  NotAssociative,
  StateBudgetExceeded,
  DivisionByZero,
  PrimeSearchFailed,
  InternalNonInteger,
  NotAPGroup,
  NotAnAutomorphism,
  EmptyWord,
  ChevalleyWeilViolation,
  OrthogonalityError,
  ExhaustiveCheckFailed,
  Internal,
};

struct PHError : std::runtime_error {
  Err code;
  PHError(Err c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& msg) { throw PHError(c, msg); }

inline void check(bool ok, Err c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

}  // namespace primhom
