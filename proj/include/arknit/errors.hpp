#pragma once

#include <stdexcept>
#include <string>

namespace arknit {

// All reported failure modes derive from Error so callers can catch one type.
// Each condition the engine refuses to guess about gets its own class; the
// what() string carries the witness (offending path, degree, budget, ...).
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InputError : Error {
  using Error::Error;
};

struct NotFiniteDimensionalError : Error {
  using Error::Error;
};

struct NonAdmissibleRelationError : Error {
  using Error::Error;
};

struct ResolutionBoundExceededError : Error {
  using Error::Error;
};

struct NonSplitEndomorphismRingError : Error {
  using Error::Error;
};

struct DecompositionBudgetExceededError : Error {
  using Error::Error;
};

struct IsoSearchBudgetExceededError : Error {
  using Error::Error;
};

struct SocleSelectionFailedError : Error {
  using Error::Error;
};

struct VerificationFailureError : Error {
  using Error::Error;
};

struct CertificateNotFoundError : Error {
  using Error::Error;
};

struct PreconditionUnmetError : Error {
  using Error::Error;
};

// Internal consistency violations (a computed object fails its own axioms).
// These indicate a bug in the engine, not bad user input.
struct InternalCheckError : Error {
  using Error::Error;
};

}  // namespace arknit
