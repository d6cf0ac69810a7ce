#pragma once

#include <stdexcept>
#include <string>

namespace tucong {

// A user-facing precondition was violated (bad dimensions, asymmetric
// instance passed to the symmetric solver, non-weakly-convex delays, ...).
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// The instance has no feasible state.
class InfeasibleError : public std::runtime_error {
public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed (e.g. a non-integral vertex on a TU system).
// Indicates a bug, not a user error.
class InternalInvariantError : public std::logic_error {
public:
  explicit InternalInvariantError(const std::string& what) : std::logic_error(what) {}
};

} // namespace tucong
