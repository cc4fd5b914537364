#ifndef BURN_ERRORS_HPP
#define BURN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace burn {

class BurnError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (bad shape, unknown vertex,
// budget violated, ...).
class InvalidArgument : public BurnError {
 public:
  using BurnError::BurnError;
};

// The exhaustive solvers refuse instances above their size guard.
class SizeGuardExceeded : public BurnError {
 public:
  using BurnError::BurnError;
};

// A constructive algorithm produced something its own correctness argument
// rules out. Never expected to fire.
class InternalContradiction : public BurnError {
 public:
  using BurnError::BurnError;
};

}  // namespace burn

#endif  // BURN_ERRORS_HPP
