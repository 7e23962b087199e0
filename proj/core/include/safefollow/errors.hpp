#pragma once

#include <stdexcept>
#include <string>

namespace safefollow {

// Follower and target (nearly) coincide; the line-of-sight direction and the
// barrier gradient are undefined.
class DegenerateSeparation : public std::runtime_error {
 public:
  explicit DegenerateSeparation(double separation);
  double separation() const { return separation_; }

 private:
  double separation_;
};

// Halfspace a.u >= b with a ~ 0 and b > 0: no input satisfies it.
class InfeasibleConstraint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// TargetAware filtering was requested without a target velocity estimate.
class MissingTargetVelocity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A waypoint-driven target script has no waypoints.
class EmptyPath : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyLog : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A parameter bundle violates one of its invariants. what() names it.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// NaN or Inf reached an operation that only admits finite values.
class NonFiniteInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace safefollow
