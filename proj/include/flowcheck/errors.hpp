#pragma once

#include <stdexcept>

namespace flowcheck {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exponent landed exactly on a value the theory cannot cross (q = 3).
struct CriticalExponent : Error {
  using Error::Error;
};

// An exponent lies outside the admissible range of the requested criterion.
struct ExponentOutOfRange : Error {
  using Error::Error;
};

// Slip boundary conditions require a topologically trivial domain for the
// curl-to-gradient transfer.
struct TopologyObstruction : Error {
  using Error::Error;
};

// An iteration step would produce a time exponent below 1.
struct IterationExhausted : Error {
  using Error::Error;
};

// The hypothesis scaling level is too weak for any conclusion.
struct HypothesisTooWeak : Error {
  using Error::Error;
};

// A numerical configuration fails its construction-time validation.
struct InvalidConfig : Error {
  using Error::Error;
};

// A time integration left the regime where its output is meaningful.
struct DivergedSimulation : Error {
  using Error::Error;
};

// A requested ratio is 0/0.
struct UndefinedRatio : Error {
  using Error::Error;
};

}  // namespace flowcheck
