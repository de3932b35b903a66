#pragma once

#include "flowcheck/bochner.hpp"

#include <string>

namespace flowcheck {

// Conclusion strength, ordered so that stronger conclusions compare greater.
enum class VerdictLevel {
  Inconclusive = 0,
  EnergyEquality = 1,
  StrongSolution = 2,
  ClassicalSolution = 3,
};

const char* verdict_name(VerdictLevel level);

struct Verdict {
  VerdictLevel level = VerdictLevel::Inconclusive;
  std::string citation;  // audit tag of the criterion that fired, "none" otherwise
  BochnerSpec witness;   // minimal class certifying the conclusion, or the input
};

enum class BoundaryCondition { Slip, NoSlip };

struct DomainMeta {
  BoundaryCondition bc = BoundaryCondition::NoSlip;
  bool betti_zero = true;  // first Betti number vanishes
};

// Least admissible time exponent for the inviscid gradient energy criterion
// at space exponent q > 6/5: p_req = 5q/(5q-6), weakly decreasing in q.
ExtRational euler_required_time_exponent(const ExtRational& q);

// Least admissible time exponent for the viscous gradient energy criterion
// at space exponent q > 3/2: q/(2q-3) below q = 9/5, 5q/(5q-6) from there on.
// The two branches agree at q = 9/5.
ExtRational nse_required_time_exponent(const ExtRational& q);

// Energy conclusion for an inviscid flow with nabla u in L^p_t L^q_x.
// The inviscid criterion certifies energy equality only; it never yields
// a strong solution. Requires q > 6/5 and additionally q >= 9/5 to fire.
Verdict euler_gradient_verdict(const BochnerSpec& s);

// Conclusion for a viscous flow with nabla u in L^p_t L^q_x, q > 3/2.
// Scaling level <= 2 upgrades the verdict to a strong solution.
Verdict nse_gradient_verdict(const BochnerSpec& s);

// Transfer of a vorticity bound to a gradient bound. Valid on domains with
// no-slip boundary, and on slip domains only when the first Betti number
// vanishes; otherwise harmonic fields obstruct the transfer.
BochnerSpec curl_to_gradient(const BochnerSpec& s, const DomainMeta& meta);

// Membership in the scale-invariant regularity class:
// scaling_level <= 2 with q > 3/2.
bool regularity_class(const BochnerSpec& s);

}  // namespace flowcheck
