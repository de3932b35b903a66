#pragma once

#include "flowcheck/errors.hpp"
#include "flowcheck/rational.hpp"

namespace flowcheck {

// Mixed Lebesgue class L^p_t L^q_x on a finite time interval: time_exp = p,
// space_exp = q. Exponents below 1 are representable (they arise as raw
// outputs of exponent algebra) but fail valid().
struct BochnerSpec {
  ExtRational time_exp;
  ExtRational space_exp;

  friend bool operator==(const BochnerSpec& a, const BochnerSpec& b) {
    return a.time_exp == b.time_exp && a.space_exp == b.space_exp;
  }
  friend bool operator!=(const BochnerSpec& a, const BochnerSpec& b) { return !(a == b); }
};

bool valid(const BochnerSpec& s);

// Componentwise Hoelder product: exponents combine by adding reciprocals.
BochnerSpec holder_combine(const BochnerSpec& a, const BochnerSpec& b);

// Space exponent gained by one derivative in three dimensions:
// q < 3 maps to 3q/(3-q), q > 3 to infinity. q = 3 is the borderline
// case with no embedding into L^inf and throws CriticalExponent.
ExtRational sobolev_lift(const ExtRational& q);

// Inclusion of mixed classes on a finite-measure space-time cylinder:
// larger exponents embed into smaller ones.
bool embeds(const BochnerSpec& a, const BochnerSpec& b);

// Parabolic scaling level 2/p + 3/q.
ExtRational scaling_level(const BochnerSpec& s);

}  // namespace flowcheck
