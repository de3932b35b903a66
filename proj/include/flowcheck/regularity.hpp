#pragma once

#include "flowcheck/criteria.hpp"

namespace flowcheck {

enum class IntervalSide { Left, Right };

const char* side_name(IntervalSide s);

// Row n of the interval decomposition of (3, inf) into abutting pieces
// I_n = L_n union R_n. Both pieces are half-open (lo, hi]; for n = 1 the
// right piece is unbounded and R_hi is +inf.
struct IntervalRow {
  long n = 0;
  ExtRational L_lo, L_hi;
  ExtRational R_lo, R_hi;
  ExtRational crossover;        // equals L_hi; both branch formulas agree here
  ExtRational alpha_at_L_left;  // left-branch formula evaluated at L_lo
  ExtRational level_L, level_R; // scaling levels the two branches demand
};

IntervalRow ln_rn(long n);

struct BetaLocation {
  long n = 0;
  IntervalSide side = IntervalSide::Left;
};

// Which row and branch a finite space exponent beta > 3 falls into.
BetaLocation locate_beta(const ExtRational& beta);

// Least multiplier time exponent alpha for which the closed-form viscous
// regularity conclusion holds at space exponent beta > 3.
ExtRational required_alpha(const ExtRational& beta);

// Scaling level demanded by the branch statement at beta. On the interior
// of a left piece this is strictly weaker than the level required_alpha
// encodes; both are surfaced and the discrepancy is reported, not resolved.
ExtRational theorem_level(const ExtRational& beta);

// Threshold space exponent: for a multiplier class (alpha, beta) of scaling
// level in [3/4, 1), every space exponent below the returned value yields a
// strong solution. Level < 3/4 returns +inf (all of (3, inf) works);
// level >= 1 throws HypothesisTooWeak.
ExtRational beta0(const ExtRational& alpha, const ExtRational& beta);

// Closed-form viscous regularity verdict for a multiplier in
// L^alpha_t L^beta_x with finite beta > 3.
Verdict nse_regularity_verdict(const ExtRational& alpha, const ExtRational& beta);

}  // namespace flowcheck
