#include "flowcheck/regularity.hpp"

namespace flowcheck {

const char* side_name(IntervalSide s) {
  return s == IntervalSide::Left ? "L" : "R";
}

IntervalRow ln_rn(long n) {
  if (n < 1) throw ExponentOutOfRange("interval rows are indexed from n = 1");
  ExtRational N(n);
  IntervalRow row;
  row.n = n;
  row.L_lo = ExtRational(6) * (N + 1) / (ExtRational(2) * N - 1);
  row.L_hi = ExtRational(6) * (N + 1) * (N + 1) /
             (ExtRational(2) * N * N + N - 2);
  row.R_lo = row.L_hi;
  row.R_hi = (n == 1) ? ExtRational::infinity()
                      : ExtRational(6) * N / (ExtRational(2) * N - 3);
  row.crossover = row.L_hi;
  // Left-branch formula 2(n+2) beta / (2 beta - 3) evaluated at beta = L_lo;
  // simplifies to 4(n+1)(n+2)/(2n+5).
  row.alpha_at_L_left =
      ExtRational(2) * (N + 2) * row.L_lo / (ExtRational(2) * row.L_lo - 3);
  row.level_L = ExtRational(1) - (ExtRational(2) * (N + 2)).reciprocal();
  row.level_R = ExtRational(1) - (ExtRational(2) * (N + 1)).reciprocal();
  return row;
}

BetaLocation locate_beta(const ExtRational& beta) {
  if (beta.is_infinite() || beta <= ExtRational(3))
    throw ExponentOutOfRange("interval decomposition covers finite beta > 3, got " + beta.str());
  // beta lies in I_n = (6(n+1)/(2n-1), 6n/(2n-3)] exactly when n lies in
  // ((beta+6)/(2beta-6), 3beta/(2beta-6)], an interval of length one, so n
  // is the floor of its left endpoint plus one.
  ExtRational x = (beta + ExtRational(6)) / (ExtRational(2) * beta - ExtRational(6));
  long n = static_cast<long>(floor_rational(x)) + 1;
  IntervalRow row = ln_rn(n);
  BetaLocation loc;
  loc.n = n;
  loc.side = (beta <= row.crossover) ? IntervalSide::Left : IntervalSide::Right;
  return loc;
}

ExtRational required_alpha(const ExtRational& beta) {
  BetaLocation loc = locate_beta(beta);
  ExtRational N(loc.n);
  if (loc.side == IntervalSide::Left)
    return ExtRational(2) * (N + 2) * beta / (ExtRational(2) * beta - 3);
  return ExtRational(4) * (N + 1) * beta /
         (ExtRational(2) * (N + 1) * (beta - 3) - beta);
}

ExtRational theorem_level(const ExtRational& beta) {
  BetaLocation loc = locate_beta(beta);
  IntervalRow row = ln_rn(loc.n);
  return loc.side == IntervalSide::Left ? row.level_L : row.level_R;
}

ExtRational beta0(const ExtRational& alpha, const ExtRational& beta) {
  if (alpha < ExtRational(1) || beta < ExtRational(1))
    throw ExponentOutOfRange("multiplier class needs exponents >= 1");
  ExtRational level = scaling_level({alpha, beta});
  if (level >= ExtRational(1))
    throw HypothesisTooWeak("scaling level " + level.str() +
                            " >= 1 admits no space exponent threshold (Cor1.8)");
  if (level < ExtRational(3, 4)) return ExtRational::infinity();
  // Least n >= 1 with level <= 1 - 1/(2(n+2)).
  ExtRational bound = (ExtRational(2) * (ExtRational(1) - level)).reciprocal() - ExtRational(2);
  long n = 1;
  if (bound > ExtRational(1)) n = static_cast<long>(ceil_rational(bound));
  ExtRational N(n);
  return ExtRational(6) * (N + 1) / (ExtRational(2) * N - 1);
}

Verdict nse_regularity_verdict(const ExtRational& alpha, const ExtRational& beta) {
  if (alpha < ExtRational(1))
    throw ExponentOutOfRange("multiplier time exponent must be >= 1, got " + alpha.str());
  ExtRational astar = required_alpha(beta);  // validates beta
  if (alpha >= astar) return {VerdictLevel::StrongSolution, "Rem1", {astar, beta}};
  return {VerdictLevel::Inconclusive, "none", {alpha, beta}};
}

}  // namespace flowcheck
