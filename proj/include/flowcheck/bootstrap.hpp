#pragma once

#include "flowcheck/criteria.hpp"

#include <vector>

namespace flowcheck {

enum class System { Euler, NSE };

// How a velocity class was obtained from the preceding gradient class.
enum class Route {
  Seed,         // initial energy class, no lift applied
  SobolevLift,  // q < 3: one derivative buys space integrability
  BoundedLift,  // q > 3: velocity is essentially bounded in space
};

const char* route_name(Route r);

struct IterationStep {
  int index = 0;
  BochnerSpec grad;     // gradient class held after this step
  BochnerSpec vel;      // velocity class the step passed through
  Route route = Route::Seed;
  bool stagnant = false;  // space exponent failed to improve, or the
                          // multiplier cost exactly cancelled the lift
  bool energy_certified = false;
  bool regularity_certified = false;  // viscous scaling class; unused for Euler
  ExtRational scaling;                // scaling level of grad
};

enum class StopReason {
  Certified,         // target conclusion reached
  Stagnation,        // space exponent stopped increasing
  BoundedLiftStop,   // viscous chain evaluated its bounded step; nothing further improves
  CriticalExponent,  // chain hit q = 3 exactly
  IterationExhausted,  // next time exponent would drop below 1, or q left the range
  MaxIterations,
};

const char* stop_reason_name(StopReason r);

struct BootstrapTrace {
  System system = System::Euler;
  BochnerSpec lambda;
  std::vector<IterationStep> steps;
  Verdict final;
  int n_stop = 0;  // index of the first certifying step, or of the last step
  StopReason stop = StopReason::MaxIterations;
};

// One improvement step: lift the gradient class to a velocity class, then
// pay the Hoelder cost of multiplying by the proportionality factor in
// L^alpha_t L^beta_x. Throws CriticalExponent at q = 3, ExponentOutOfRange
// at q <= 1, IterationExhausted when the resulting time exponent drops
// below 1. The returned step has index 0; callers renumber it.
IterationStep beltrami_step(const BochnerSpec& grad, const BochnerSpec& lambda);

// Iterate beltrami_step from the seed gradient class holder_combine(L^inf_t
// L^2_x, lambda) until the inviscid energy criterion certifies, the space
// exponent stagnates, a step throws, or max_iter steps have been taken.
// Steps are numbered from 0 (the seed). Requires alpha >= 5/2.
BootstrapTrace euler_beltrami_trace(const ExtRational& alpha, const ExtRational& beta,
                                    int max_iter = 64);

// Viscous variant. Keeps iterating past energy certification, hunting the
// scale-invariant regularity class; stops once that certifies, after the
// bounded step has been evaluated, at stagnation, or on a step error.
// The final verdict is the strongest conclusion any step attained.
// Steps are numbered from 1 (the seed). Requires alpha >= 5/2.
BootstrapTrace nse_beltrami_trace(const ExtRational& alpha, const ExtRational& beta,
                                  int max_iter = 64);

// Number of improvement steps the inviscid chain needs before the energy
// criterion fires, for a seed gradient space exponent q in (6/5, 2).
long euler_required_iterations(const ExtRational& q);

// Conclusion available from a time-only bound on the proportionality factor,
// lambda in L^p_t (uniform in space): p >= 3 gives a classical inviscid
// solution, p >= 8/3 a strong viscous one.
Verdict elementary_lambda_time_only(const ExtRational& p, System system);

}  // namespace flowcheck
