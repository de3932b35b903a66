#include "flowcheck/bootstrap.hpp"

namespace flowcheck {

const char* route_name(Route r) {
  switch (r) {
    case Route::Seed: return "seed";
    case Route::SobolevLift: return "sobolev-lift";
    case Route::BoundedLift: return "bounded-lift";
  }
  return "seed";
}

const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::Certified: return "certified";
    case StopReason::Stagnation: return "stagnation";
    case StopReason::BoundedLiftStop: return "bounded-lift";
    case StopReason::CriticalExponent: return "critical-exponent";
    case StopReason::IterationExhausted: return "iteration-exhausted";
    case StopReason::MaxIterations: return "max-iterations";
  }
  return "max-iterations";
}

IterationStep beltrami_step(const BochnerSpec& grad, const BochnerSpec& lambda) {
  const ExtRational& q = grad.space_exp;
  if (q <= ExtRational(1))
    throw ExponentOutOfRange("cannot iterate from gradient space exponent q = " + q.str());
  if (q == ExtRational(3))
    throw CriticalExponent("iteration reached the critical space exponent q = 3 exactly");
  IterationStep st;
  if (q < ExtRational(3)) {
    st.route = Route::SobolevLift;
    st.vel = {grad.time_exp, sobolev_lift(q)};
  } else {
    st.route = Route::BoundedLift;
    st.vel = {grad.time_exp, ExtRational::infinity()};
  }
  st.grad = holder_combine(st.vel, lambda);
  if (st.grad.time_exp < ExtRational(1))
    throw IterationExhausted("time exponent " + st.grad.time_exp.str() +
                             " fell below 1; the multiplier is too rough in time");
  st.stagnant = !(st.grad.space_exp > q) || st.grad == st.vel;
  st.scaling = scaling_level(st.grad);
  return st;
}

namespace {

void evaluate_step(IterationStep& st, System sys) {
  st.energy_certified = false;
  st.regularity_certified = false;
  try {
    Verdict v = (sys == System::Euler) ? euler_gradient_verdict(st.grad)
                                       : nse_gradient_verdict(st.grad);
    st.energy_certified = v.level >= VerdictLevel::EnergyEquality;
  } catch (const ExponentOutOfRange&) {
    // Gradient class too weak for the criterion's range; keep iterating.
  }
  if (sys == System::NSE) st.regularity_certified = regularity_class(st.grad);
}

// The curve along which the seed gradient class lands exactly on the
// boundary of the energy criterion: beta = 6*alpha/(2*alpha - 5), with the
// endpoint (5/2, inf).
bool on_energy_curve(const ExtRational& alpha, const ExtRational& beta) {
  if (alpha == ExtRational(5, 2)) return beta.is_infinite();
  if (beta.is_infinite()) return false;
  return beta * (ExtRational(2) * alpha - ExtRational(5)) == ExtRational(6) * alpha;
}

BootstrapTrace run_trace(System sys, const ExtRational& alpha, const ExtRational& beta,
                         int max_iter) {
  if (alpha < ExtRational(5, 2))
    throw ExponentOutOfRange("bootstrap seed needs a multiplier time exponent alpha >= 5/2, got " +
                             alpha.str());
  if (beta < ExtRational(1))
    throw ExponentOutOfRange("multiplier space exponent beta must be >= 1, got " + beta.str());
  if (max_iter < 0) throw InvalidConfig("max_iter must be nonnegative");

  BootstrapTrace tr;
  tr.system = sys;
  tr.lambda = {alpha, beta};

  IterationStep seed;
  seed.index = (sys == System::NSE) ? 1 : 0;
  seed.vel = {ExtRational::infinity(), ExtRational(2)};
  seed.route = Route::Seed;
  seed.grad = holder_combine(seed.vel, tr.lambda);
  seed.scaling = scaling_level(seed.grad);
  evaluate_step(seed, sys);
  tr.steps.push_back(seed);

  StopReason reason = StopReason::MaxIterations;
  for (int iter = 0;; ++iter) {
    const IterationStep& last = tr.steps.back();
    if (sys == System::Euler && last.energy_certified) {
      reason = StopReason::Certified;
      break;
    }
    if (sys == System::NSE && last.regularity_certified) {
      reason = StopReason::Certified;
      break;
    }
    if (sys == System::NSE && last.route == Route::BoundedLift) {
      reason = StopReason::BoundedLiftStop;
      break;
    }
    if (tr.steps.size() >= 2 && last.stagnant) {
      reason = StopReason::Stagnation;
      break;
    }
    if (iter >= max_iter) {
      reason = StopReason::MaxIterations;
      break;
    }
    IterationStep next;
    try {
      next = beltrami_step(last.grad, tr.lambda);
    } catch (const CriticalExponent&) {
      reason = StopReason::CriticalExponent;
      break;
    } catch (const IterationExhausted&) {
      reason = StopReason::IterationExhausted;
      break;
    } catch (const ExponentOutOfRange&) {
      reason = StopReason::IterationExhausted;
      break;
    }
    next.index = last.index + 1;
    evaluate_step(next, sys);
    tr.steps.push_back(next);
  }
  tr.stop = reason;

  // Strongest conclusion across the recorded steps, witnessed by the first
  // step that attained it.
  const IterationStep* energy_step = nullptr;
  const IterationStep* regular_step = nullptr;
  for (const auto& s : tr.steps) {
    if (!energy_step && s.energy_certified) energy_step = &s;
    if (!regular_step && s.regularity_certified) regular_step = &s;
  }
  const char* base_tag = (sys == System::Euler) ? "Thm1.4" : "Thm1.6";
  if (sys == System::NSE && regular_step) {
    tr.final = {VerdictLevel::StrongSolution, "ScalingNabla", regular_step->grad};
  } else if (energy_step) {
    std::string tag = on_energy_curve(alpha, beta) ? base_tag
                                                   : std::string("engine-derived(") + base_tag + ")";
    tr.final = {VerdictLevel::EnergyEquality, tag, energy_step->grad};
  } else {
    tr.final = {VerdictLevel::Inconclusive, "none", tr.steps.back().grad};
  }
  const IterationStep* first_cert = nullptr;
  for (const auto& s : tr.steps) {
    if (s.energy_certified || s.regularity_certified) {
      first_cert = &s;
      break;
    }
  }
  tr.n_stop = first_cert ? first_cert->index : tr.steps.back().index;
  return tr;
}

}  // namespace

BootstrapTrace euler_beltrami_trace(const ExtRational& alpha, const ExtRational& beta,
                                    int max_iter) {
  return run_trace(System::Euler, alpha, beta, max_iter);
}

BootstrapTrace nse_beltrami_trace(const ExtRational& alpha, const ExtRational& beta,
                                  int max_iter) {
  return run_trace(System::NSE, alpha, beta, max_iter);
}

long euler_required_iterations(const ExtRational& q) {
  if (q <= ExtRational(6, 5) || q >= ExtRational(2))
    throw ExponentOutOfRange("iteration count is defined for seed exponents q in (6/5, 2), got " +
                             q.str());
  // Least n with 6q/(6(n+1) - 5nq) >= 9/5, i.e. n >= (18 - 10q)/(15q - 18);
  // the denominator is positive on the whole domain, and the numerator
  // changes sign at q = 9/5 where zero steps suffice.
  ExtRational x = (ExtRational(18) - ExtRational(10) * q) / (ExtRational(15) * q - ExtRational(18));
  if (x <= ExtRational(0)) return 0;
  return static_cast<long>(ceil_rational(x));
}

Verdict elementary_lambda_time_only(const ExtRational& p, System system) {
  if (p < ExtRational(1))
    throw ExponentOutOfRange("time exponent must be >= 1, got " + p.str());
  BochnerSpec lam{p, ExtRational::infinity()};
  if (system == System::Euler) {
    if (p >= ExtRational(3)) return {VerdictLevel::ClassicalSolution, "Prop1.3", lam};
  } else {
    if (p >= ExtRational(8, 3)) return {VerdictLevel::StrongSolution, "Prop1.3", lam};
  }
  return {VerdictLevel::Inconclusive, "none", lam};
}

}  // namespace flowcheck
