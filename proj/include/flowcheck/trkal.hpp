#pragma once

#include <vector>

#include "flowcheck/field.hpp"

namespace flowcheck {

// Per-step energy bookkeeping of a spectral run. Row j holds time t_j,
// E = (1/2)||u||_2^2, the cumulative dissipation D = integral of
// nu*||grad u||_2^2 (trapezoid in time, exact Parseval in space), the
// Beltrami residual of the current state, and the closed-form Trkal energy
// E(0) exp(-2 nu lambda^2 t) for comparison.
struct EnergyLedger {
  std::vector<double> times;
  std::vector<double> energy;
  std::vector<double> dissipation;
  std::vector<double> beltrami_residual;
  std::vector<double> analytic_energy;
};

// One integrating-factor RK4 step of the Leray-projected rotation-form
// NSE with 3/2-dealiased products. The viscous semigroup is applied
// exactly, so viscosity 0 degenerates to plain RK4 for the Euler system.
SampledField step_nse_spectral(const SampledField& state, double dt, double viscosity = 1.0);

// Integrate eigenmode initial data to t_end, recording the ledger at every
// step including t = 0. nu = 1 is the viscous (Trkal) run; nu = 0 checks
// plain energy conservation.
EnergyLedger run_trkal(const BeltramiSpec& spec, double t_end, double dt, int n,
                       double viscosity = 1.0);

// max over recorded times of |E(t) + D(t) - E(0)| / E(0).
double energy_equality_residual(const EnergyLedger& ledger);

}  // namespace flowcheck
