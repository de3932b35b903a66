#pragma once

#include <array>
#include <vector>

#include "flowcheck/field.hpp"

namespace flowcheck {

// Radial transversal deformation of the unit ball: theta(x) = x(1 + delta*s(r))
// with s(r) = 1/r for r >= 1/2 and an even polynomial blend below, so V = x*s
// is smooth, |V| = 1 on the outer half, and theta pushes the boundary sphere
// outward by exactly delta. The Jacobian is a*I + b*xhat*xhat^T with
// a = 1 + delta*s and b = delta*s'(r)*r; its radial eigenvalue a + b equals
// 1 + delta*d(rs)/dr >= 1, so the map never degenerates and
// piola = det(J)J^{-1} = a(a+b)I - ab*xhat*xhat^T stays a closed form.
struct TransversalMap {
  double delta;

  explicit TransversalMap(double d) : delta(d) {}

  static double s(double r);
  static double s_prime(double r);

  std::array<double, 3> theta(const std::array<double, 3>& x) const;
  // Row-major 3x3 matrix det(J) J^{-1}.
  std::array<double, 9> piola(const std::array<double, 3>& x) const;
  // Spectral-norm distance of piola from the identity (exact, via the two
  // eigenvalues of the rank-one-perturbed matrix).
  double piola_deviation(double r) const;
};

// Validated parameters of the divergence-preserving ball mollifier. The
// constructor checks the geometry that the support bound relies on: the
// sampling ball theta(x) + B_{delta*xi} clears the closed unit ball for
// every x within 2*delta*xi of the sphere (swept numerically over a fixed
// direction/radius grid), which forces xi <= 1/3.
struct MollifierConfig {
  double delta;
  double xi;
  int quad_order;

  explicit MollifierConfig(double delta_, double xi_ = 0.25, int quad_order_ = 8);
};

// Friedrichs time mollifier k_eps(t) = k(t/eps)/eps with the same bump
// profile, sampled symmetrically so evenness is exact.
struct TimeMollifierConfig {
  double epsilon;

  explicit TimeMollifierConfig(double eps);
};

struct ExperimentRow {
  double delta;
  double value;
};

// Quadrature realization of the boundary mollifier: at each interior node x,
// piola(x) times the rho-weighted average of trilinear samples of v at
// theta(x) + delta*xi*y over the unit-ball Gauss grid. Samples outside the
// closed unit ball read the zero extension exactly.
SampledField mollify_div(const SampledField& v, const MollifierConfig& cfg);

// Discrete convolution with k_eps along the time axis. Frames must be
// uniformly spaced with dt <= eps/8; the output keeps only the frames whose
// convolution window lies fully inside the series.
std::vector<SampledField> mollify_time(const std::vector<SampledField>& series,
                                       const TimeMollifierConfig& cfg);

// Distance from the outermost sample above 1e-14 of the field max to the
// sphere. Zero field maps to 1 (the whole radius) by convention.
double support_margin(const SampledField& w);

// Rows (delta, ||K_delta v - v||_q) for a decreasing delta list.
std::vector<ExperimentRow> convergence_experiment(const SampledField& v,
                                                  const std::vector<double>& deltas,
                                                  const ExtRational& q);

// Rows (delta, ||grad K_delta v||_q).
std::vector<ExperimentRow> gradient_bound_experiment(const SampledField& v,
                                                     const std::vector<double>& deltas,
                                                     const ExtRational& q);

// Max-norm of (K_delta v)_eps - K_delta(v_eps) over the common frames. The
// two orders are the same finite double sum, so this bounds pure round-off.
double commutation_residual(const std::vector<SampledField>& series, double delta,
                            double epsilon);

// Rows (delta, max over frames of ||K_delta v(t) - v(t)||_q).
std::vector<ExperimentRow> uniform_time_check(const std::vector<SampledField>& series,
                                              const std::vector<double>& deltas,
                                              const ExtRational& q);

}  // namespace flowcheck
