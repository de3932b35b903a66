#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "flowcheck/errors.hpp"
#include "flowcheck/rational.hpp"

namespace flowcheck {

enum class Domain : std::uint32_t { Torus = 0, Ball = 1 };

// Uniform 3-component samples, component-major: value c of node (ix,iy,iz)
// lives at data[c*n^3 + (ix*n + iy)*n + iz]. Torus nodes are 2*pi*i/n on
// each axis; ball nodes span [-1,1] with x_i = -1 + 2i/(n-1), and every
// sample strictly outside the unit ball is zero (the extension by zero that
// all ball operators assume).
struct SampledField {
  Domain domain = Domain::Torus;
  int n = 0;
  double time = 0.0;
  std::vector<double> data;

  SampledField() = default;
  SampledField(Domain d, int n_);

  std::size_t nodes() const { return std::size_t(n) * n * n; }
  std::size_t index(int ix, int iy, int iz) const {
    return (std::size_t(ix) * n + iy) * n + iz;
  }
  double& at(int c, int ix, int iy, int iz) { return data[c * nodes() + index(ix, iy, iz)]; }
  double at(int c, int ix, int iy, int iz) const { return data[c * nodes() + index(ix, iy, iz)]; }
  double* component(int c) { return data.data() + c * nodes(); }
  const double* component(int c) const { return data.data() + c * nodes(); }

  // Node coordinate along one axis.
  double coord(int i) const;
  // Grid spacing (2*pi/n torus, 2/(n-1) ball).
  double spacing() const;
};

struct ScalarField {
  Domain domain = Domain::Torus;
  int n = 0;
  std::vector<double> data;
};

// Superposition of curl eigenmodes sharing one eigenvalue. Every mode must
// satisfy |k| = |lambda|, or the sum is not an eigenfield.
struct BeltramiMode {
  std::array<int, 3> k;
  double amplitude = 1.0;
  double phase = 0.0;
};
struct BeltramiSpec {
  double lambda = 1.0;
  std::vector<BeltramiMode> modes;
};

// (A sin z + C cos y, B sin x + A cos z, C sin y + B cos x) on the torus,
// a curl eigenfield with eigenvalue 1 for any A, B, C.
SampledField abc_flow(double A, double B, double C, int n);

// Circularly polarized plane wave u = e1 sin(k.x + phase) + e2 cos(k.x + phase)
// with (e1, e2, k/|k|) right-handed orthonormal, so curl u = |k| u exactly.
SampledField curl_eigenfield(const std::array<int, 3>& k, double phase, int n);

// Sum of curl_eigenfield modes; rejects any mode with |k| != |lambda|.
SampledField beltrami_field(const BeltramiSpec& spec, int n);

// a x x on the unit ball, zero outside: divergence-free and tangential.
SampledField rigid_rotation(const std::array<double, 3>& axis, int n);

// (-4y(1-r^2), 4x(1-r^2), 0) inside the unit ball: divergence-free,
// tangential, and C^1 across the boundary sphere.
SampledField poloidal_ball_field(int n);

// Mean-free divergence-free torus field with white mode amplitudes on
// 0 < |k| <= kmax, reproducible from the seed.
SampledField random_divfree_field(std::uint64_t seed, int kmax, int n);

// Curl and divergence: spectral on the torus, 4th-order finite differences
// (one-sided at the box faces) on the ball.
SampledField curl(const SampledField& f);
ScalarField divergence(const SampledField& f);

// Grid L^q norm of |f|: cell-measure quadrature for finite q (trapezoid
// weights on the ball), grid max for q = infinity. The max is a lower bound
// of the true sup, which is all the residual checks need.
double lq_norm(const SampledField& f, double q);
double lq_norm(const ScalarField& f, double q);
double lq_norm(const SampledField& f, const ExtRational& q);

// L^q norm of the pointwise Frobenius magnitude of the velocity gradient,
// differentiated like curl/divergence (spectral or FD4 by domain).
double gradient_lq_norm(const SampledField& f, double q);

// L^2 norm of (u.grad)u - omega x u - (1/2) grad|u|^2, every term evaluated
// spectrally on the 3/2-dealiased grid. Zero up to round-off for any
// band-limited field: this is the rotational-form identity.
double lamb_residual(const SampledField& f);

// ||curl f - lambda f||_2 / ||f||_2.
double beltrami_residual(const SampledField& f, double lambda);

// ||grad f||_q / ||curl f||_q for divergence-free torus fields.
double von_wahl_ratio(const SampledField& f, double q);

// Flat binary snapshot: u32 domain tag, u32 n, f64 time, then 3*n^3
// little-endian f64 samples.
void write_field(const SampledField& f, const std::string& path);
SampledField read_field(const std::string& path);

}  // namespace flowcheck
