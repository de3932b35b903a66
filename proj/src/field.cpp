#include "flowcheck/field.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <random>

#include "flowcheck/spectral.hpp"

namespace flowcheck {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_grid(int n, int min_n) {
  if (n < min_n) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "grid resolution must be at least %d, got %d", min_n, n);
    throw InvalidConfig(buf);
  }
}

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm3(const std::array<double, 3>& a) {
  return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
}

// Orthonormal pair spanning the plane normal to k, right-handed with it.
void polarization_frame(const std::array<int, 3>& k, std::array<double, 3>& e1,
                        std::array<double, 3>& e2) {
  double kn = norm3({double(k[0]), double(k[1]), double(k[2])});
  std::array<double, 3> khat = {k[0] / kn, k[1] / kn, k[2] / kn};
  // Any axis well away from k works as the seed vector.
  std::array<double, 3> a = std::abs(khat[0]) > 0.9 ? std::array<double, 3>{0.0, 1.0, 0.0}
                                                    : std::array<double, 3>{1.0, 0.0, 0.0};
  e2 = cross(khat, a);
  double e2n = norm3(e2);
  for (double& v : e2) v /= e2n;
  e1 = cross(e2, khat);
}

// Mode samples with curl u = sign * |k| * u. The positive branch is
// e1 sin + e2 cos; swapping sine and cosine flips the eigenvalue sign.
void add_eigenmode(SampledField& f, const std::array<int, 3>& k, double amplitude, double phase,
                   bool positive) {
  std::array<double, 3> e1, e2;
  polarization_frame(k, e1, e2);
  int n = f.n;
  double h = 2.0 * kPi / n;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        double th = h * (k[0] * ix + k[1] * iy + k[2] * iz) + phase;
        double s = amplitude * std::sin(th);
        double c = amplitude * std::cos(th);
        double ca = positive ? s : c;
        double cb = positive ? c : s;
        for (int comp = 0; comp < 3; ++comp)
          f.at(comp, ix, iy, iz) += e1[comp] * ca + e2[comp] * cb;
      }
}

// 4th-order first derivative of one scalar component along an axis.
// One-sided stencils serve the two nodes at each box face.
void partial_fd4(const double* g, int axis, int n, double h, double* out) {
  std::size_t stride = axis == 0 ? std::size_t(n) * n : axis == 1 ? std::size_t(n) : 1;
  double inv = 1.0 / (12.0 * h);
  // Iterate over all lines along `axis`: the other two indices are free.
  int na = n, nb = n;
  std::size_t sa, sb;
  if (axis == 0) {
    sa = n;
    sb = 1;
  } else if (axis == 1) {
    sa = std::size_t(n) * n;
    sb = 1;
  } else {
    sa = std::size_t(n) * n;
    sb = n;
  }
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) {
      const double* f = g + a * sa + b * sb;
      double* o = out + a * sa + b * sb;
      auto F = [&](int i) { return f[i * stride]; };
      o[0] = (-25 * F(0) + 48 * F(1) - 36 * F(2) + 16 * F(3) - 3 * F(4)) * inv;
      o[stride] = (-3 * F(0) - 10 * F(1) + 18 * F(2) - 6 * F(3) + F(4)) * inv;
      for (int i = 2; i < n - 2; ++i)
        o[i * stride] = (F(i - 2) - 8 * F(i - 1) + 8 * F(i + 1) - F(i + 2)) * inv;
      o[std::size_t(n - 2) * stride] =
          (3 * F(n - 1) + 10 * F(n - 2) - 18 * F(n - 3) + 6 * F(n - 4) - F(n - 5)) * inv;
      o[std::size_t(n - 1) * stride] =
          (25 * F(n - 1) - 48 * F(n - 2) + 36 * F(n - 3) - 16 * F(n - 4) + 3 * F(n - 5)) * inv;
    }
}

// All nine spectral partials du_i/dx_j of a torus field, on the n-grid.
void spectral_gradients(const SampledField& f, SpectralWorkspace& ws,
                        std::array<std::vector<double>, 9>& grad) {
  int n = f.n;
  int h = n / 2 + 1;
  std::vector<std::complex<double>> spec(ws.spec_size());
  std::vector<std::complex<double>> dspec(ws.spec_size());
  for (int c = 0; c < 3; ++c) {
    ws.forward(f.component(c), spec.data());
    for (int j = 0; j < 3; ++j) {
      for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
          for (int iz = 0; iz < h; ++iz) {
            int k = j == 0 ? SpectralWorkspace::wavenumber(ix, n)
                  : j == 1 ? SpectralWorkspace::wavenumber(iy, n)
                           : iz;
            std::size_t idx = (std::size_t(ix) * n + iy) * h + iz;
            dspec[idx] = std::complex<double>(0.0, double(k)) * spec[idx];
          }
      grad[c * 3 + j].resize(ws.real_size());
      ws.backward(dspec.data(), grad[c * 3 + j].data());
    }
  }
}

double magnitude_lq(const std::vector<double>& mag2, Domain domain, int n, double q) {
  // mag2 holds |f|^2 per node.
  if (std::isinf(q)) {
    double m = 0.0;
    for (double v : mag2) m = std::max(m, v);
    return std::sqrt(m);
  }
  double h = domain == Domain::Torus ? 2.0 * kPi / n : 2.0 / (n - 1);
  double sum = 0.0;
  std::size_t idx = 0;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz, ++idx) {
        double w = 1.0;
        if (domain == Domain::Ball) {
          if (ix == 0 || ix == n - 1) w *= 0.5;
          if (iy == 0 || iy == n - 1) w *= 0.5;
          if (iz == 0 || iz == n - 1) w *= 0.5;
        }
        double m2 = mag2[idx];
        double p = q == 2.0 ? m2 : q == 1.0 ? std::sqrt(m2) : std::pow(m2, 0.5 * q);
        sum += w * p;
      }
  return std::pow(sum * h * h * h, 1.0 / q);
}

std::vector<double> squared_magnitude(const SampledField& f) {
  std::vector<double> m(f.nodes());
  const double* x = f.component(0);
  const double* y = f.component(1);
  const double* z = f.component(2);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = x[i] * x[i] + y[i] * y[i] + z[i] * z[i];
  return m;
}

}  // namespace

SampledField::SampledField(Domain d, int n_) : domain(d), n(n_), data(3 * std::size_t(n_) * n_ * n_, 0.0) {}

double SampledField::coord(int i) const {
  return domain == Domain::Torus ? 2.0 * kPi * i / n : -1.0 + 2.0 * i / double(n - 1);
}

double SampledField::spacing() const {
  return domain == Domain::Torus ? 2.0 * kPi / n : 2.0 / (n - 1);
}

SampledField abc_flow(double A, double B, double C, int n) {
  require_grid(n, 8);
  SampledField f(Domain::Torus, n);
  double h = 2.0 * kPi / n;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        double x = h * ix, y = h * iy, z = h * iz;
        f.at(0, ix, iy, iz) = A * std::sin(z) + C * std::cos(y);
        f.at(1, ix, iy, iz) = B * std::sin(x) + A * std::cos(z);
        f.at(2, ix, iy, iz) = C * std::sin(y) + B * std::cos(x);
      }
  return f;
}

SampledField curl_eigenfield(const std::array<int, 3>& k, double phase, int n) {
  require_grid(n, 8);
  if (k[0] == 0 && k[1] == 0 && k[2] == 0)
    throw InvalidConfig("curl eigenfield needs a nonzero wavevector");
  SampledField f(Domain::Torus, n);
  add_eigenmode(f, k, 1.0, phase, true);
  return f;
}

SampledField beltrami_field(const BeltramiSpec& spec, int n) {
  require_grid(n, 8);
  if (spec.modes.empty()) throw InvalidConfig("beltrami field needs at least one mode");
  if (spec.lambda == 0.0) throw InvalidConfig("beltrami field needs lambda != 0");
  SampledField f(Domain::Torus, n);
  for (const BeltramiMode& m : spec.modes) {
    double kn = norm3({double(m.k[0]), double(m.k[1]), double(m.k[2])});
    if (std::abs(kn - std::abs(spec.lambda)) > 1e-12) {
      char buf[128];
      std::snprintf(buf, sizeof(buf),
                    "mode (%d,%d,%d) has |k| = %.17g, not the eigenvalue magnitude %.17g",
                    m.k[0], m.k[1], m.k[2], kn, std::abs(spec.lambda));
      throw InvalidConfig(buf);
    }
    add_eigenmode(f, m.k, m.amplitude, m.phase, spec.lambda > 0.0);
  }
  return f;
}

SampledField rigid_rotation(const std::array<double, 3>& axis, int n) {
  require_grid(n, 8);
  SampledField f(Domain::Ball, n);
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        double x = f.coord(ix), y = f.coord(iy), z = f.coord(iz);
        if (x * x + y * y + z * z > 1.0) continue;
        std::array<double, 3> v = cross(axis, {x, y, z});
        for (int c = 0; c < 3; ++c) f.at(c, ix, iy, iz) = v[c];
      }
  return f;
}

SampledField poloidal_ball_field(int n) {
  require_grid(n, 8);
  SampledField f(Domain::Ball, n);
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        double x = f.coord(ix), y = f.coord(iy), z = f.coord(iz);
        double r2 = x * x + y * y + z * z;
        if (r2 > 1.0) continue;
        f.at(0, ix, iy, iz) = -4.0 * y * (1.0 - r2);
        f.at(1, ix, iy, iz) = 4.0 * x * (1.0 - r2);
      }
  return f;
}

SampledField random_divfree_field(std::uint64_t seed, int kmax, int n) {
  require_grid(n, 8);
  if (kmax < 1 || kmax >= n / 2) throw InvalidConfig("band limit must satisfy 1 <= kmax < n/2");
  SampledField f(Domain::Torus, n);
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (double& v : f.data) v = normal(gen);

  // White noise -> band-limit -> Leray projection. Transforming real input
  // keeps the spectrum Hermitian without explicit symmetrization.
  SpectralWorkspace ws(n);
  int h = n / 2 + 1;
  std::array<std::vector<std::complex<double>>, 3> spec;
  for (int c = 0; c < 3; ++c) {
    spec[c].resize(ws.spec_size());
    ws.forward(f.component(c), spec[c].data());
  }
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < h; ++iz) {
        std::size_t idx = (std::size_t(ix) * n + iy) * h + iz;
        double kx = SpectralWorkspace::wavenumber(ix, n);
        double ky = SpectralWorkspace::wavenumber(iy, n);
        double kz = iz;
        double k2 = kx * kx + ky * ky + kz * kz;
        if (k2 == 0.0 || k2 > double(kmax) * kmax) {
          for (int c = 0; c < 3; ++c) spec[c][idx] = 0.0;
          continue;
        }
        std::complex<double> dot = kx * spec[0][idx] + ky * spec[1][idx] + kz * spec[2][idx];
        spec[0][idx] -= kx * dot / k2;
        spec[1][idx] -= ky * dot / k2;
        spec[2][idx] -= kz * dot / k2;
      }
  for (int c = 0; c < 3; ++c) ws.backward(spec[c].data(), f.component(c));
  return f;
}

SampledField curl(const SampledField& f) {
  SampledField out(f.domain, f.n);
  out.time = f.time;
  int n = f.n;
  if (f.domain == Domain::Torus) {
    SpectralWorkspace ws(n);
    int h = n / 2 + 1;
    std::array<std::vector<std::complex<double>>, 3> u, w;
    for (int c = 0; c < 3; ++c) {
      u[c].resize(ws.spec_size());
      w[c].resize(ws.spec_size());
      ws.forward(f.component(c), u[c].data());
    }
    const std::complex<double> I(0.0, 1.0);
    for (int ix = 0; ix < n; ++ix)
      for (int iy = 0; iy < n; ++iy)
        for (int iz = 0; iz < h; ++iz) {
          std::size_t idx = (std::size_t(ix) * n + iy) * h + iz;
          double kx = SpectralWorkspace::wavenumber(ix, n);
          double ky = SpectralWorkspace::wavenumber(iy, n);
          double kz = iz;
          w[0][idx] = I * (ky * u[2][idx] - kz * u[1][idx]);
          w[1][idx] = I * (kz * u[0][idx] - kx * u[2][idx]);
          w[2][idx] = I * (kx * u[1][idx] - ky * u[0][idx]);
        }
    for (int c = 0; c < 3; ++c) ws.backward(w[c].data(), out.component(c));
    return out;
  }
  double h = f.spacing();
  std::vector<double> d1(f.nodes()), d2(f.nodes());
  auto write_diff = [&](int c_out, int c_hi, int ax_hi, int c_lo, int ax_lo) {
    partial_fd4(f.component(c_hi), ax_hi, n, h, d1.data());
    partial_fd4(f.component(c_lo), ax_lo, n, h, d2.data());
    double* o = out.component(c_out);
    for (std::size_t i = 0; i < f.nodes(); ++i) o[i] = d1[i] - d2[i];
  };
  write_diff(0, 2, 1, 1, 2);
  write_diff(1, 0, 2, 2, 0);
  write_diff(2, 1, 0, 0, 1);
  return out;
}

ScalarField divergence(const SampledField& f) {
  ScalarField out;
  out.domain = f.domain;
  out.n = f.n;
  out.data.assign(f.nodes(), 0.0);
  int n = f.n;
  if (f.domain == Domain::Torus) {
    SpectralWorkspace ws(n);
    int h = n / 2 + 1;
    std::vector<std::complex<double>> spec(ws.spec_size());
    std::vector<std::complex<double>> acc(ws.spec_size(), 0.0);
    const std::complex<double> I(0.0, 1.0);
    for (int c = 0; c < 3; ++c) {
      ws.forward(f.component(c), spec.data());
      for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
          for (int iz = 0; iz < h; ++iz) {
            std::size_t idx = (std::size_t(ix) * n + iy) * h + iz;
            double k = c == 0 ? SpectralWorkspace::wavenumber(ix, n)
                    : c == 1 ? SpectralWorkspace::wavenumber(iy, n)
                             : double(iz);
            acc[idx] += I * k * spec[idx];
          }
    }
    ws.backward(acc.data(), out.data.data());
    return out;
  }
  double h = f.spacing();
  std::vector<double> d(f.nodes());
  for (int c = 0; c < 3; ++c) {
    partial_fd4(f.component(c), c, n, h, d.data());
    for (std::size_t i = 0; i < f.nodes(); ++i) out.data[i] += d[i];
  }
  return out;
}

double lq_norm(const SampledField& f, double q) {
  if (!(q >= 1.0)) throw InvalidConfig("norm exponent must satisfy q >= 1");
  return magnitude_lq(squared_magnitude(f), f.domain, f.n, q);
}

double lq_norm(const ScalarField& f, double q) {
  if (!(q >= 1.0)) throw InvalidConfig("norm exponent must satisfy q >= 1");
  std::vector<double> m2(f.data.size());
  for (std::size_t i = 0; i < m2.size(); ++i) m2[i] = f.data[i] * f.data[i];
  return magnitude_lq(m2, f.domain, f.n, q);
}

double lq_norm(const SampledField& f, const ExtRational& q) {
  return lq_norm(f, q.is_infinite() ? std::numeric_limits<double>::infinity() : q.to_double());
}

double gradient_lq_norm(const SampledField& f, double q) {
  if (!(q >= 1.0)) throw InvalidConfig("norm exponent must satisfy q >= 1");
  std::vector<double> m2(f.nodes(), 0.0);
  if (f.domain == Domain::Torus) {
    SpectralWorkspace ws(f.n);
    std::array<std::vector<double>, 9> grad;
    spectral_gradients(f, ws, grad);
    for (int g = 0; g < 9; ++g)
      for (std::size_t i = 0; i < m2.size(); ++i) m2[i] += grad[g][i] * grad[g][i];
  } else {
    double h = f.spacing();
    std::vector<double> d(f.nodes());
    for (int c = 0; c < 3; ++c)
      for (int ax = 0; ax < 3; ++ax) {
        partial_fd4(f.component(c), ax, f.n, h, d.data());
        for (std::size_t i = 0; i < m2.size(); ++i) m2[i] += d[i] * d[i];
      }
  }
  return magnitude_lq(m2, f.domain, f.n, q);
}

double lamb_residual(const SampledField& f) {
  if (f.domain != Domain::Torus)
    throw InvalidConfig("rotational-form residual is defined on the torus");
  int n = f.n;
  SpectralWorkspace ws(n);
  int m = ws.padded();
  int h = n / 2 + 1;
  const std::complex<double> I(0.0, 1.0);

  std::array<std::vector<std::complex<double>>, 3> u;
  for (int c = 0; c < 3; ++c) {
    u[c].resize(ws.spec_size());
    ws.forward(f.component(c), u[c].data());
  }

  // Nodal values of u, omega, and all nine gradients on the dealiased grid.
  std::array<std::vector<double>, 3> ur, wr;
  std::array<std::vector<double>, 9> gr;
  std::vector<std::complex<double>> tmp(ws.spec_size());
  for (int c = 0; c < 3; ++c) {
    ur[c].resize(ws.padded_size());
    ws.backward_padded(u[c].data(), ur[c].data());
  }
  for (int c = 0; c < 3; ++c)
    for (int j = 0; j < 3; ++j) {
      for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
          for (int iz = 0; iz < h; ++iz) {
            std::size_t idx = (std::size_t(ix) * n + iy) * h + iz;
            double k = j == 0 ? SpectralWorkspace::wavenumber(ix, n)
                    : j == 1 ? SpectralWorkspace::wavenumber(iy, n)
                             : double(iz);
            tmp[idx] = I * k * u[c][idx];
          }
      gr[c * 3 + j].resize(ws.padded_size());
      ws.backward_padded(tmp.data(), gr[c * 3 + j].data());
    }
  for (int c = 0; c < 3; ++c) {
    int a = (c + 1) % 3, b = (c + 2) % 3;
    for (int ix = 0; ix < n; ++ix)
      for (int iy = 0; iy < n; ++iy)
        for (int iz = 0; iz < h; ++iz) {
          std::size_t idx = (std::size_t(ix) * n + iy) * h + iz;
          double ka = a == 0 ? SpectralWorkspace::wavenumber(ix, n)
                  : a == 1 ? SpectralWorkspace::wavenumber(iy, n)
                           : double(iz);
          double kb = b == 0 ? SpectralWorkspace::wavenumber(ix, n)
                  : b == 1 ? SpectralWorkspace::wavenumber(iy, n)
                           : double(iz);
          tmp[idx] = I * (ka * u[b][idx] - kb * u[a][idx]);
        }
    wr[c].resize(ws.padded_size());
    ws.backward_padded(tmp.data(), wr[c].data());
  }

  // (u.grad)u_i - (omega x u)_i - u_j du_j/dx_i, pointwise per node.
  double sum = 0.0;
  std::size_t mn = ws.padded_size();
  for (std::size_t p = 0; p < mn; ++p) {
    for (int i = 0; i < 3; ++i) {
      int a = (i + 1) % 3, b = (i + 2) % 3;
      double adv = ur[0][p] * gr[i * 3 + 0][p] + ur[1][p] * gr[i * 3 + 1][p] +
                   ur[2][p] * gr[i * 3 + 2][p];
      double lamb = wr[a][p] * ur[b][p] - wr[b][p] * ur[a][p];
      double half_grad = ur[0][p] * gr[0 * 3 + i][p] + ur[1][p] * gr[1 * 3 + i][p] +
                         ur[2][p] * gr[2 * 3 + i][p];
      double r = adv - lamb - half_grad;
      sum += r * r;
    }
  }
  double cell = std::pow(2.0 * kPi / m, 3);
  return std::sqrt(sum * cell);
}

double beltrami_residual(const SampledField& f, double lambda) {
  double denom = lq_norm(f, 2.0);
  if (denom == 0.0) throw UndefinedRatio("beltrami residual of the zero field is undefined");
  SampledField w = curl(f);
  for (std::size_t i = 0; i < w.data.size(); ++i) w.data[i] -= lambda * f.data[i];
  return lq_norm(w, 2.0) / denom;
}

double von_wahl_ratio(const SampledField& f, double q) {
  if (f.domain != Domain::Torus)
    throw InvalidConfig("gradient/curl ratio is computed on the torus");
  ScalarField div = divergence(f);
  double div_l2 = lq_norm(div, 2.0);
  double f_l2 = lq_norm(f, 2.0);
  if (div_l2 > 1e-8 * std::max(1.0, f_l2))
    throw InvalidConfig("gradient/curl ratio needs a divergence-free field");

  SampledField w = curl(f);
  double denom = lq_norm(w, q);
  if (denom == 0.0) throw UndefinedRatio("gradient/curl ratio of a curl-free field is undefined");

  SpectralWorkspace ws(f.n);
  std::array<std::vector<double>, 9> grad;
  spectral_gradients(f, ws, grad);
  std::vector<double> m2(f.nodes(), 0.0);
  for (int g = 0; g < 9; ++g)
    for (std::size_t i = 0; i < m2.size(); ++i) m2[i] += grad[g][i] * grad[g][i];
  return magnitude_lq(m2, f.domain, f.n, q) / denom;
}

void write_field(const SampledField& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidConfig("cannot open field file for writing: " + path);
  std::uint32_t tag = static_cast<std::uint32_t>(f.domain);
  std::uint32_t n = f.n;
  out.write(reinterpret_cast<const char*>(&tag), 4);
  out.write(reinterpret_cast<const char*>(&n), 4);
  out.write(reinterpret_cast<const char*>(&f.time), 8);
  out.write(reinterpret_cast<const char*>(f.data.data()), f.data.size() * sizeof(double));
  if (!out) throw InvalidConfig("short write on field file: " + path);
}

SampledField read_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidConfig("cannot open field file: " + path);
  std::uint32_t tag = 0, n = 0;
  double time = 0.0;
  in.read(reinterpret_cast<char*>(&tag), 4);
  in.read(reinterpret_cast<char*>(&n), 4);
  in.read(reinterpret_cast<char*>(&time), 8);
  if (!in || tag > 1 || n < 2) throw InvalidConfig("malformed field header: " + path);
  SampledField f(static_cast<Domain>(tag), int(n));
  f.time = time;
  in.read(reinterpret_cast<char*>(f.data.data()), f.data.size() * sizeof(double));
  if (!in) throw InvalidConfig("truncated field payload: " + path);
  return f;
}

}  // namespace flowcheck
