#include "flowcheck/trkal.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "flowcheck/spectral.hpp"

namespace flowcheck {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Spectrum = std::array<std::vector<std::complex<double>>, 3>;

// Spectral state plus every per-mode array the stepper needs. Wavenumbers
// and integrating factors are tabulated once per (n, dt, nu).
class SpectralNse {
 public:
  SpectralNse(int n, double dt, double viscosity)
      : ws_(n), dt_(dt), nu_(viscosity), kx_(ws_.spec_size()), ky_(ws_.spec_size()),
        kz_(ws_.spec_size()), k2_(ws_.spec_size()), e_half_(ws_.spec_size()),
        e_full_(ws_.spec_size()) {
    int h = n / 2 + 1;
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix)
      for (int iy = 0; iy < n; ++iy)
        for (int iz = 0; iz < h; ++iz, ++idx) {
          kx_[idx] = SpectralWorkspace::wavenumber(ix, n);
          ky_[idx] = SpectralWorkspace::wavenumber(iy, n);
          kz_[idx] = iz;
          k2_[idx] = kx_[idx] * kx_[idx] + ky_[idx] * ky_[idx] + kz_[idx] * kz_[idx];
          e_half_[idx] = std::exp(-0.5 * nu_ * k2_[idx] * dt_);
          e_full_[idx] = e_half_[idx] * e_half_[idx];
        }
    for (auto& s : u_) s.resize(ws_.spec_size());
    for (auto& s : k1_) s.resize(ws_.spec_size());
    for (auto& s : k2stage_) s.resize(ws_.spec_size());
    for (auto& s : k3_) s.resize(ws_.spec_size());
    for (auto& s : k4_) s.resize(ws_.spec_size());
    for (auto& s : stage_) s.resize(ws_.spec_size());
    for (auto& r : ur_) r.resize(ws_.padded_size());
    for (auto& r : wr_) r.resize(ws_.padded_size());
    for (auto& r : sr_) r.resize(ws_.padded_size());
  }

  SpectralWorkspace& workspace() { return ws_; }
  Spectrum& state() { return u_; }

  void load(const SampledField& f) {
    for (int c = 0; c < 3; ++c) ws_.forward(f.component(c), u_[c].data());
  }

  void store(SampledField& f) {
    for (int c = 0; c < 3; ++c) ws_.backward(u_[c].data(), f.component(c));
  }

  // P[(u x omega)^] from a spectral velocity, written into out.
  void nonlinear(const Spectrum& v, Spectrum& out) {
    for (int c = 0; c < 3; ++c) {
      int a = (c + 1) % 3, b = (c + 2) % 3;
      const std::vector<double>& ka = comp_k(a);
      const std::vector<double>& kb = comp_k(b);
      for (std::size_t i = 0; i < v[0].size(); ++i)
        out[c][i] = std::complex<double>(0.0, 1.0) * (ka[i] * v[b][i] - kb[i] * v[a][i]);
    }
    for (int c = 0; c < 3; ++c) {
      ws_.backward_padded(v[c].data(), ur_[c].data());
      ws_.backward_padded(out[c].data(), wr_[c].data());
    }
    for (std::size_t p = 0; p < ur_[0].size(); ++p) {
      double ux = ur_[0][p], uy = ur_[1][p], uz = ur_[2][p];
      double wx = wr_[0][p], wy = wr_[1][p], wz = wr_[2][p];
      sr_[0][p] = uy * wz - uz * wy;
      sr_[1][p] = uz * wx - ux * wz;
      sr_[2][p] = ux * wy - uy * wx;
    }
    for (int c = 0; c < 3; ++c) ws_.forward_truncated(sr_[c].data(), out[c].data());
    leray(out);
  }

  void leray(Spectrum& s) const {
    for (std::size_t i = 0; i < s[0].size(); ++i) {
      if (k2_[i] == 0.0) {
        s[0][i] = s[1][i] = s[2][i] = 0.0;
        continue;
      }
      std::complex<double> dot =
          (kx_[i] * s[0][i] + ky_[i] * s[1][i] + kz_[i] * s[2][i]) / k2_[i];
      s[0][i] -= kx_[i] * dot;
      s[1][i] -= ky_[i] * dot;
      s[2][i] -= kz_[i] * dot;
    }
  }

  // Integrating-factor RK4: the viscous semigroup exp(-nu k^2 dt) is exact,
  // the nonlinear term is the only approximated piece.
  void step() {
    nonlinear(u_, k1_);
    for (int c = 0; c < 3; ++c)
      for (std::size_t i = 0; i < u_[c].size(); ++i)
        stage_[c][i] = e_half_[i] * (u_[c][i] + 0.5 * dt_ * k1_[c][i]);
    nonlinear(stage_, k2stage_);
    for (int c = 0; c < 3; ++c)
      for (std::size_t i = 0; i < u_[c].size(); ++i)
        stage_[c][i] = e_half_[i] * u_[c][i] + 0.5 * dt_ * k2stage_[c][i];
    nonlinear(stage_, k3_);
    for (int c = 0; c < 3; ++c)
      for (std::size_t i = 0; i < u_[c].size(); ++i)
        stage_[c][i] = e_full_[i] * u_[c][i] + dt_ * e_half_[i] * k3_[c][i];
    nonlinear(stage_, k4_);
    for (int c = 0; c < 3; ++c)
      for (std::size_t i = 0; i < u_[c].size(); ++i)
        u_[c][i] = e_full_[i] * u_[c][i] +
                   (dt_ / 6.0) * (e_full_[i] * k1_[c][i] +
                                  2.0 * e_half_[i] * (k2stage_[c][i] + k3_[c][i]) + k4_[c][i]);
  }

  // Parseval sums over the half-spectrum: kz > 0 rows stand for a conjugate
  // pair, kz = 0 rows for themselves.
  double energy() const { return 0.5 * weighted_sum(0); }
  double enstrophy() const { return weighted_sum(1); }

  double beltrami(double lambda) const {
    double num = 0.0, den = 0.0;
    int n = ws_.n();
    int h = n / 2 + 1;
    for (std::size_t i = 0; i < u_[0].size(); ++i) {
      double w = (i % h) == 0 ? 1.0 : 2.0;
      const std::complex<double> I(0.0, 1.0);
      std::complex<double> cx = I * (ky_[i] * u_[2][i] - kz_[i] * u_[1][i]) - lambda * u_[0][i];
      std::complex<double> cy = I * (kz_[i] * u_[0][i] - kx_[i] * u_[2][i]) - lambda * u_[1][i];
      std::complex<double> cz = I * (kx_[i] * u_[1][i] - ky_[i] * u_[0][i]) - lambda * u_[2][i];
      num += w * (std::norm(cx) + std::norm(cy) + std::norm(cz));
      den += w * (std::norm(u_[0][i]) + std::norm(u_[1][i]) + std::norm(u_[2][i]));
    }
    return den == 0.0 ? 0.0 : std::sqrt(num / den);
  }

  double nu() const { return nu_; }

 private:
  const std::vector<double>& comp_k(int c) const { return c == 0 ? kx_ : c == 1 ? ky_ : kz_; }

  double weighted_sum(int k2_power) const {
    double vol = std::pow(2.0 * kPi, 3);
    int h = ws_.n() / 2 + 1;
    double sum = 0.0;
    for (std::size_t i = 0; i < u_[0].size(); ++i) {
      double w = (i % h) == 0 ? 1.0 : 2.0;
      double mag = std::norm(u_[0][i]) + std::norm(u_[1][i]) + std::norm(u_[2][i]);
      sum += w * (k2_power ? k2_[i] : 1.0) * mag;
    }
    return vol * sum;
  }

  SpectralWorkspace ws_;
  double dt_;
  double nu_;
  std::vector<double> kx_, ky_, kz_, k2_, e_half_, e_full_;
  Spectrum u_, k1_, k2stage_, k3_, k4_, stage_;
  std::array<std::vector<double>, 3> ur_, wr_, sr_;
};

void check_finite(double e, double t) {
  if (!std::isfinite(e)) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "simulation produced non-finite energy at t = %.6g", t);
    throw DivergedSimulation(buf);
  }
}

}  // namespace

SampledField step_nse_spectral(const SampledField& state, double dt, double viscosity) {
  if (state.domain != Domain::Torus)
    throw InvalidConfig("spectral stepping is defined on the torus");
  if (!(dt > 0.0)) throw InvalidConfig("time step must be positive");
  if (viscosity < 0.0) throw InvalidConfig("viscosity must be nonnegative");
  SpectralNse solver(state.n, dt, viscosity);
  solver.load(state);
  solver.step();
  check_finite(solver.energy(), state.time + dt);
  SampledField out(Domain::Torus, state.n);
  out.time = state.time + dt;
  solver.store(out);
  return out;
}

EnergyLedger run_trkal(const BeltramiSpec& spec, double t_end, double dt, int n,
                       double viscosity) {
  if (t_end < 0.0) throw InvalidConfig("t_end must be nonnegative");
  if (!(dt > 0.0)) throw InvalidConfig("time step must be positive");
  if (viscosity < 0.0) throw InvalidConfig("viscosity must be nonnegative");
  long long nsteps = std::llround(t_end / dt);
  if (std::abs(nsteps * dt - t_end) > 1e-9 * std::max(1.0, std::abs(t_end)))
    throw InvalidConfig("t_end must be an integer number of steps");

  SampledField init = beltrami_field(spec, n);
  SpectralNse solver(n, dt, viscosity);
  solver.load(init);

  EnergyLedger ledger;
  double e0 = solver.energy();
  double decay = 2.0 * viscosity * spec.lambda * spec.lambda;
  double prev_ens = solver.enstrophy();
  double d = 0.0;
  ledger.times.push_back(0.0);
  ledger.energy.push_back(e0);
  ledger.dissipation.push_back(0.0);
  ledger.beltrami_residual.push_back(solver.beltrami(spec.lambda));
  ledger.analytic_energy.push_back(e0);

  for (long long j = 1; j <= nsteps; ++j) {
    solver.step();
    double t = j * dt;
    double e = solver.energy();
    check_finite(e, t);
    double ens = solver.enstrophy();
    d += 0.5 * dt * viscosity * (prev_ens + ens);
    prev_ens = ens;
    ledger.times.push_back(t);
    ledger.energy.push_back(e);
    ledger.dissipation.push_back(d);
    ledger.beltrami_residual.push_back(solver.beltrami(spec.lambda));
    ledger.analytic_energy.push_back(e0 * std::exp(-decay * t));
  }
  return ledger;
}

double energy_equality_residual(const EnergyLedger& ledger) {
  if (ledger.energy.empty()) throw InvalidConfig("ledger must be nonempty");
  double e0 = ledger.energy.front();
  if (e0 == 0.0) throw UndefinedRatio("energy balance of a zero-energy run is undefined");
  double worst = 0.0;
  for (std::size_t i = 0; i < ledger.energy.size(); ++i)
    worst = std::max(worst, std::abs(ledger.energy[i] + ledger.dissipation[i] - e0) / e0);
  return worst;
}

}  // namespace flowcheck
