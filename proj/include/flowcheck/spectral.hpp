#pragma once

#include <complex>
#include <vector>

// Forward declaration keeps fftw3.h out of every translation unit that only
// needs the workspace interface.
struct fftw_plan_s;

namespace flowcheck {

// Real-to-complex transform pair on the 2pi-periodic cube, plus the 3/2-rule
// padded pair used for dealiased products. Layout is row-major with z
// contiguous: real n*n*n, spectrum n*n*(n/2+1), entry (ix*n+iy)*(n/2+1)+iz.
//
// Conventions, relied on throughout:
//  - forward() scales by 1/n^3, so the spectrum holds trigonometric
//    coefficients and backward() (unscaled) reproduces nodal values on any
//    grid that resolves them;
//  - Nyquist planes (|k| = n/2) are zeroed on every forward pass, so a state
//    round-trips exactly and padded transfers need no special casing;
//  - plans are created with FFTW_ESTIMATE only: plan choice must not depend
//    on runtime timing, or identical inputs could stop producing identical
//    output bytes.
class SpectralWorkspace {
 public:
  explicit SpectralWorkspace(int n);
  ~SpectralWorkspace();
  SpectralWorkspace(const SpectralWorkspace&) = delete;
  SpectralWorkspace& operator=(const SpectralWorkspace&) = delete;

  int n() const { return n_; }
  int padded() const { return m_; }
  std::size_t spec_size() const { return std::size_t(n_) * n_ * (n_ / 2 + 1); }
  std::size_t real_size() const { return std::size_t(n_) * n_ * n_; }
  std::size_t padded_size() const { return std::size_t(m_) * m_ * m_; }

  // Signed wavenumber of row index i on an n-point grid.
  static int wavenumber(int i, int n) { return i <= n / 2 ? i : i - n; }

  void forward(const double* real, std::complex<double>* spec);
  void backward(const std::complex<double>* spec, double* real);

  // Evaluate the trig polynomial held in an n-grid spectrum on the 3n/2
  // grid; and project an m-grid product back onto the n-grid modes.
  void backward_padded(const std::complex<double>* spec, double* real_m);
  void forward_truncated(const double* real_m, std::complex<double>* spec);

 private:
  void zero_nyquist(std::complex<double>* spec) const;

  int n_;
  int m_;
  std::vector<double> rbuf_n_;
  std::vector<double> rbuf_m_;
  std::vector<std::complex<double>> cbuf_n_;
  std::vector<std::complex<double>> cbuf_m_;
  fftw_plan_s* fwd_n_;
  fftw_plan_s* bwd_n_;
  fftw_plan_s* fwd_m_;
  fftw_plan_s* bwd_m_;
};

}  // namespace flowcheck
