#include "flowcheck/spectral.hpp"

#include <fftw3.h>

#include <cstring>
#include <stdexcept>

namespace flowcheck {

namespace {

std::size_t cplx(int n) { return std::size_t(n) * n * (n / 2 + 1); }

}  // namespace

SpectralWorkspace::SpectralWorkspace(int n) : n_(n), m_(3 * n / 2) {
  if (n < 8 || n % 2 != 0) throw std::invalid_argument("spectral grid needs even n >= 8");
  rbuf_n_.resize(std::size_t(n_) * n_ * n_);
  rbuf_m_.resize(std::size_t(m_) * m_ * m_);
  cbuf_n_.resize(cplx(n_));
  cbuf_m_.resize(cplx(m_));
  auto* cn = reinterpret_cast<fftw_complex*>(cbuf_n_.data());
  auto* cm = reinterpret_cast<fftw_complex*>(cbuf_m_.data());
  fwd_n_ = fftw_plan_dft_r2c_3d(n_, n_, n_, rbuf_n_.data(), cn, FFTW_ESTIMATE);
  bwd_n_ = fftw_plan_dft_c2r_3d(n_, n_, n_, cn, rbuf_n_.data(), FFTW_ESTIMATE);
  fwd_m_ = fftw_plan_dft_r2c_3d(m_, m_, m_, rbuf_m_.data(), cm, FFTW_ESTIMATE);
  bwd_m_ = fftw_plan_dft_c2r_3d(m_, m_, m_, cm, rbuf_m_.data(), FFTW_ESTIMATE);
  if (!fwd_n_ || !bwd_n_ || !fwd_m_ || !bwd_m_) throw std::runtime_error("fftw plan creation failed");
}

SpectralWorkspace::~SpectralWorkspace() {
  fftw_destroy_plan(fwd_n_);
  fftw_destroy_plan(bwd_n_);
  fftw_destroy_plan(fwd_m_);
  fftw_destroy_plan(bwd_m_);
}

void SpectralWorkspace::zero_nyquist(std::complex<double>* spec) const {
  int h = n_ / 2 + 1;
  for (int ix = 0; ix < n_; ++ix)
    for (int iy = 0; iy < n_; ++iy)
      for (int iz = 0; iz < h; ++iz)
        if (ix == n_ / 2 || iy == n_ / 2 || iz == n_ / 2)
          spec[(std::size_t(ix) * n_ + iy) * h + iz] = 0.0;
}

void SpectralWorkspace::forward(const double* real, std::complex<double>* spec) {
  std::memcpy(rbuf_n_.data(), real, real_size() * sizeof(double));
  fftw_execute(fwd_n_);
  double s = 1.0 / real_size();
  for (std::size_t i = 0; i < cbuf_n_.size(); ++i) spec[i] = cbuf_n_[i] * s;
  zero_nyquist(spec);
}

void SpectralWorkspace::backward(const std::complex<double>* spec, double* real) {
  // c2r destroys its input, hence the copy into the plan buffer.
  std::memcpy(cbuf_n_.data(), spec, cbuf_n_.size() * sizeof(std::complex<double>));
  fftw_execute(bwd_n_);
  std::memcpy(real, rbuf_n_.data(), real_size() * sizeof(double));
}

void SpectralWorkspace::backward_padded(const std::complex<double>* spec, double* real_m) {
  std::fill(cbuf_m_.begin(), cbuf_m_.end(), std::complex<double>(0.0, 0.0));
  int hn = n_ / 2 + 1;
  int hm = m_ / 2 + 1;
  for (int ix = 0; ix < n_; ++ix) {
    int jx = ix <= n_ / 2 ? ix : ix + (m_ - n_);
    for (int iy = 0; iy < n_; ++iy) {
      int jy = iy <= n_ / 2 ? iy : iy + (m_ - n_);
      const std::complex<double>* src = spec + (std::size_t(ix) * n_ + iy) * hn;
      std::complex<double>* dst = cbuf_m_.data() + (std::size_t(jx) * m_ + jy) * hm;
      std::memcpy(dst, src, hn * sizeof(std::complex<double>));
    }
  }
  fftw_execute(bwd_m_);
  std::memcpy(real_m, rbuf_m_.data(), padded_size() * sizeof(double));
}

void SpectralWorkspace::forward_truncated(const double* real_m, std::complex<double>* spec) {
  std::memcpy(rbuf_m_.data(), real_m, padded_size() * sizeof(double));
  fftw_execute(fwd_m_);
  double s = 1.0 / padded_size();
  int hn = n_ / 2 + 1;
  int hm = m_ / 2 + 1;
  for (int ix = 0; ix < n_; ++ix) {
    int jx = ix <= n_ / 2 ? ix : ix + (m_ - n_);
    for (int iy = 0; iy < n_; ++iy) {
      int jy = iy <= n_ / 2 ? iy : iy + (m_ - n_);
      const std::complex<double>* src = cbuf_m_.data() + (std::size_t(jx) * m_ + jy) * hm;
      std::complex<double>* dst = spec + (std::size_t(ix) * n_ + iy) * hn;
      for (int iz = 0; iz < hn; ++iz) dst[iz] = src[iz] * s;
    }
  }
  zero_nyquist(spec);
}

}  // namespace flowcheck
