#include "vortexlab/fft2d.hpp"

#include <cmath>
#include <cstring>
#include <mutex>

namespace vlab {

namespace {
std::mutex plan_mutex;  // FFTW planning is not thread-safe
}

Spec2D::Spec2D(int n, double L) : n_(n), L_(L) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  real_ = fftw_alloc_real((size_t)n * n);
  cplx_ = fftw_alloc_complex((size_t)n * (n / 2 + 1));
  fwd_ = fftw_plan_dft_r2c_2d(n, n, real_, cplx_, FFTW_ESTIMATE);
  bwd_ = fftw_plan_dft_c2r_2d(n, n, cplx_, real_, FFTW_ESTIMATE);
}

Spec2D::~Spec2D() {
  std::lock_guard<std::mutex> lock(plan_mutex);
  fftw_destroy_plan(fwd_);
  fftw_destroy_plan(bwd_);
  fftw_free(real_);
  fftw_free(cplx_);
}

Spec2D::Spectral Spec2D::forward(const Field2D& f) {
  std::memcpy(real_, f.v.data(), sizeof(double) * f.v.size());
  fftw_execute(fwd_);
  Spectral out((size_t)n_ * nk());
  const double scale = 1.0 / ((double)n_ * n_);
  for (size_t k = 0; k < out.size(); ++k) out[k] = cx(cplx_[k][0], cplx_[k][1]) * scale;
  return out;
}

Field2D Spec2D::inverse(const Spectral& s, const Field2D& like) {
  for (size_t k = 0; k < s.size(); ++k) {
    cplx_[k][0] = s[k].real();
    cplx_[k][1] = s[k].imag();
  }
  fftw_execute(bwd_);
  Field2D out = like;
  std::memcpy(out.v.data(), real_, sizeof(double) * out.v.size());
  return out;
}

void Spec2D::apply_dealias(Spectral& s) const {
  const int cut = n_ / 3;
  for (int j = 0; j < n_; ++j) {
    const int fj = j <= n_ / 2 ? j : j - n_;
    for (int i = 0; i < nk(); ++i)
      if (std::abs(fj) > cut || i > cut) s[(size_t)j * nk() + i] = 0.0;
  }
}

void Spec2D::deriv_x(const Spectral& in, Spectral& out) const {
  out.resize(in.size());
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < nk(); ++i) {
      // drop the unpaired Nyquist mode
      const double k = (i == n_ / 2) ? 0.0 : kx(i);
      out[(size_t)j * nk() + i] = cx(0, k) * in[(size_t)j * nk() + i];
    }
}

void Spec2D::deriv_y(const Spectral& in, Spectral& out) const {
  out.resize(in.size());
  for (int j = 0; j < n_; ++j) {
    const double k = (j == n_ / 2) ? 0.0 : ky(j);
    for (int i = 0; i < nk(); ++i) out[(size_t)j * nk() + i] = cx(0, k) * in[(size_t)j * nk() + i];
  }
}

void Spec2D::biot_savart(const Field2D& omega, Field2D& ux, Field2D& uy) {
  Spectral oh = forward(omega);
  Spectral uxs(oh.size()), uys(oh.size());
  for (int j = 0; j < n_; ++j) {
    const double kyv = ky(j);
    for (int i = 0; i < nk(); ++i) {
      const double kxv = kx(i);
      const double k2 = kxv * kxv + kyv * kyv;
      const size_t idx = (size_t)j * nk() + i;
      if (k2 == 0.0) {
        uxs[idx] = uys[idx] = 0.0;
        continue;
      }
      // psi_hat = -omega_hat / k^2; u = (-d_y psi, d_x psi)
      const cx ph = -oh[idx] / k2;
      const double kyd = (j == n_ / 2) ? 0.0 : kyv;
      const double kxd = (i == n_ / 2) ? 0.0 : kxv;
      uxs[idx] = cx(0, -kyd) * ph;
      uys[idx] = cx(0, kxd) * ph;
    }
  }
  ux = inverse(uxs, omega);
  ux.kind = "velocity_x";
  uy = inverse(uys, omega);
  uy.kind = "velocity_y";
}

void Spec2D::gradient(const Field2D& f, Field2D& fx, Field2D& fy) {
  Spectral s = forward(f);
  Spectral d;
  deriv_x(s, d);
  fx = inverse(d, f);
  deriv_y(s, d);
  fy = inverse(d, f);
}

Field2D Spec2D::divergence(const Field2D& a, const Field2D& b, bool dealias) {
  Spectral sa = forward(a), sb = forward(b);
  if (dealias) {
    apply_dealias(sa);
    apply_dealias(sb);
  }
  Spectral da, db;
  deriv_x(sa, da);
  deriv_y(sb, db);
  for (size_t k = 0; k < da.size(); ++k) da[k] += db[k];
  if (dealias) apply_dealias(da);
  return inverse(da, a);
}

void Spec2D::dealias_field(Field2D& f) {
  Spectral s = forward(f);
  apply_dealias(s);
  f = inverse(s, f);
}

}  // namespace vlab
