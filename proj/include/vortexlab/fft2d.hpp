#pragma once

#include <fftw3.h>

#include <memory>
#include <vector>

#include "vortexlab/field2d.hpp"

namespace vlab {

// FFTW workspace for one grid size. Spectral layout is the r2c half-plane,
// n rows (y frequencies, wrapped) by n/2+1 columns (x frequencies >= 0).
// Not thread-safe; use one instance per worker.
class Spec2D {
 public:
  Spec2D(int n, double L);
  ~Spec2D();
  Spec2D(const Spec2D&) = delete;
  Spec2D& operator=(const Spec2D&) = delete;

  int n() const { return n_; }
  double L() const { return L_; }
  int nk() const { return n_ / 2 + 1; }

  using Spectral = std::vector<cx>;

  Spectral forward(const Field2D& f);
  Field2D inverse(const Spectral& s, const Field2D& like);

  double kx(int i) const { return M_PI / L_ * i; }
  double ky(int j) const { return M_PI / L_ * (j <= n_ / 2 ? j : j - n_); }

  void apply_dealias(Spectral& s) const;  // 2/3 rule
  void deriv_x(const Spectral& in, Spectral& out) const;
  void deriv_y(const Spectral& in, Spectral& out) const;

  // w = grad^perp laplace^{-1} omega on the box, zero-mean mode dropped
  void biot_savart(const Field2D& omega, Field2D& ux, Field2D& uy);

  // spectral gradient of a field
  void gradient(const Field2D& f, Field2D& fx, Field2D& fy);

  // div(a, b) computed spectrally, optionally dealiasing the inputs
  Field2D divergence(const Field2D& a, const Field2D& b, bool dealias);

  // project a field onto its 2/3-dealiased modes
  void dealias_field(Field2D& f);

 private:
  int n_;
  double L_;
  fftw_plan fwd_ = nullptr, bwd_ = nullptr;
  double* real_ = nullptr;
  fftw_complex* cplx_ = nullptr;
};

}  // namespace vlab
