#pragma once

#include <vector>

#include "vortexlab/util.hpp"

namespace vlab {

// Uniform log-radius window used by the one-dimensional spectral solvers.
struct SpectralGrid {
  double t_min = -8.0;
  double t_max = 12.0;
  int n = 900;

  double h() const { return (t_max - t_min) / (n - 1); }
  std::vector<double> nodes() const {
    std::vector<double> t(n);
    for (int i = 0; i < n; ++i) t[i] = t_min + h() * i;
    return t;
  }
  // window must contain [log m1, log m] with margin 4 on both sides
  void validate(double m_inner, double m_outer) const;
};

// psi(t) = int K_m(t, eta) f(eta) d eta with K_m = e^{-m|t-eta|} / (2m),
// evaluated by the two running exponential integrals in O(n). Piecewise-cubic
// Filon quadrature, O(h^4). Integrals are truncated at the window ends, so f
// must decay there.
std::vector<double> greens_apply(double m, std::span<const double> f, const SpectralGrid& grid);
std::vector<cx> greens_apply(double m, std::span<const cx> f, const SpectralGrid& grid);

}  // namespace vlab
