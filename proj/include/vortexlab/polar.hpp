#pragma once

#include <functional>
#include <vector>

#include "vortexlab/field2d.hpp"

namespace vlab {

// log-spaced radial nodes with uniform angles; quadrature weights cover r dr dtheta
struct PolarGrid {
  double r_min = 1e-3;
  double r_max = 10.0;
  int n_r = 256;
  int n_theta = 256;
  std::vector<double> radii() const { return logspace(r_min, r_max, n_r); }
  double dtheta() const { return 2.0 * M_PI / n_theta; }
  // trapezoid weight for int ... r dr at node k (log spacing)
  double rweight(const std::vector<double>& r, int k) const {
    const double dl = (std::log(r_max) - std::log(r_min)) / (n_r - 1);
    const double f = (k == 0 || k == n_r - 1) ? 0.5 : 1.0;
    return f * r[k] * r[k] * dl;
  }
};

// share of L2 energy in nonzero azimuthal harmonics, in [0, 1]
double nonradial_fraction(const Field2D& f, const PolarGrid& grid);
double nonradial_fraction(const std::function<double(double, double)>& f, const PolarGrid& grid);

// L^q norm of a closed-form field by polar quadrature
double lq_norm_polar(const std::function<double(double, double)>& f, double q,
                     const PolarGrid& grid);

}  // namespace vlab
