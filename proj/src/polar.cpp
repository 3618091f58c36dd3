#include "vortexlab/polar.hpp"

#include <cmath>

namespace vlab {

namespace {

double nonradial_impl(const std::function<double(double, double)>& f, const PolarGrid& grid) {
  const auto r = grid.radii();
  double e_tot = 0, e_rad = 0;
  for (int k = 0; k < grid.n_r; ++k) {
    double sum = 0, sumsq = 0;
    for (int a = 0; a < grid.n_theta; ++a) {
      const double th = a * grid.dtheta();
      const double v = f(r[k] * std::cos(th), r[k] * std::sin(th));
      sum += v;
      sumsq += v * v;
    }
    const double mean = sum / grid.n_theta;
    const double w = grid.rweight(r, k) * grid.dtheta();
    e_tot += sumsq * w;
    e_rad += grid.n_theta * mean * mean * w;
  }
  if (e_tot <= 0) return 0.0;
  return std::max(0.0, (e_tot - e_rad) / e_tot);
}

}  // namespace

double nonradial_fraction(const Field2D& f, const PolarGrid& grid) {
  return nonradial_impl([&](double x, double y) { return sample_bicubic(f, x, y); }, grid);
}

double nonradial_fraction(const std::function<double(double, double)>& f, const PolarGrid& grid) {
  return nonradial_impl(f, grid);
}

double lq_norm_polar(const std::function<double(double, double)>& f, double q,
                     const PolarGrid& grid) {
  const auto r = grid.radii();
  double s = 0;
  for (int k = 0; k < grid.n_r; ++k) {
    double ring = 0;
    for (int a = 0; a < grid.n_theta; ++a) {
      const double th = a * grid.dtheta();
      ring += std::pow(std::abs(f(r[k] * std::cos(th), r[k] * std::sin(th))), q);
    }
    s += ring * grid.rweight(r, k) * grid.dtheta();
  }
  return std::pow(s, 1.0 / q);
}

}  // namespace vlab
