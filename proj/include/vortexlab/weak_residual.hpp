#pragma once

#include <functional>
#include <vector>

#include "vortexlab/field2d.hpp"
#include "vortexlab/polar.hpp"

namespace vlab {

// Smooth space-time test function: Gaussian in x, C^inf window in t equal to
// 1 on [0, t_on] and 0 from t_end on.
struct TestFunction {
  double cx_ = 0, cy_ = 0;
  double r_scale = 1.0;
  double t_on = 0.5, t_end = 1.0;

  double space(double x, double y) const;
  void space_grad(double x, double y, double& gx, double& gy) const;
  double window(double t) const;
  double window_dt(double t) const;

  double value(double x, double y, double t) const { return space(x, y) * window(t); }
  double dt(double x, double y, double t) const { return space(x, y) * window_dt(t); }
};

std::vector<TestFunction> default_test_functions(int count, double spread, double scale,
                                                 double t_on, double t_end, uint64_t seed);

// Inputs for the weak identity: snapshot providers indexed by the quadrature
// times. `times` must start at 0 and cover [0, t_end] of every test function.
struct WeakFields {
  std::function<double(double, double, double)> omega;                 // omega(x, y, t)
  std::function<std::array<double, 2>(double, double, double)> velocity;
  std::function<double(double, double, double)> forcing;
  std::function<double(double, double)> omega0;
};

// max over test functions of |sum of the four integrals| / max |integral|,
// with spatial quadrature on the given polar grid and trapezoid in time
double weak_residual_polar(const WeakFields& f, std::span<const TestFunction> tests,
                           std::span<const double> times, const PolarGrid& grid);

// same functional with spatial grid sums over provided snapshot fields
struct WeakGridInput {
  std::vector<double> times;
  std::vector<Field2D> omega;           // one per time
  std::vector<Field2D> vx, vy;          // one per time
  std::vector<Field2D> z;               // forcing, one per time
  Field2D omega0;
};
double weak_residual_grid(const WeakGridInput& in, std::span<const TestFunction> tests);

}  // namespace vlab
