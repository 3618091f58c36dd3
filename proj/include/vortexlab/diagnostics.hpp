#pragma once

#include <vector>

#include "vortexlab/field2d.hpp"
#include "vortexlab/stepper.hpp"

namespace vlab {

struct GrowthFit {
  double rate = 0.0;
  double intercept = 0.0;  // log of the fitted prefactor
  double r2 = 0.0;
};

// least squares line on (tau, log norm) restricted to [window_lo, window_hi]
GrowthFit growth_rate_fit(std::span<const double> tau, std::span<const double> norm,
                          double window_lo, double window_hi);

struct GapSeries {
  std::vector<double> tau;
  std::vector<double> gap;    // || sigma - sigma_lin ||_Q
  std::vector<double> ratio;  // gap / || sigma_lin ||_Q
};

// distance between matched snapshots of two trajectories in L^Q
GapSeries linear_gap(const Trajectory& nonlinear, const Trajectory& linear, double q);

struct HolderEstimate {
  double space_exponent = 0.0;
  double time_exponent = 0.0;
  double exponent = 0.0;  // min of the two, capped at 1
};

// empirical Holder exponents of a velocity time series from dyadic increments
HolderEstimate holder_diagnostic(const std::vector<Field2D>& vx,
                                 const std::vector<Field2D>& vy,
                                 std::span<const double> times);

}  // namespace vlab
