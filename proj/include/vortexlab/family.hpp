#pragma once

#include "vortexlab/util.hpp"

namespace vlab {

// Self-similar scaling family: rates, time maps and cutoff data.
// rho + i zeta = lambda / gamma; T_* solves C1 eps^rho e^{a T_*} = C0.
struct ScalingFamily {
  double alpha = 0.4;
  double gamma = 1.0;
  double epsilon = 1.0;
  double a_growth = 0.0;  // Re lambda
  double b_freq = 0.0;    // Im lambda
  double rho = 0.0;
  double zeta = 0.0;
  double c4 = 12.0;        // cutoff radius
  double c0_small = 0.05;  // C0 of the growth window
  double c1_const = 1.0;   // C1 (measured, set by experiments)
  double t_star = 0.0;

  static ScalingFamily make(double alpha, double gamma, double epsilon, cx lambda, double c4,
                            double c0_small = 0.05, double c1_const = 1.0);

  void validate() const;

  // R(t) = (1 + alpha gamma t)^{1/alpha}, tau(t) = log(1 + alpha gamma t)/(alpha gamma)
  double r_of_t(double t) const;
  double rdot_of_t(double t) const;
  double tau_of_t(double t) const;
  double t_of_tau(double tau) const;  // inverse map
  double r_of_tau(double tau) const { return std::exp(gamma * tau); }

  // latest time at which the forcing support condition R(t) <= c4 / (M eps) holds
  double support_t_max(double m_outer) const;
};

struct TimeMaps {
  double r;
  double tau;
};
TimeMaps time_maps(const ScalingFamily& f, double t);

}  // namespace vlab
