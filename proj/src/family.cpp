#include "vortexlab/family.hpp"

#include <cmath>

namespace vlab {

ScalingFamily ScalingFamily::make(double alpha, double gamma, double epsilon, cx lambda,
                                  double c4, double c0_small, double c1_const) {
  ScalingFamily f;
  f.alpha = alpha;
  f.gamma = gamma;
  f.epsilon = epsilon;
  f.a_growth = lambda.real();
  f.b_freq = lambda.imag();
  f.rho = lambda.real() / gamma;
  f.zeta = lambda.imag() / gamma;
  f.c4 = c4;
  f.c0_small = c0_small;
  f.c1_const = c1_const;
  f.t_star = (f.a_growth > 0)
                 ? std::log(c0_small / (c1_const * std::pow(epsilon, f.rho))) / f.a_growth
                 : 0.0;
  f.validate();
  return f;
}

void ScalingFamily::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigInvalid("family: alpha must lie in (0, 1)");
  if (!(gamma > 0.0)) throw ConfigInvalid("family: gamma must be positive");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw ConfigInvalid("family: epsilon in (0, 1]");
  if (a_growth > 0.0 && !(gamma < a_growth / alpha))
    throw ConfigInvalid("family: gamma < a/alpha violated");
  if (!(c4 > 0.0)) throw ConfigInvalid("family: c4 must be positive");
  if (!(c0_small > 0.0 && c0_small < 1.0)) throw ConfigInvalid("family: C0 must lie in (0, 1)");
}

double ScalingFamily::r_of_t(double t) const {
  return std::pow(1.0 + alpha * gamma * t, 1.0 / alpha);
}

double ScalingFamily::rdot_of_t(double t) const {
  return gamma * std::pow(1.0 + alpha * gamma * t, 1.0 / alpha - 1.0);
}

double ScalingFamily::tau_of_t(double t) const {
  return std::log(1.0 + alpha * gamma * t) / (alpha * gamma);
}

double ScalingFamily::t_of_tau(double tau) const {
  return std::expm1(alpha * gamma * tau) / (alpha * gamma);
}

double ScalingFamily::support_t_max(double m_outer) const {
  const double rmax = c4 / (m_outer * epsilon);
  if (rmax <= 1.0) return 0.0;
  return (std::pow(rmax, alpha) - 1.0) / (alpha * gamma);
}

TimeMaps time_maps(const ScalingFamily& f, double t) {
  if (t < 0) throw InvalidParams("time_maps: t must be nonnegative");
  return {f.r_of_t(t), f.tau_of_t(t)};
}

}  // namespace vlab
