#pragma once

#include <cmath>

namespace vlab {

// Building blocks for C^inf cutoffs and blends, all with analytic derivatives.

// f(x) = exp(-1/x) on x > 0, 0 otherwise.
inline double expstep(double x) { return x > 0 ? std::exp(-1.0 / x) : 0.0; }
inline double expstep_d(double x) { return x > 0 ? std::exp(-1.0 / x) / (x * x) : 0.0; }
inline double expstep_dd(double x) {
  return x > 0 ? std::exp(-1.0 / x) * (1.0 - 2.0 * x) / (x * x * x * x) : 0.0;
}

// smooth step: 0 for x <= 0, 1 for x >= 1, monotone in between
inline double smooth_step(double x) {
  const double p = expstep(x), q = expstep(1.0 - x);
  return p / (p + q);
}
inline double smooth_step_d(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  const double p = expstep(x), q = expstep(1.0 - x);
  const double dp = expstep_d(x), dq = -expstep_d(1.0 - x);
  const double den = p + q;
  return (dp * den - p * (dp + dq)) / (den * den);
}
inline double smooth_step_dd(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  const double p = expstep(x), q = expstep(1.0 - x);
  const double dp = expstep_d(x), dq = -expstep_d(1.0 - x);
  const double ddp = expstep_dd(x), ddq = expstep_dd(1.0 - x);
  const double den = p + q;
  const double num = dp * q - p * dq;
  const double dnum = ddp * q - p * ddq;
  return (dnum * den - 2.0 * num * (dp + dq)) / (den * den * den);
}

// compactly supported bump on (-1, 1), peak value 1 at 0
inline double smooth_bump(double u) {
  if (std::abs(u) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - u * u));
}
inline double smooth_bump_d(double u) {
  if (std::abs(u) >= 1.0) return 0.0;
  const double w = 1.0 - u * u;
  return smooth_bump(u) * (-2.0 * u / (w * w));
}

// chi_tilde of the cutoff family: 1 on [0,1], 0 on [2,inf), C^inf between
inline double chi_tilde(double u) {
  if (u <= 1.0) return 1.0;
  if (u >= 2.0) return 0.0;
  return 1.0 - smooth_step(u - 1.0);
}
inline double chi_tilde_d(double u) {
  if (u <= 1.0 || u >= 2.0) return 0.0;
  return -smooth_step_d(u - 1.0);
}
inline double chi_tilde_dd(double u) {
  if (u <= 1.0 || u >= 2.0) return 0.0;
  return -smooth_step_dd(u - 1.0);
}

// chi(r) = chi_tilde(r / c); derivatives with respect to r
inline double cutoff_chi(double c, double r) { return chi_tilde(r / c); }
inline double cutoff_chi_d(double c, double r) { return chi_tilde_d(r / c) / c; }
inline double cutoff_chi_dd(double c, double r) { return chi_tilde_dd(r / c) / (c * c); }

}  // namespace vlab
