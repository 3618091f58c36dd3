#include "vortexlab/forcing.hpp"

#include <cmath>

#include "vortexlab/bump.hpp"

namespace vlab {

double forcing_w(const RadialVortexProfile& p, double s) {
  return -p.alpha() * p.g(s) - s * p.g_prime(s);
}

double forcing_b(const RadialVortexProfile& p, double s) {
  return -p.alpha() * p.omega(s) - s * p.omega_prime(s);
}

namespace {

// common ring form gamma pre^{-2} [chi(|x|) W(b x) + |x| chi'(|x|) B(b |x|)]
double ring_forcing(const RadialVortexProfile& p, const ScalingFamily& f, double s, double pre) {
  const double b = std::pow(pre, -1.0 / f.alpha);
  return f.gamma / (pre * pre) *
         (cutoff_chi(f.c4, s) * forcing_w(p, b * s) +
          s * cutoff_chi_d(f.c4, s) * forcing_b(p, b * s));
}

}  // namespace

double forcing(const ForcingSpec& spec, const ScalingFamily& f, double x1, double x2, double t) {
  const RadialVortexProfile& p = *spec.profile;
  const double s = std::hypot(x1, x2);
  switch (spec.variant) {
    case ForcingVariant::physical: {
      if (!(t >= 0)) throw InvalidParams("forcing: t must be nonnegative");
      const double r = f.r_of_t(t);
      if (r > f.c4 / (p.m_outer() * f.epsilon) * (1.0 + 1e-12))
        throw SupportViolation("forcing: support condition R(t) <= C4/(M eps) fails");
      const double pre = f.rdot_of_t(t) * std::pow(r, -1.0 - f.alpha);
      return pre * (cutoff_chi(f.c4, f.epsilon * s) * forcing_w(p, s / r) +
                    f.epsilon * s * cutoff_chi_d(f.c4, f.epsilon * s) * forcing_b(p, s / r));
    }
    case ForcingVariant::rescaled: {
      const double pre = std::pow(f.epsilon, f.alpha) + f.alpha * f.gamma * t;
      return ring_forcing(p, f, s, pre);
    }
    case ForcingVariant::limit: {
      if (!(t > 0)) throw TimeSingularity("forcing: limit variant needs t > 0");
      return ring_forcing(p, f, s, f.alpha * f.gamma * t);
    }
    case ForcingVariant::velocity:
      throw InvalidParams("forcing: velocity variant is vector-valued, use forcing_velocity");
  }
  return 0.0;
}

std::array<double, 2> forcing_velocity(const ForcingSpec& spec, const ScalingFamily& f, double x1,
                                       double x2, double t) {
  const RadialVortexProfile& p = *spec.profile;
  const double s = std::hypot(x1, x2);
  const double pre = std::pow(f.epsilon, f.alpha) + f.alpha * f.gamma * t;
  const double b = std::pow(pre, -1.0 / f.alpha);
  const double amp = f.gamma * cutoff_chi(f.c4, s) / (pre * pre) * forcing_b(p, b * s);
  return {-amp * x2, amp * x1};
}

double limit_curl_field(const RadialVortexProfile& p, const ScalingFamily& f, double x1,
                        double x2, double t) {
  if (!(t > 0)) throw TimeSingularity("limit_curl_field: t > 0 required");
  const double s = std::hypot(x1, x2);
  const double pre = f.alpha * f.gamma * t;           // beta^alpha
  const double b = std::pow(pre, -1.0 / f.alpha);     // 1/beta
  // curl of chi(s) beta^{1-alpha} V(s/beta) x-hat-perp structure:
  // beta^{-alpha} [chi G(s/beta) + s chi' Omega(s/beta)]
  return (1.0 / pre) * (cutoff_chi(f.c4, s) * p.g(b * s) +
                        s * cutoff_chi_d(f.c4, s) * p.omega(b * s));
}

}  // namespace vlab
