#include "vortexlab/ansatz.hpp"

#include <cmath>

#include "vortexlab/bump.hpp"

namespace vlab {

double ansatz_background_vorticity(const RadialVortexProfile& p, const ScalingFamily& f,
                                   double x1, double x2, double t) {
  const double r = f.r_of_t(t), s = std::hypot(x1, x2);
  const double ra = std::pow(r, -f.alpha);
  return ra * (cutoff_chi(f.c4, f.epsilon * s) * p.g(s / r) +
               f.epsilon * s * cutoff_chi_d(f.c4, f.epsilon * s) * p.omega(s / r));
}

std::array<double, 2> ansatz_background_velocity(const RadialVortexProfile& p,
                                                 const ScalingFamily& f, double x1, double x2,
                                                 double t) {
  const double r = f.r_of_t(t), s = std::hypot(x1, x2);
  const double amp = std::pow(r, -f.alpha) * cutoff_chi(f.c4, f.epsilon * s) * p.omega(s / r);
  // R^{1-a} V(x/R) = R^{-a} Om(s/R) x^perp
  return {-amp * x2, amp * x1};
}

double assemble_ansatz(const RadialVortexProfile& p, const ScalingFamily& f,
                       const Field2D& sigma_snapshot, double x1, double x2, double t) {
  const double r = f.r_of_t(t);
  if (r > f.c4 / (p.m_outer() * f.epsilon) * (1.0 + 1e-12))
    throw SupportViolation("assemble_ansatz: support condition (R <= C4/(M eps)) fails");
  const double tau = f.tau_of_t(t);
  if (std::abs(sigma_snapshot.time - tau) > 1e-9 * (1.0 + std::abs(tau)))
    throw MismatchedSampling("assemble_ansatz: snapshot time differs from tau(t)");
  const double sig = sample_bicubic(sigma_snapshot, x1 / r, x2 / r);
  return std::pow(r, -f.alpha) * sig + ansatz_background_vorticity(p, f, x1, x2, t);
}

double rescaled_beta(const ScalingFamily& f, double t) {
  return std::pow(std::pow(f.epsilon, f.alpha) + f.alpha * f.gamma * t, 1.0 / f.alpha);
}

double rescaled_tau(const ScalingFamily& f, double t) {
  return std::log(rescaled_beta(f, t) / f.epsilon) / f.gamma;
}

double rescaled_background_vorticity(const RadialVortexProfile& p, const ScalingFamily& f,
                                     double x1, double x2, double t) {
  const double beta = rescaled_beta(f, t), s = std::hypot(x1, x2);
  return std::pow(beta, -f.alpha) * (cutoff_chi(f.c4, s) * p.g(s / beta) +
                                     s * cutoff_chi_d(f.c4, s) * p.omega(s / beta));
}

std::array<double, 2> rescaled_background_velocity(const RadialVortexProfile& p,
                                                   const ScalingFamily& f, double x1, double x2,
                                                   double t) {
  const double beta = rescaled_beta(f, t), s = std::hypot(x1, x2);
  const double amp = std::pow(beta, -f.alpha) * cutoff_chi(f.c4, s) * p.omega(s / beta);
  return {-amp * x2, amp * x1};
}

double rescaled_sigma_term(const ScalingFamily& f, const Field2D& sigma_snapshot, double x1,
                           double x2, double t) {
  const double beta = rescaled_beta(f, t);
  const double tau = rescaled_tau(f, t);
  if (std::abs(sigma_snapshot.time - tau) > 1e-9 * (1.0 + std::abs(tau)))
    throw MismatchedSampling("rescaled_sigma_term: snapshot time differs from tau_eps(t)");
  return std::pow(beta, -f.alpha) * sample_bicubic(sigma_snapshot, x1 / beta, x2 / beta);
}

double initial_data_perturbation(const RadialMode& mode, int harmonic, double alpha,
                                 const ScalingFamily& f, double x1, double x2) {
  const double s = std::hypot(x1, x2);
  if (s == 0.0) return 0.0;
  const cx amp = std::pow(f.epsilon, cx(f.rho - f.alpha, f.zeta));
  const cx g = radial_mode_at(mode, alpha, s / f.epsilon);
  const double th = std::atan2(x2, x1);
  return (amp * g * std::exp(cx(0, harmonic * th))).real();
}

double limit_initial_vorticity(const ScalingFamily& f, double x1, double x2) {
  const double s = std::hypot(x1, x2);
  if (s == 0.0) return 0.0;
  return cutoff_chi(f.c4, s) * std::pow(s, -f.alpha) +
         std::pow(s, 1.0 - f.alpha) * cutoff_chi_d(f.c4, s) / (2.0 - f.alpha);
}

RadialSolution exact_radial_solution(const RadialVortexProfile& p, const ScalingFamily& f,
                                     double x1, double x2, double t) {
  if (!(t > 0)) throw TimeSingularity("exact_radial_solution: t > 0 required");
  const double pre = f.alpha * f.gamma * t;  // beta^alpha
  const double beta = std::pow(pre, 1.0 / f.alpha);
  const double s = std::hypot(x1, x2);
  RadialSolution sol;
  sol.omega = (1.0 / pre) * (cutoff_chi(f.c4, s) * p.g(s / beta) +
                             s * cutoff_chi_d(f.c4, s) * p.omega(s / beta));
  const double amp = (1.0 / pre) * cutoff_chi(f.c4, s) * p.omega(s / beta);
  sol.v = {-amp * x2, amp * x1};
  return sol;
}

Field2D rescale_field(const Field2D& f, double epsilon, double alpha, RescaleKind kind,
                      bool* resolution_warning) {
  if (!(epsilon > 0)) throw InvalidParams("rescale_field: epsilon must be positive");
  if (resolution_warning) *resolution_warning = epsilon < 4.0 * f.h() / (2.0 * f.L);
  double expo = 0;
  switch (kind) {
    case RescaleKind::vorticity: expo = -alpha; break;
    case RescaleKind::velocity: expo = 1.0 - alpha; break;
    case RescaleKind::forcing: expo = -2.0 * alpha; break;
  }
  const double amp = std::pow(epsilon, expo);
  Field2D out = f;
  for (int j = 0; j < f.n; ++j)
    for (int i = 0; i < f.n; ++i) {
      const double xs = f.x(i) / epsilon, ys = f.x(j) / epsilon;
      // source points outside the box contribute nothing (decaying fields)
      if (std::abs(xs) >= f.L || std::abs(ys) >= f.L)
        out.at(i, j) = 0.0;
      else
        out.at(i, j) = amp * sample_bicubic(f, xs, ys);
    }
  return out;
}

Field2D sample_mode_field(int n, double L, const RadialMode& mode, int harmonic, double alpha,
                          cx amp) {
  Field2D f = make_field(n, L, "sigma");
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double x = f.x(i), y = f.x(j);
      const double s = std::hypot(x, y);
      if (s == 0.0) continue;
      const cx g = radial_mode_at(mode, alpha, s);
      const double th = std::atan2(y, x);
      f.at(i, j) = (amp * g * std::exp(cx(0, harmonic * th))).real();
    }
  const double mean = field_mean(f);
  for (auto& v : f.v) v -= mean;
  f.sym_m = std::abs(harmonic);
  return f;
}

}  // namespace vlab
