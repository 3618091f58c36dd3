#pragma once

#include <array>

#include "vortexlab/family.hpp"
#include "vortexlab/field2d.hpp"
#include "vortexlab/mode_operator.hpp"
#include "vortexlab/profile.hpp"

namespace vlab {

// Background part of the ansatz in original variables at time t:
// omega = R^{-a}[chi(eps|x|) G(|x|/R) + eps|x| chi'(eps|x|) Om(|x|/R)],
// v     = R^{1-a} chi(eps|x|) V(x/R).
double ansatz_background_vorticity(const RadialVortexProfile& p, const ScalingFamily& f,
                                   double x1, double x2, double t);
std::array<double, 2> ansatz_background_velocity(const RadialVortexProfile& p,
                                                 const ScalingFamily& f, double x1, double x2,
                                                 double t);

// Full ansatz: background plus R^{-alpha} sigma(x/R, tau(t)) from a snapshot.
// The snapshot must carry time tau(t); the support condition (6.7) is enforced.
double assemble_ansatz(const RadialVortexProfile& p, const ScalingFamily& f,
                       const Field2D& sigma_snapshot, double x1, double x2, double t);

// epsilon-rescaled system: beta(t) = (eps^alpha + alpha gamma t)^{1/alpha}
double rescaled_beta(const ScalingFamily& f, double t);
double rescaled_tau(const ScalingFamily& f, double t);  // tau_eps(t) = log(beta/eps)/gamma

double rescaled_background_vorticity(const RadialVortexProfile& p, const ScalingFamily& f,
                                     double x1, double x2, double t);
std::array<double, 2> rescaled_background_velocity(const RadialVortexProfile& p,
                                                   const ScalingFamily& f, double x1, double x2,
                                                   double t);
// sigma contribution beta^{-alpha} sigma(x/beta) from a snapshot at tau_eps(t)
double rescaled_sigma_term(const ScalingFamily& f, const Field2D& sigma_snapshot, double x1,
                           double x2, double t);

// perturbation part of the initial data (9.5): Re(eps^{rho+i zeta-alpha} eta(x/eps))
double initial_data_perturbation(const RadialMode& mode, int harmonic, double alpha,
                                 const ScalingFamily& f, double x1, double x2);

// limit initial data (10.4)
double limit_initial_vorticity(const ScalingFamily& f, double x1, double x2);

// exact radial solution of the forced equation (final Remark of the paper)
struct RadialSolution {
  double omega;
  std::array<double, 2> v;
};
RadialSolution exact_radial_solution(const RadialVortexProfile& p, const ScalingFamily& f,
                                     double x1, double x2, double t);

enum class RescaleKind { vorticity, velocity, forcing };

// grid form of the scaling (9.1): field(x) -> eps^{e} field(x/eps) with
// exponent e = -alpha, 1-alpha, -2alpha by kind; bicubic resampling
Field2D rescale_field(const Field2D& f, double epsilon, double alpha, RescaleKind kind,
                      bool* resolution_warning = nullptr);

// sample Re(amp g(|y|) e^{i harmonic theta}) on the box, mean-corrected
Field2D sample_mode_field(int n, double L, const RadialMode& mode, int harmonic, double alpha,
                          cx amp);

}  // namespace vlab
