#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "vortexlab/util.hpp"

namespace vlab {

// Single smooth bump added to G between the two closed forms. Support in
// log-radius is [center_log - width_log, center_log + width_log] and must sit
// strictly inside (log m_inner, log m_outer).
struct BumpShape {
  double center_log = 1.70;
  double width_log = 0.35;
  double amplitude = 7.5;
  bool auto_tune = false;  // bisect amplitude until the A zero-count condition holds
};

struct ClassCItem {
  bool pass = false;
  double margin = 0.0;
  std::string detail;
};

struct ClassCReport {
  ClassCItem monotone;      // item (i): R' < 0, cumulative integral negative
  ClassCItem closed_forms;  // item (ii): parabolic core / power tail
  ClassCItem zero_count;    // item (iii): A has exactly two zeros with the right slopes
  double cumulative_min = 0.0;  // min over grid of e^{-2t} int_0^{e^t} s^2 G' ds
  double cumulative_max = 0.0;  // max over grid (closest to zero)
  int n_zeros = 0;
  double t_a = 0.0, t_b = 0.0;
  bool pass() const { return monotone.pass && closed_forms.pass && zero_count.pass; }
  std::string first_failure() const;
};

// Radially symmetric background vorticity G(|x|) with parabolic core
// G = g0 - 4 c0 s^2 (s <= m_inner), power tail G = s^{-alpha} (s >= m_outer),
// and a C^inf blend plus one bump in between. Immutable after construction.
class RadialVortexProfile {
 public:
  static RadialVortexProfile build(double alpha, double m_inner, double m_outer, double c0,
                                   BumpShape bump = {}, double g_core_level = 24.0);

  // spatial dilation G(s) -> eps0^{-alpha} G(s / eps0); stays in the family
  // (same power tail) with core, bump and radii transformed accordingly
  RadialVortexProfile dilated(double eps0) const;

  double alpha() const { return alpha_; }
  double m_inner() const { return m1_; }
  double m_outer() const { return m_; }
  double c0() const { return c0_; }
  double g_core_level() const { return g0_; }
  double c_omega() const { return c_omega_; }
  const BumpShape& bump() const { return bump_; }
  std::pair<double, double> a_zeros() const { return {t_a_, t_b_}; }

  double g(double s) const;        // background vorticity G(s)
  double g_prime(double s) const;  // G'(s), analytic
  double omega(double s) const;    // angular velocity (quadrature + closed forms)
  double omega_prime(double s) const;
  double e_potential(double s) const;  // E(s) = G'(s)/s

  // log-radius forms: A(t) = s G'(s), R(t) = Omega(s) at s = e^t
  double a_of_t(double t) const;
  double r_of_t(double t) const;
  double r_prime_of_t(double t) const;  // equals e^{-2t} int_0^{e^t} s^2 G' ds

  std::array<double, 2> background_velocity(double x1, double x2) const;

  // int_0^r s^2 G'(s) ds by independent quadrature (verification route)
  double cumulative_s2gprime(double r) const;
  // int_0^r s G(s) ds
  double integral_sg(double r) const;
  // int_0^inf s G'(s)^2 ds (exact core/tail pieces + blend quadrature)
  double integral_s_gprime_sq() const;

  ClassCReport verify() const;

  // dense samples on the profile's own log grid (serialization + verify)
  const std::vector<double>& sample_radii() const { return s_grid_; }
  std::vector<double> g_samples() const;

 private:
  RadialVortexProfile() = default;
  void init_quadrature();
  void locate_zeros();

  double alpha_ = 0, m1_ = 0, m_ = 0, c0_ = 0, g0_ = 0;
  BumpShape bump_;
  double c_omega_ = 0;
  double t_a_ = 0, t_b_ = 0;

  // composite Gauss-Legendre panels over the blend region [log m1, log m]
  int n_panels_ = 256;
  std::vector<double> panel_t_;        // panel boundaries, size n_panels_+1
  std::vector<double> cum_sg_;         // cumulative int e^{2t} G dt at boundaries
  std::vector<double> cum_s2gp_;       // cumulative int e^{3t} G' dt at boundaries
  double i_core_ = 0;                  // int_0^{m1} tau G dtau (exact)
  double j_core_ = 0;                  // int_0^{m1} tau^2 G' dtau (exact)
  double i_blend_full_ = 0, j_blend_full_ = 0;

  std::vector<double> s_grid_;  // dense log grid spanning [1e-4 m1, 1e3 m]
};

// Operation-style wrappers used by the CLI and tests.
double angular_velocity(const RadialVortexProfile& p, double s);

struct PotentialSamples {
  std::vector<double> a, r, e;
};
PotentialSamples instability_potentials(const RadialVortexProfile& p,
                                        std::span<const double> t_grid);

}  // namespace vlab
