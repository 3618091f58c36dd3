#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "vortexlab/family.hpp"
#include "vortexlab/fft2d.hpp"
#include "vortexlab/field2d.hpp"
#include "vortexlab/forcing.hpp"
#include "vortexlab/mode_operator.hpp"
#include "vortexlab/profile.hpp"

namespace vlab {

enum class EvolutionVariant {
  full_v,          // (7.1): background V, self-similar drift terms
  cutoff_v1,       // (8.2): background chi(eps e^{gamma tau}|y|) V
  linearized,      // (7.1) without (w, d) sigma
  physical_euler,  // (9.3): d_t omega = -(v, d) omega + Z_eps
};

struct EvolutionConfig {
  EvolutionVariant variant = EvolutionVariant::cutoff_v1;
  double dtau = 2e-3;
  bool dealias = true;
  double cfl_safety = 0.5;
  std::vector<double> q_list = {3.0};
  // evolve inside the m-fold-symmetric subspace (exact index-permutation
  // projection each step; only m with grid-exact rotations are enforced)
  bool enforce_symmetry = true;
};

struct Trajectory {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // one row per record time
  std::vector<Field2D> snapshots;
  std::vector<double> snapshot_times;

  double column(size_t row, const std::string& name) const;
  std::vector<double> series(const std::string& name) const;
  std::vector<double> times() const { return series("tau"); }
};

struct EvolveRequest {
  double tau_end = 1.0;
  double record_dtau = 0.05;
  std::vector<double> snapshot_taus;
  // optional azimuthal-mode projection tracked in the record table
  const RadialMode* projection_mode = nullptr;
  int projection_harmonic = 0;
};

// Pseudo-spectral integrator for the self-similar perturbation equation and
// the forced physical equation, RK4 in time, divergence-form transport.
class Dynamics {
 public:
  Dynamics(const RadialVortexProfile& p, const ScalingFamily& f, const EvolutionConfig& cfg,
           int n, double L);

  const EvolutionConfig& config() const { return cfg_; }
  Spec2D& spec() { return *spec_; }

  // single RK4 step from sigma.time; throws CflViolation / NonFinite
  void step(Field2D& sigma);

  Trajectory evolve(Field2D sigma0, const EvolveRequest& req);

  // right-hand side at given self-similar time (exposed for tests)
  Field2D rhs(const Field2D& sigma, double tau);

  double max_speed(const Field2D& sigma, double tau);

 private:
  void background(double tau, Field2D& bx, Field2D& by, Field2D& dcurl) const;

  const RadialVortexProfile& profile_;
  ScalingFamily family_;
  EvolutionConfig cfg_;
  int n_;
  double L_;
  std::unique_ptr<Spec2D> spec_;
  Field2D vx_full_, vy_full_, dcurl_full_;  // background velocity and radial curl derivative
  Field2D radius_;
  Field2D xg_, yg_;  // coordinate fields
};

}  // namespace vlab
