#pragma once

#include <armadillo>
#include <vector>

#include "vortexlab/profile.hpp"
#include "vortexlab/util.hpp"

namespace vlab {

// log-spaced radial grid for the per-mode integral operators
struct RadialGrid {
  double s_min = 1e-3;
  double s_max = 1e3;
  int n = 640;
  double dlog() const { return (std::log(s_max) - std::log(s_min)) / (n - 1); }
  std::vector<double> nodes() const { return logspace(s_min, s_max, n); }
};

// Parameters of the radial operator
//   L g = -i ml Om g + i ml E psi[g] + gamma (alpha g + s g') + kappa (s g' + g)
// where psi[g] is the stream integral operator. omega_scale multiplies the
// background (Om and E together), which realizes the kappa0-rescaled profile.
struct ModeOperatorParams {
  int m = 2;
  int l = 1;
  double gamma = 0.0;
  double kappa = 0.0;
  double omega_scale = 1.0;
};

arma::cx_mat assemble_mode_operator(const RadialVortexProfile& p, const ModeOperatorParams& par,
                                    const RadialGrid& grid);

// dense matrix of the vorticity-feedback block alone (the Q_l kernel); zero for l = 0
arma::cx_mat feedback_operator(const RadialVortexProfile& p, int m, int l,
                               const RadialGrid& grid);

struct RadialMode {
  int m = 0, l = 0;
  cx lambda;
  std::vector<cx> g;  // tail-normalized samples on grid nodes
  RadialGrid grid;
  double tail_slope = 0.0;
  cx tail_coeff;  // pre-normalization coefficient (diagnostic)
};

// eigenpair with the largest real part, tail-normalized per (6.18)
RadialMode leading_radial_mode(const RadialVortexProfile& p, const ModeOperatorParams& par,
                               const RadialGrid& grid);

arma::cx_vec mode_operator_eigenvalues(const RadialVortexProfile& p,
                                       const ModeOperatorParams& par, const RadialGrid& grid);

// leading mode of the (gamma, kappa) operator found by continuation from the
// unperturbed problem; guards against spurious modes of the dilation term
RadialMode continued_leading_mode(const RadialVortexProfile& p, const ModeOperatorParams& target,
                                  const RadialGrid& grid, int steps = 6);

// evaluate a radial mode at arbitrary s: cubic interpolation in log s inside
// the grid, power-law continuations outside
cx radial_mode_at(const RadialMode& mode, double alpha, double s);

// tracks the eigenvalue with Re lambda > d from kappa_list.front() down to
// kappa_list.back(); kappa = 0 entry reproduces the base eigenvalue exactly
std::vector<cx> kappa_continuation(const RadialVortexProfile& p, int m, int l,
                                   std::span<const double> kappa_list, const RadialGrid& grid,
                                   double d = -1.0);

enum class MomentVariant { plain, scaled };

// plain:  mu = -(alpha / 2|m|) int_0^inf g tau^{1+|m|} dtau          (1.18)
// scaled: lambda = (i alpha / 2 kappa0) int_0^inf g tau^{1+m} dtau - m - 2   (5.14)
cx moment_functional(std::span<const cx> g, const RadialGrid& grid, int m, double alpha,
                     MomentVariant variant, double kappa0 = 1.0);

// Hilbert-Schmidt norm of the feedback block A_l: the tau-integrals of the
// two-sided power kernel are done in closed form, the remaining s-integral by
// log-grid quadrature with exact core/tail pieces.
double hs_norm_A_l(const RadialVortexProfile& p, int m, int l, int n_quad = 2048);

}  // namespace vlab
