#pragma once

#include <armadillo>
#include <vector>

#include "vortexlab/greens.hpp"
#include "vortexlab/profile.hpp"
#include "vortexlab/util.hpp"

namespace vlab {

// One azimuthal-mode eigenpair. For the log-radius problem l = 1 and the mode
// number is m itself; the radial-operator studies fill in l as used.
struct EigenMode {
  int m = 0;
  int l = 1;
  cx mu;                   // eigenvalue of the log-radius equation
  cx lambda;               // -i m mu, eigenvalue of the physical problem
  std::vector<cx> psi;     // stream profile on the t-grid
  std::vector<cx> g;       // radial vorticity on the t-grid (same nodes, s = e^t)
  std::string normalization = "tail";  // or "l2"
  double residual_pencil = 0.0;
  double residual_integral = 0.0;
  double refine_drift = 0.0;   // relative eigenvalue change under grid doubling
  double tail_slope = 0.0;     // fitted log-log slope of |g| on the far tail
  cx moment;                   // int_0^inf g tau^{1+m} d tau
  SpectralGrid grid;
};

struct SpectrumOptions {
  double imag_floor = 1e-6;
  double boundary_tol = 1e-6;   // |psi| at window ends relative to max
  double refine_tol = 1e-3;     // relative eigenvalue drift under doubling
  bool refine = true;
};

// Linear pencil D psi = mu B psi encoding (1.23) multiplied through by (R - mu):
// D = diag(R) T + diag(A), B = T, with T = -d^2/dt^2 + m^2 (Dirichlet ends,
// 4th-order stencil away from the boundary rows).
struct Pencil {
  arma::mat d, b;
  std::vector<double> t;  // interior nodes
};
Pencil assemble_ode_eigenproblem(const RadialVortexProfile& p, int m, const SpectralGrid& grid);

// All pencil eigenpairs with Im mu > opts.imag_floor that decay at the window
// ends and survive grid doubling. Eigenfunctions are tail-normalized.
std::vector<EigenMode> unstable_spectrum(const RadialVortexProfile& p, int m,
                                         const SpectralGrid& grid, SpectrumOptions opts = {});

// Relative L2 residual of the integral form (1.36) for a given eigenpair.
double eigen_residual_integral(const EigenMode& mode, const RadialVortexProfile& p,
                               const SpectralGrid& grid);

// raw pencil eigen-solve, no filtering (internal + tests)
struct PencilEig {
  arma::cx_vec mu;
  arma::cx_mat psi;  // columns, interior nodes
};
PencilEig solve_pencil(const RadialVortexProfile& p, int m, const SpectralGrid& grid);

}  // namespace vlab
