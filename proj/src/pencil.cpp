#include "vortexlab/pencil.hpp"

#include <algorithm>
#include <cmath>

namespace vlab {

namespace {

// -d^2/dt^2 + m^2 on interior nodes, Dirichlet at both window ends.
// 4th-order stencil where the full 5-point window fits (boundary values are
// zero, so rows next to the ends keep 4th order too); 2nd order on the two
// outermost rows.
arma::mat second_diff_op(int n_int, double h, double msq) {
  arma::mat t(n_int, n_int, arma::fill::zeros);
  const double h2 = h * h;
  for (int i = 0; i < n_int; ++i) {
    const bool edge = (i == 0 || i == n_int - 1);
    if (edge) {
      t(i, i) = 2.0 / h2 + msq;
      if (i > 0) t(i, i - 1) = -1.0 / h2;
      if (i + 1 < n_int) t(i, i + 1) = -1.0 / h2;
    } else {
      t(i, i) = 2.5 / h2 + msq;
      t(i, i - 1) = -4.0 / 3.0 / h2;
      t(i, i + 1) = -4.0 / 3.0 / h2;
      if (i - 2 >= 0) t(i, i - 2) = 1.0 / 12.0 / h2;
      if (i + 2 < n_int) t(i, i + 2) = 1.0 / 12.0 / h2;
    }
  }
  return t;
}

std::vector<double> interior_nodes(const SpectralGrid& grid) {
  std::vector<double> t(grid.n - 2);
  for (int i = 0; i < grid.n - 2; ++i) t[i] = grid.t_min + grid.h() * (i + 1);
  return t;
}

}  // namespace

Pencil assemble_ode_eigenproblem(const RadialVortexProfile& p, int m, const SpectralGrid& grid) {
  if (m < 2) throw InvalidParams("assemble_ode_eigenproblem: m >= 2 required");
  grid.validate(p.m_inner(), p.m_outer());
  Pencil pen;
  pen.t = interior_nodes(grid);
  const int n = (int)pen.t.size();
  pen.b = second_diff_op(n, grid.h(), double(m) * m);
  pen.d = pen.b;
  for (int i = 0; i < n; ++i) {
    pen.d.row(i) *= p.r_of_t(pen.t[i]);
    pen.d(i, i) += p.a_of_t(pen.t[i]);
  }
  return pen;
}

PencilEig solve_pencil(const RadialVortexProfile& p, int m, const SpectralGrid& grid) {
  grid.validate(p.m_inner(), p.m_outer());
  const auto t = interior_nodes(grid);
  const int n = (int)t.size();
  const arma::mat tmat = second_diff_op(n, grid.h(), double(m) * m);

  // reduce D psi = mu T psi to the standard problem
  // [diag(R) + diag(A) T^{-1}] phi = mu phi with phi = T psi
  arma::mat tinv;
  if (!arma::inv(tinv, tmat)) throw NoConvergence("solve_pencil: T inversion failed");
  arma::mat mred = tinv;
  for (int i = 0; i < n; ++i) mred.row(i) *= p.a_of_t(t[i]);
  for (int i = 0; i < n; ++i) mred(i, i) += p.r_of_t(t[i]);

  arma::cx_vec mu;
  arma::cx_mat phi;
  if (!arma::eig_gen(mu, phi, mred)) throw NoConvergence("solve_pencil: eigensolver failed");

  PencilEig out;
  out.mu = mu;
  out.psi = arma::cx_mat(tinv, arma::mat(n, n, arma::fill::zeros)) * phi;
  return out;
}

namespace {

struct Candidate {
  cx mu;
  arma::cx_vec psi;
};

std::vector<Candidate> filter_candidates(const PencilEig& eig, const SpectrumOptions& opts) {
  std::vector<Candidate> out;
  for (arma::uword k = 0; k < eig.mu.n_elem; ++k) {
    if (eig.mu(k).imag() <= opts.imag_floor) continue;
    arma::cx_vec psi = eig.psi.col(k);
    const double pk = arma::abs(psi).max();
    if (pk <= 0) continue;
    const double edge = std::max(std::abs(psi(0)), std::abs(psi(psi.n_elem - 1)));
    if (edge > opts.boundary_tol * pk) continue;
    out.push_back({eig.mu(k), psi / pk});
  }
  return out;
}

double pencil_residual(const Pencil& pen, cx mu, const arma::cx_vec& psi) {
  const arma::cx_mat dc(pen.d, arma::mat(pen.d.n_rows, pen.d.n_cols, arma::fill::zeros));
  const arma::cx_mat bc(pen.b, arma::mat(pen.b.n_rows, pen.b.n_cols, arma::fill::zeros));
  const arma::cx_vec r = dc * psi - mu * (bc * psi);
  return arma::norm(r, 2) / (arma::norm(psi, 2) * arma::norm(pen.d, "inf"));
}

// complex tail coefficient and log-log slope of |g| over the last resolved
// decade; the coefficient fit removes the O(s^{-alpha}) subleading term
struct TailFit {
  cx coeff;
  double slope;
};
TailFit fit_tail(std::span<const double> t, std::span<const cx> g, double expected_power,
                 double alpha) {
  const int n = (int)t.size();
  double gmax = 0;
  for (auto& v : g) gmax = std::max(gmax, std::abs(v));
  int hi = n - 1;
  while (hi > 0 && std::abs(g[hi]) < 1e-14 * gmax) --hi;
  const double t_hi = t[hi];
  const double t_lo = t_hi - std::log(10.0);
  std::vector<double> xs, ys, sub;
  std::vector<cx> scaled;
  for (int i = 0; i < n; ++i) {
    if (t[i] < t_lo || t[i] > t_hi) continue;
    const double a = std::abs(g[i]);
    if (a <= 0) continue;
    xs.push_back(t[i]);
    ys.push_back(std::log(a));
    sub.push_back(std::exp(-alpha * t[i]));
    scaled.push_back(g[i] * std::exp(expected_power * t[i]));
  }
  if (xs.size() < 4) throw TailTruncation("fit_tail: too few resolved tail samples");
  TailFit f;
  f.slope = fit_line(xs, ys).slope;
  f.coeff = fit_intercept(sub, scaled);
  return f;
}

EigenMode make_mode(const RadialVortexProfile& p, int m, const SpectralGrid& grid,
                    const Pencil& pen, cx mu, const arma::cx_vec& psi_int) {
  EigenMode mode;
  mode.m = m;
  mode.l = 1;
  mode.mu = mu;
  mode.lambda = cx(0, -1) * double(m) * mu;
  mode.grid = grid;
  mode.residual_pencil = pencil_residual(pen, mu, psi_int);

  // pad to the full window (Dirichlet ends) and reconstruct g from (1.11):
  // g = E psi / (Omega - mu) = e^{-2t} A / (R - mu) psi
  const auto t = grid.nodes();
  mode.psi.assign(grid.n, cx(0));
  mode.g.assign(grid.n, cx(0));
  for (int i = 1; i + 1 < grid.n; ++i) mode.psi[i] = psi_int(i - 1);
  for (int i = 0; i < grid.n; ++i) {
    const cx den = p.r_of_t(t[i]) - mu;
    mode.g[i] = std::exp(-2.0 * t[i]) * p.a_of_t(t[i]) / den * mode.psi[i];
  }

  const double power = m + p.alpha() + 2.0;
  const TailFit tf = fit_tail(t, mode.g, power, p.alpha());
  mode.tail_slope = tf.slope;
  if (std::abs(tf.coeff) > 0) {
    for (auto& v : mode.psi) v /= tf.coeff;
    for (auto& v : mode.g) v /= tf.coeff;
  }
  mode.normalization = "tail";

  // moment int g tau^{1+m} d tau = int g e^{(2+m)t} dt plus the analytic tail
  // continuation of the normalized mode beyond the window
  std::vector<double> re(grid.n), im(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const cx v = mode.g[i] * std::exp((2.0 + m) * t[i]);
    re[i] = v.real();
    im[i] = v.imag();
  }
  const double s_max = std::exp(grid.t_max);
  cx tail_corr = std::pow(s_max, -p.alpha()) / p.alpha();  // int_{smax}^inf tau^{-1-alpha}
  mode.moment = cx(trapezoid(t, re), trapezoid(t, im)) + tail_corr;

  mode.residual_integral = eigen_residual_integral(mode, p, grid);
  return mode;
}

}  // namespace

double eigen_residual_integral(const EigenMode& mode, const RadialVortexProfile& p,
                               const SpectralGrid& grid) {
  if (mode.psi.empty()) throw InvalidParams("eigen_residual_integral: empty psi");
  double pmax = 0;
  for (auto& v : mode.psi) pmax = std::max(pmax, std::abs(v));
  if (pmax <= 0) throw InvalidParams("eigen_residual_integral: zero function rejected");
  const auto t = grid.nodes();
  std::vector<cx> w(grid.n);
  double den_min = 1e300;
  for (int i = 0; i < grid.n; ++i) {
    const cx den = p.r_of_t(t[i]) - mode.mu;
    den_min = std::min(den_min, std::abs(den));
    w[i] = p.a_of_t(t[i]) / den * mode.psi[i];
  }
  if (den_min < 1e-12) throw SingularDenominator("eigen_residual_integral: R - mu vanishes");
  const auto kw = greens_apply(double(mode.m), std::span<const cx>(w), grid);
  double num = 0, den = 0;
  for (int i = 0; i < grid.n; ++i) {
    num += std::norm(mode.psi[i] + kw[i]);
    den += std::norm(mode.psi[i]);
  }
  return std::sqrt(num / den);
}

std::vector<EigenMode> unstable_spectrum(const RadialVortexProfile& p, int m,
                                         const SpectralGrid& grid, SpectrumOptions opts) {
  if (m < 2) throw InvalidParams("unstable_spectrum: m >= 2 required");
  const PencilEig coarse = solve_pencil(p, m, grid);
  auto cands = filter_candidates(coarse, opts);
  if (cands.empty()) return {};

  if (!opts.refine) {
    const Pencil pen = assemble_ode_eigenproblem(p, m, grid);
    std::vector<EigenMode> out;
    for (auto& c : cands) out.push_back(make_mode(p, m, grid, pen, c.mu, c.psi));
    return out;
  }

  SpectralGrid fine = grid;
  fine.n = 2 * grid.n;
  const PencilEig refined = solve_pencil(p, m, fine);
  auto fine_cands = filter_candidates(refined, opts);

  const Pencil pen_fine = assemble_ode_eigenproblem(p, m, fine);
  std::vector<EigenMode> out;
  for (auto& c : cands) {
    double best = 1e300;
    const Candidate* match = nullptr;
    for (auto& f : fine_cands) {
      const double d = std::abs(f.mu - c.mu);
      if (d < best) {
        best = d;
        match = &f;
      }
    }
    if (!match) continue;
    const double drift = best / std::abs(c.mu);
    if (drift > opts.refine_tol) continue;
    EigenMode mode = make_mode(p, m, fine, pen_fine, match->mu, match->psi);
    mode.refine_drift = drift;
    out.push_back(mode);
  }
  if (out.empty())
    throw NoConvergence("unstable_spectrum: all candidates failed refinement at m=" +
                        std::to_string(m));
  // drop conjugate-duplicate or defective copies of the same eigenvalue
  std::sort(out.begin(), out.end(),
            [](const EigenMode& a, const EigenMode& b) { return a.mu.imag() > b.mu.imag(); });
  std::vector<EigenMode> dedup;
  for (auto& mo : out) {
    bool close = false;
    for (auto& kept : dedup)
      if (std::abs(kept.mu - mo.mu) < 1e-6 * std::abs(kept.mu)) close = true;
    if (!close) dedup.push_back(mo);
  }
  return dedup;
}

}  // namespace vlab
