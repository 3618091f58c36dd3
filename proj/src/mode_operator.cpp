#include "vortexlab/mode_operator.hpp"

#include <algorithm>
#include <cmath>

namespace vlab {

namespace {

// trapezoid weights in log s for the measure tau dtau = s^2 dlog
std::vector<double> measure_weights(const RadialGrid& grid) {
  const auto s = grid.nodes();
  std::vector<double> w(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    double f = (j == 0 || j == grid.n - 1) ? 0.5 : 1.0;
    w[j] = f * s[j] * s[j] * grid.dlog();
  }
  return w;
}

// Tail normalization g ~ s^{-|ml|-alpha-2} with the O(s^{-alpha}) bias in the
// coefficient removed. The fit window is the last decade whose local log-log
// slope tracks the expected power; the eigenvector beyond that window is
// replaced by the fitted power law (for gamma > 0 the one-sided closure lets
// an unphysical growing solution leak into the far tail).
void normalize_tail(const RadialVortexProfile& p, const ModeOperatorParams& par,
                    const RadialGrid& grid, RadialMode& mode) {
  const auto s = grid.nodes();
  const double power = std::abs(double(par.m) * par.l) + p.alpha() + 2.0;
  double gmax = 0;
  int peak = 0;
  for (int i = 0; i < grid.n; ++i)
    if (std::abs(mode.g[i]) > gmax) {
      gmax = std::abs(mode.g[i]);
      peak = i;
    }

  // last index (scanning outward from the peak) where the local slope of
  // log|g| stays near -power
  const int win = 8;
  int clean_hi = -1;
  for (int i = peak + win; i + win < grid.n; ++i) {
    if (std::abs(mode.g[i - win]) <= 0 || std::abs(mode.g[i + win]) <= 0) break;
    const double slope = (std::log(std::abs(mode.g[i + win])) -
                          std::log(std::abs(mode.g[i - win]))) /
                         (2.0 * win * grid.dlog());
    if (std::abs(slope + power) < 0.3 * power)
      clean_hi = i;
    else if (clean_hi >= 0 && i > clean_hi + 2 * win)
      break;  // left the clean region for good
  }
  if (clean_hi < 0) throw TailTruncation("normalize_tail: no clean power-law tail found");

  const double s_hi = s[clean_hi], s_lo = s_hi / 10.0;
  std::vector<double> xs, ys, sub;
  std::vector<cx> scaled;
  for (int i = 0; i <= clean_hi; ++i) {
    if (s[i] < s_lo || s[i] > s_hi) continue;
    if (std::abs(mode.g[i]) <= 0) continue;
    xs.push_back(std::log(s[i]));
    ys.push_back(std::log(std::abs(mode.g[i])));
    sub.push_back(std::pow(s[i], -p.alpha()));
    scaled.push_back(mode.g[i] * std::pow(s[i], power));
  }
  if (xs.size() < 4) throw TailTruncation("normalize_tail: unresolved tail");
  mode.tail_slope = fit_line(xs, ys).slope;
  mode.tail_coeff = fit_intercept(sub, scaled);
  if (std::abs(mode.tail_coeff) > 0)
    for (auto& v : mode.g) v /= mode.tail_coeff;
  for (int i = clean_hi + 1; i < grid.n; ++i) mode.g[i] = std::pow(s[i], -power);
}

}  // namespace

arma::cx_mat feedback_operator(const RadialVortexProfile& p, int m, int l,
                               const RadialGrid& grid) {
  const int n = grid.n;
  arma::cx_mat q(n, n, arma::fill::zeros);
  if (l == 0) return q;  // w_0 is azimuthal and curl V radial, so (w_0, d) curl V = 0
  const int aml = std::abs(m * l);
  const double sgn = l > 0 ? 1.0 : -1.0;
  const auto s = grid.nodes();
  const auto w = measure_weights(grid);
  std::vector<double> ls(n);
  for (int i = 0; i < n; ++i) ls[i] = std::log(s[i]);
  for (int i = 0; i < n; ++i) {
    const double pref = 0.5 * sgn * s[i] * p.g_prime(s[i]);
    for (int j = 0; j < n; ++j) {
      // tau >= s: s^{|ml|-2} tau^{-|ml|}; tau <= s: s^{-|ml|-2} tau^{|ml|}
      const double ex = (j >= i) ? (aml - 2.0) * ls[i] - double(aml) * ls[j]
                                 : -(aml + 2.0) * ls[i] + double(aml) * ls[j];
      q(i, j) = cx(0.0, pref * std::exp(ex) * w[j]);
    }
  }
  return q;
}

arma::cx_mat assemble_mode_operator(const RadialVortexProfile& p, const ModeOperatorParams& par,
                                    const RadialGrid& grid) {
  if (par.m < 2) throw InvalidParams("assemble_mode_operator: m >= 2 required");
  const int n = grid.n;
  const auto s = grid.nodes();
  const double ml = double(par.m) * par.l;

  arma::cx_mat L = -par.omega_scale * feedback_operator(p, par.m, par.l, grid);
  for (int i = 0; i < n; ++i)
    L(i, i) += cx(par.gamma * p.alpha() + par.kappa,
                  -ml * par.omega_scale * p.omega(s[i]));

  // s g'(s) = dg/d(log s), centered differences with one-sided closure
  const double c = par.gamma + par.kappa;
  if (c != 0.0) {
    const double d = grid.dlog();
    L(0, 0) += -1.5 * c / d;
    L(0, 1) += 2.0 * c / d;
    L(0, 2) += -0.5 * c / d;
    for (int i = 1; i + 1 < n; ++i) {
      L(i, i - 1) += -0.5 * c / d;
      L(i, i + 1) += 0.5 * c / d;
    }
    L(n - 1, n - 1) += 1.5 * c / d;
    L(n - 1, n - 2) += -2.0 * c / d;
    L(n - 1, n - 3) += 0.5 * c / d;
  }
  return L;
}

arma::cx_vec mode_operator_eigenvalues(const RadialVortexProfile& p,
                                       const ModeOperatorParams& par, const RadialGrid& grid) {
  const arma::cx_mat L = assemble_mode_operator(p, par, grid);
  arma::cx_vec ev;
  if (!arma::eig_gen(ev, L)) throw NoConvergence("mode_operator_eigenvalues: eigensolver failed");
  return ev;
}

RadialMode leading_radial_mode(const RadialVortexProfile& p, const ModeOperatorParams& par,
                               const RadialGrid& grid) {
  const arma::cx_mat L = assemble_mode_operator(p, par, grid);
  arma::cx_vec ev;
  arma::cx_mat vec;
  if (!arma::eig_gen(ev, vec, L)) throw NoConvergence("leading_radial_mode: eigensolver failed");
  arma::uword best = 0;
  for (arma::uword k = 1; k < ev.n_elem; ++k)
    if (ev(k).real() > ev(best).real()) best = k;

  RadialMode mode;
  mode.m = par.m;
  mode.l = par.l;
  mode.lambda = ev(best);
  mode.grid = grid;
  mode.g.assign(grid.n, cx(0));
  for (int i = 0; i < grid.n; ++i) mode.g[i] = vec(i, best);
  normalize_tail(p, par, grid, mode);
  return mode;
}

RadialMode continued_leading_mode(const RadialVortexProfile& p, const ModeOperatorParams& target,
                                  const RadialGrid& grid, int steps) {
  ModeOperatorParams par = target;
  par.gamma = 0.0;
  par.kappa = 0.0;
  const RadialMode base = leading_radial_mode(p, par, grid);
  cx track = base.lambda;
  for (int k = 1; k <= steps; ++k) {
    par.gamma = target.gamma * k / steps;
    par.kappa = target.kappa * k / steps;
    if (k < steps) {
      const arma::cx_vec ev = mode_operator_eigenvalues(p, par, grid);
      arma::uword best = 0;
      for (arma::uword j = 1; j < ev.n_elem; ++j)
        if (std::abs(ev(j) - track) < std::abs(ev(best) - track)) best = j;
      track = ev(best);
      continue;
    }
    // final step: full eigenpair, matched to the tracked value
    const arma::cx_mat L = assemble_mode_operator(p, par, grid);
    arma::cx_vec ev;
    arma::cx_mat vec;
    if (!arma::eig_gen(ev, vec, L))
      throw NoConvergence("continued_leading_mode: eigensolver failed");
    arma::uword best = 0;
    for (arma::uword j = 1; j < ev.n_elem; ++j)
      if (std::abs(ev(j) - track) < std::abs(ev(best) - track)) best = j;
    RadialMode mode;
    mode.m = par.m;
    mode.l = par.l;
    mode.lambda = ev(best);
    mode.grid = grid;
    mode.g.assign(grid.n, cx(0));
    for (int i = 0; i < grid.n; ++i) mode.g[i] = vec(i, best);
    normalize_tail(p, par, grid, mode);
    return mode;
  }
  return base;
}

cx radial_mode_at(const RadialMode& mode, double alpha, double s) {
  const auto& grid = mode.grid;
  const int n = grid.n;
  const double l0 = std::log(grid.s_min), d = grid.dlog();
  if (s <= 0.0) return cx(0);
  const double power = std::abs(double(mode.m) * mode.l) + alpha + 2.0;
  if (s >= grid.s_max) return std::pow(s, -power);  // normalized tail
  if (s <= grid.s_min) {
    // g ~ s^{|ml|} near the origin
    const double aml = std::abs(double(mode.m) * mode.l);
    return mode.g[0] * std::pow(s / grid.s_min, aml);
  }
  const double x = (std::log(s) - l0) / d;
  int i = std::clamp(int(std::floor(x)), 1, n - 3);
  const double u = x - i;
  // Catmull-Rom through the four surrounding nodes
  const cx pm = mode.g[i - 1], p0 = mode.g[i], p1 = mode.g[i + 1], p2 = mode.g[i + 2];
  return p0 + 0.5 * u * (p1 - pm + u * (2.0 * pm - 5.0 * p0 + 4.0 * p1 - p2 +
                                        u * (3.0 * (p0 - p1) + p2 - pm)));
}

std::vector<cx> kappa_continuation(const RadialVortexProfile& p, int m, int l,
                                   std::span<const double> kappa_list, const RadialGrid& grid,
                                   double d) {
  ModeOperatorParams par;
  par.m = m;
  par.l = l;
  par.kappa = 0.0;
  const RadialMode base = leading_radial_mode(p, par, grid);
  const cx lambda0 = base.lambda;
  if (d <= 0.0) d = lambda0.real() / 100.0;

  std::vector<cx> traj;
  cx prev = lambda0;
  for (double kappa : kappa_list) {
    if (kappa < 0.0) throw InvalidParams("kappa_continuation: kappa must be nonnegative");
    par.kappa = kappa;
    const arma::cx_vec ev = mode_operator_eigenvalues(p, par, grid);
    double best = 1e300, second = 1e300;
    cx pick;
    for (arma::uword k = 0; k < ev.n_elem; ++k) {
      if (ev(k).real() <= d) continue;
      const double dist = std::abs(ev(k) - prev);
      if (dist < best) {
        second = best;
        best = dist;
        pick = ev(k);
      } else if (dist < second) {
        second = dist;
      }
    }
    if (best == 1e300) throw TrackingLost("kappa_continuation: no eigenvalue with Re > d");
    if (second < 1e300 && best > second)
      throw TrackingLost("kappa_continuation: matching distance exceeds spectral spacing");
    traj.push_back(pick);
    prev = pick;
  }
  return traj;
}

cx moment_functional(std::span<const cx> g, const RadialGrid& grid, int m, double alpha,
                     MomentVariant variant, double kappa0) {
  if ((int)g.size() != grid.n) throw InvalidParams("moment_functional: size mismatch");
  const auto s = grid.nodes();
  const int am = std::abs(m);

  // quadrature of int g tau^{1+|m|} dtau = int g s^{2+|m|} dlog
  cx integral = 0;
  for (int j = 0; j < grid.n; ++j) {
    const double f = (j == 0 || j == grid.n - 1) ? 0.5 : 1.0;
    integral += g[j] * std::pow(s[j], 2.0 + am) * f * grid.dlog();
  }

  // tail handling: a normalized mode continues as s^{-|m|-alpha-2}; a
  // compactly supported synthetic g gets no correction
  double gmax = 0;
  for (auto& v : g) gmax = std::max(gmax, std::abs(v));
  const double power = am + alpha + 2.0;
  int hi = grid.n - 1;
  while (hi > 0 && std::abs(g[hi]) < 1e-13 * gmax) --hi;
  if (hi >= grid.n - 2) {
    // live tail: check the normalization coefficient
    std::vector<double> sub;
    std::vector<cx> scaled;
    for (int i = 0; i < grid.n; ++i) {
      if (s[i] < s[hi] / 10.0 || s[i] > s[hi]) continue;
      sub.push_back(std::pow(s[i], -alpha));
      scaled.push_back(g[i] * std::pow(s[i], power));
    }
    const cx c = fit_intercept(sub, scaled);
    if (std::abs(c - 1.0) > 0.10)
      throw NotNormalized("moment_functional: tail coefficient deviates from 1 by more than 10%");
    integral += c * std::pow(grid.s_max, -alpha) / alpha;
  }

  if (variant == MomentVariant::plain) return -alpha / (2.0 * am) * integral;
  return cx(0.0, alpha / (2.0 * kappa0)) * integral - cx(m + 2.0, 0.0);
}

double hs_norm_A_l(const RadialVortexProfile& p, int m, int l, int n_quad) {
  if (l == 0) return 0.0;
  const int aml = std::abs(m * l);
  if (aml < 2) throw InvalidParams("hs_norm_A_l: |ml| >= 2 required");
  // closed-form tau-integrals leave (1/4)[1/(2|ml|-2) + 1/(2|ml|+2)] int s G'^2 ds
  const double c = 0.25 * (1.0 / (2.0 * aml - 2.0) + 1.0 / (2.0 * aml + 2.0));

  // int_0^inf s G'(s)^2 ds: exact core and tail, log-grid trapezoid between
  const double core = 16.0 * sq(p.c0()) * std::pow(p.m_inner(), 4);
  const double tail = 0.5 * p.alpha() * std::pow(p.m_outer(), -2.0 * p.alpha());
  const auto t = linspace(std::log(p.m_inner()), std::log(p.m_outer()), n_quad);
  std::vector<double> f(n_quad);
  for (int i = 0; i < n_quad; ++i) {
    const double s = std::exp(t[i]);
    f[i] = s * s * sq(p.g_prime(s));
  }
  const double blend = trapezoid(t, f);
  return std::sqrt(c * (core + blend + tail));
}

}  // namespace vlab
