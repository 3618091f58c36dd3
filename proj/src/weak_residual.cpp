#include "vortexlab/weak_residual.hpp"

#include <cmath>
#include <random>

#include "vortexlab/bump.hpp"

namespace vlab {

double TestFunction::space(double x, double y) const {
  return std::exp(-(sq(x - cx_) + sq(y - cy_)) / (2.0 * r_scale * r_scale));
}

void TestFunction::space_grad(double x, double y, double& gx, double& gy) const {
  const double v = space(x, y);
  gx = -(x - cx_) / (r_scale * r_scale) * v;
  gy = -(y - cy_) / (r_scale * r_scale) * v;
}

double TestFunction::window(double t) const {
  if (t <= t_on) return 1.0;
  if (t >= t_end) return 0.0;
  return chi_tilde(1.0 + (t - t_on) / (t_end - t_on));
}

double TestFunction::window_dt(double t) const {
  if (t <= t_on || t >= t_end) return 0.0;
  return chi_tilde_d(1.0 + (t - t_on) / (t_end - t_on)) / (t_end - t_on);
}

std::vector<TestFunction> default_test_functions(int count, double spread, double scale,
                                                 double t_on, double t_end, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pos(-spread, spread);
  std::uniform_real_distribution<double> sc(0.7, 1.5);
  std::vector<TestFunction> out;
  for (int k = 0; k < count; ++k) {
    TestFunction tf;
    tf.cx_ = pos(rng);
    tf.cy_ = pos(rng);
    tf.r_scale = scale * sc(rng);
    tf.t_on = t_on;
    tf.t_end = t_end;
    out.push_back(tf);
  }
  return out;
}

namespace {

struct Accum {
  double init = 0, dt_term = 0, adv = 0, force = 0;
  double residual() const {
    const double mx = std::max({std::abs(init), std::abs(dt_term), std::abs(adv),
                                std::abs(force), 1e-300});
    return std::abs(init + dt_term + adv + force) / mx;
  }
};

}  // namespace

double weak_residual_polar(const WeakFields& f, std::span<const TestFunction> tests,
                           std::span<const double> times, const PolarGrid& grid) {
  const auto r = grid.radii();
  const int nt = (int)times.size();
  double worst = 0;
  for (const auto& tf : tests) {
    Accum acc;
    // spatial integrals at each quadrature time
    std::vector<double> s_dt(nt, 0.0), s_adv(nt, 0.0), s_force(nt, 0.0);
    for (int q = 0; q < nt; ++q) {
      const double t = times[q];
      double i_dt = 0, i_adv = 0, i_force = 0;
      for (int k = 0; k < grid.n_r; ++k) {
        const double w = grid.rweight(r, k) * grid.dtheta();
        for (int a = 0; a < grid.n_theta; ++a) {
          const double th = a * grid.dtheta();
          const double x = r[k] * std::cos(th), y = r[k] * std::sin(th);
          const double om = f.omega(x, y, t);
          i_dt += om * tf.dt(x, y, t) * w;
          double gx, gy;
          tf.space_grad(x, y, gx, gy);
          const auto v = f.velocity(x, y, t);
          i_adv += om * (v[0] * gx + v[1] * gy) * tf.window(t) * w;
          i_force += f.forcing(x, y, t) * tf.value(x, y, t) * w;
        }
      }
      s_dt[q] = i_dt;
      s_adv[q] = i_adv;
      s_force[q] = i_force;
    }
    for (int q = 0; q + 1 < nt; ++q) {
      const double dt = times[q + 1] - times[q];
      acc.dt_term += 0.5 * dt * (s_dt[q] + s_dt[q + 1]);
      acc.adv += 0.5 * dt * (s_adv[q] + s_adv[q + 1]);
      acc.force += 0.5 * dt * (s_force[q] + s_force[q + 1]);
    }
    for (int k = 0; k < grid.n_r; ++k) {
      const double w = grid.rweight(r, k) * grid.dtheta();
      for (int a = 0; a < grid.n_theta; ++a) {
        const double th = a * grid.dtheta();
        const double x = r[k] * std::cos(th), y = r[k] * std::sin(th);
        acc.init += f.omega0(x, y) * tf.value(x, y, 0.0) * w;
      }
    }
    worst = std::max(worst, acc.residual());
  }
  return worst;
}

double weak_residual_grid(const WeakGridInput& in, std::span<const TestFunction> tests) {
  const int nt = (int)in.times.size();
  if ((int)in.omega.size() != nt || (int)in.vx.size() != nt || (int)in.vy.size() != nt ||
      (int)in.z.size() != nt)
    throw MismatchedSampling("weak_residual_grid: snapshot counts differ from times");
  const Field2D& probe = in.omega0;
  for (const auto& tf : tests)
    if (tf.r_scale < 4.0 * probe.h())
      throw UnresolvedQuadrature("weak_residual_grid: test-function scale below 4h");

  const double area = probe.cell_area();
  double worst = 0;
  for (const auto& tf : tests) {
    Accum acc;
    std::vector<double> s_dt(nt, 0.0), s_adv(nt, 0.0), s_force(nt, 0.0);
    for (int q = 0; q < nt; ++q) {
      const double t = in.times[q];
      const Field2D& om = in.omega[q];
      double i_dt = 0, i_adv = 0, i_force = 0;
      for (int j = 0; j < probe.n; ++j)
        for (int i = 0; i < probe.n; ++i) {
          const double x = probe.x(i), y = probe.x(j);
          i_dt += om.at(i, j) * tf.dt(x, y, t);
          double gx, gy;
          tf.space_grad(x, y, gx, gy);
          i_adv += om.at(i, j) * (in.vx[q].at(i, j) * gx + in.vy[q].at(i, j) * gy) * tf.window(t);
          i_force += in.z[q].at(i, j) * tf.value(x, y, t);
        }
      s_dt[q] = i_dt * area;
      s_adv[q] = i_adv * area;
      s_force[q] = i_force * area;
    }
    for (int q = 0; q + 1 < nt; ++q) {
      const double dt = in.times[q + 1] - in.times[q];
      acc.dt_term += 0.5 * dt * (s_dt[q] + s_dt[q + 1]);
      acc.adv += 0.5 * dt * (s_adv[q] + s_adv[q + 1]);
      acc.force += 0.5 * dt * (s_force[q] + s_force[q + 1]);
    }
    for (int j = 0; j < probe.n; ++j)
      for (int i = 0; i < probe.n; ++i)
        acc.init += in.omega0.at(i, j) * tf.value(probe.x(i), probe.x(j), 0.0);
    acc.init *= area;
    worst = std::max(worst, acc.residual());
  }
  return worst;
}

}  // namespace vlab
