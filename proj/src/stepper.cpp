#include "vortexlab/stepper.hpp"

#include <algorithm>
#include <cmath>

#include "vortexlab/bump.hpp"
#include "vortexlab/norms.hpp"

namespace vlab {

double Trajectory::column(size_t row, const std::string& name) const {
  for (size_t c = 0; c < columns.size(); ++c)
    if (columns[c] == name) return rows[row][c];
  throw InvalidParams("trajectory: no column " + name);
}

std::vector<double> Trajectory::series(const std::string& name) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (size_t r = 0; r < rows.size(); ++r) out.push_back(column(r, name));
  return out;
}

Dynamics::Dynamics(const RadialVortexProfile& p, const ScalingFamily& f,
                   const EvolutionConfig& cfg, int n, double L)
    : profile_(p), family_(f), cfg_(cfg), n_(n), L_(L) {
  spec_ = std::make_unique<Spec2D>(n, L);
  radius_ = make_field(n, L, "radius");
  xg_ = make_field(n, L, "x");
  yg_ = make_field(n, L, "y");
  vx_full_ = make_field(n, L, "velocity_x");
  vy_full_ = make_field(n, L, "velocity_y");
  dcurl_full_ = make_field(n, L, "dcurl");
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double x = radius_.x(i), y = radius_.x(j);
      const double s = std::hypot(x, y);
      radius_.at(i, j) = s;
      xg_.at(i, j) = x;
      yg_.at(i, j) = y;
      const double om = p.omega(s);
      vx_full_.at(i, j) = -om * y;
      vy_full_.at(i, j) = om * x;
      dcurl_full_.at(i, j) = p.g_prime(s);
    }
}

void Dynamics::background(double tau, Field2D& bx, Field2D& by, Field2D& dcurl) const {
  if (cfg_.variant == EvolutionVariant::full_v || cfg_.variant == EvolutionVariant::linearized) {
    bx = vx_full_;
    by = vy_full_;
    dcurl = dcurl_full_;
    return;
  }
  // cutoff variant: V1 = chi(eps e^{gamma tau} |y|) V, curl V1 differentiated
  // analytically in radius
  const double b = family_.epsilon * std::exp(family_.gamma * tau);
  bx = vx_full_;
  by = vy_full_;
  dcurl = dcurl_full_;
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) {
      const double s = radius_.at(i, j);
      const double chi = cutoff_chi(family_.c4, b * s);
      const double chid = cutoff_chi_d(family_.c4, b * s);
      bx.at(i, j) *= chi;
      by.at(i, j) *= chi;
      // d/ds [chi(bs) G + b s chi'(bs) Om]
      const double chidd = cutoff_chi_dd(family_.c4, b * s);
      dcurl.at(i, j) = b * chid * profile_.g(s) + chi * profile_.g_prime(s) +
                       b * chid * profile_.omega(s) + b * b * s * chidd * profile_.omega(s) +
                       b * s * chid * profile_.omega_prime(s);
    }
}

Field2D Dynamics::rhs(const Field2D& sigma, double tau) {
  // All transport terms are evaluated in advective form: spectral derivatives
  // act on sigma only, coordinate and background factors multiply pointwise.
  // This keeps the box-wrap discontinuities of |y|, V and G out of the FFTs.
  Spec2D::Spectral sh = spec_->forward(sigma);
  if (cfg_.dealias) spec_->apply_dealias(sh);
  Spec2D::Spectral tmp;
  spec_->deriv_x(sh, tmp);
  Field2D gx = spec_->inverse(tmp, sigma);
  spec_->deriv_y(sh, tmp);
  Field2D gy = spec_->inverse(tmp, sigma);

  // w = K * sigma from the same truncated spectrum
  Spec2D::Spectral uxs(sh.size()), uys(sh.size());
  const int n = n_, nk = spec_->nk();
  for (int j = 0; j < n; ++j) {
    const double kyv = spec_->ky(j);
    for (int i = 0; i < nk; ++i) {
      const double kxv = spec_->kx(i);
      const double k2 = kxv * kxv + kyv * kyv;
      const size_t idx = (size_t)j * nk + i;
      if (k2 == 0.0) {
        uxs[idx] = uys[idx] = 0.0;
        continue;
      }
      const cx ph = -sh[idx] / k2;
      uxs[idx] = cx(0, -(j == n / 2 ? 0.0 : kyv)) * ph;
      uys[idx] = cx(0, (i == n / 2 ? 0.0 : kxv)) * ph;
    }
  }
  Field2D wx = spec_->inverse(uxs, sigma);
  Field2D wy = spec_->inverse(uys, sigma);

  Field2D out = make_field(n_, L_, "rhs");

  if (cfg_.variant == EvolutionVariant::physical_euler) {
    ForcingSpec zs{&profile_, ForcingVariant::rescaled};
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < n_; ++i)
        out.at(i, j) = -(wx.at(i, j) * gx.at(i, j) + wy.at(i, j) * gy.at(i, j)) +
                       forcing(zs, family_, xg_.at(i, j), yg_.at(i, j), tau);
    return out;
  }

  Field2D bx, by, dcurl;
  background(tau, bx, by, dcurl);
  const bool nonlinear = cfg_.variant != EvolutionVariant::linearized;
  const double g = family_.gamma, al = family_.alpha;

  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) {
      const double ux = bx.at(i, j) + (nonlinear ? wx.at(i, j) : 0.0);
      const double uy = by.at(i, j) + (nonlinear ? wy.at(i, j) : 0.0);
      const double s = radius_.at(i, j);
      // (w, d) curl Vbg = (w . rhat) d_s curl Vbg
      const double wr = s > 0 ? (wx.at(i, j) * xg_.at(i, j) + wy.at(i, j) * yg_.at(i, j)) / s : 0.0;
      out.at(i, j) = -(ux * gx.at(i, j) + uy * gy.at(i, j)) - wr * dcurl.at(i, j) +
                     g * (al * sigma.at(i, j) + xg_.at(i, j) * gx.at(i, j) +
                          yg_.at(i, j) * gy.at(i, j));
    }
  return out;
}

double Dynamics::max_speed(const Field2D& sigma, double tau) {
  Field2D wx, wy;
  spec_->biot_savart(sigma, wx, wy);
  double vmax = 0;
  if (cfg_.variant == EvolutionVariant::physical_euler) {
    for (size_t k = 0; k < sigma.v.size(); ++k)
      vmax = std::max(vmax, std::hypot(wx.v[k], wy.v[k]));
    return vmax;
  }
  Field2D bx, by, curl;
  background(tau, bx, by, curl);
  const double g = family_.gamma;
  for (size_t k = 0; k < sigma.v.size(); ++k) {
    const double ux = bx.v[k] + wx.v[k] - g * xg_.v[k];
    const double uy = by.v[k] + wy.v[k] - g * yg_.v[k];
    vmax = std::max(vmax, std::hypot(ux, uy));
  }
  return vmax;
}

void Dynamics::step(Field2D& sigma) {
  const double dt = cfg_.dtau, tau = sigma.time;
  const double vmax = max_speed(sigma, tau);
  if (dt * vmax > cfg_.cfl_safety * sigma.h())
    throw CflViolation("step: dtau " + std::to_string(dt) + " exceeds CFL limit " +
                       std::to_string(cfg_.cfl_safety * sigma.h() / vmax));

  const Field2D k1 = rhs(sigma, tau);
  Field2D tmp = sigma;
  for (size_t k = 0; k < tmp.v.size(); ++k) tmp.v[k] = sigma.v[k] + 0.5 * dt * k1.v[k];
  const Field2D k2 = rhs(tmp, tau + 0.5 * dt);
  for (size_t k = 0; k < tmp.v.size(); ++k) tmp.v[k] = sigma.v[k] + 0.5 * dt * k2.v[k];
  const Field2D k3 = rhs(tmp, tau + 0.5 * dt);
  for (size_t k = 0; k < tmp.v.size(); ++k) tmp.v[k] = sigma.v[k] + dt * k3.v[k];
  const Field2D k4 = rhs(tmp, tau + dt);

  for (size_t k = 0; k < sigma.v.size(); ++k)
    sigma.v[k] += dt / 6.0 * (k1.v[k] + 2.0 * k2.v[k] + 2.0 * k3.v[k] + k4.v[k]);
  sigma.time = tau + dt;
  // state filtering: sigma is smooth and decaying, so the truncation is
  // Gibbs-free; it removes the aliased content the pointwise products create
  if (cfg_.dealias) spec_->dealias_field(sigma);
  if (cfg_.enforce_symmetry) symmetrize(sigma, sigma.sym_m);
  for (double x : sigma.v)
    if (!std::isfinite(x)) throw NonFinite("step: state became non-finite");
}

Trajectory Dynamics::evolve(Field2D sigma, const EvolveRequest& req) {
  Trajectory traj;
  traj.columns = {"tau", "l2", "integral", "sym_defect", "max_speed", "lorentz21_grad"};
  for (double q : cfg_.q_list) {
    traj.columns.push_back("lq_" + std::to_string(q));
    traj.columns.push_back("wgrad_" + std::to_string(q));
  }
  if (req.projection_mode) {
    traj.columns.push_back("proj_re");
    traj.columns.push_back("proj_im");
  }

  auto record = [&](const Field2D& s) {
    Field2D gx, gy;
    spec_->gradient(s, gx, gy);
    std::vector<double> row;
    row.push_back(s.time);
    row.push_back(field_l2(s));
    row.push_back(field_mean(s) * 4.0 * L_ * L_);
    row.push_back(s.sym_m > 1 ? symmetry_defect(s, s.sym_m) : 0.0);
    row.push_back(max_speed(s, s.time));
    row.push_back(lorentz_norm_integral_pair(gx, gy, 2.0));
    for (double q : cfg_.q_list) {
      row.push_back(lq_norm(s, q));
      Field2D wxg = gx, wyg = gy;
      for (size_t k = 0; k < wxg.v.size(); ++k) {
        wxg.v[k] *= radius_.v[k];
        wyg.v[k] *= radius_.v[k];
      }
      row.push_back(lq_norm_pair(wxg, wyg, q));
    }
    if (req.projection_mode) {
      cx p = 0;
      const int harm = req.projection_harmonic;
      for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) {
          const double r = radius_.at(i, j);
          const double w = std::abs(radial_mode_at(*req.projection_mode, profile_.alpha(), r));
          const double th = std::atan2(yg_.at(i, j), xg_.at(i, j));
          p += s.at(i, j) * w * std::exp(cx(0, -harm * th));
        }
      p *= s.cell_area();
      row.push_back(p.real());
      row.push_back(p.imag());
    }
    traj.rows.push_back(std::move(row));
  };

  record(sigma);
  size_t next_snap = 0;
  double next_record = req.record_dtau;
  std::vector<double> snaps = req.snapshot_taus;
  std::sort(snaps.begin(), snaps.end());
  while (next_snap < snaps.size() && snaps[next_snap] <= 1e-12) {
    traj.snapshots.push_back(sigma);
    traj.snapshot_times.push_back(sigma.time);
    ++next_snap;
  }
  const double eps_t = 0.5 * cfg_.dtau;
  while (sigma.time < req.tau_end - eps_t) {
    step(sigma);
    if (sigma.time >= next_record - eps_t) {
      record(sigma);
      next_record += req.record_dtau;
    }
    while (next_snap < snaps.size() && sigma.time >= snaps[next_snap] - eps_t) {
      traj.snapshots.push_back(sigma);
      traj.snapshot_times.push_back(sigma.time);
      ++next_snap;
    }
  }
  if (traj.rows.empty() || traj.rows.back()[0] < sigma.time) record(sigma);
  return traj;
}

}  // namespace vlab
