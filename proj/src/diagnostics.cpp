#include "vortexlab/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "vortexlab/norms.hpp"

namespace vlab {

GrowthFit growth_rate_fit(std::span<const double> tau, std::span<const double> norm,
                          double window_lo, double window_hi) {
  std::vector<double> xs, ys;
  for (size_t i = 0; i < tau.size(); ++i) {
    if (tau[i] < window_lo || tau[i] > window_hi) continue;
    if (!(norm[i] > 0)) throw DegenerateFit("growth_rate_fit: nonpositive norm sample");
    xs.push_back(tau[i]);
    ys.push_back(std::log(norm[i]));
  }
  if (xs.size() < 10) throw DegenerateFit("growth_rate_fit: fewer than 10 samples in window");
  const LineFit f = fit_line(xs, ys);
  return {f.slope, f.intercept, f.r2};
}

GapSeries linear_gap(const Trajectory& nonlinear, const Trajectory& linear, double q) {
  if (nonlinear.snapshot_times.size() != linear.snapshot_times.size())
    throw MismatchedSampling("linear_gap: trajectories have different snapshot counts");
  GapSeries out;
  for (size_t k = 0; k < nonlinear.snapshot_times.size(); ++k) {
    if (std::abs(nonlinear.snapshot_times[k] - linear.snapshot_times[k]) > 1e-9)
      throw MismatchedSampling("linear_gap: snapshot times differ");
    const Field2D& a = nonlinear.snapshots[k];
    const Field2D& b = linear.snapshots[k];
    Field2D diff = a;
    for (size_t i = 0; i < diff.v.size(); ++i) diff.v[i] -= b.v[i];
    const double gap = lq_norm(diff, q);
    const double ref = lq_norm(b, q);
    out.tau.push_back(nonlinear.snapshot_times[k]);
    out.gap.push_back(gap);
    out.ratio.push_back(ref > 0 ? gap / ref : 0.0);
  }
  return out;
}

HolderEstimate holder_diagnostic(const std::vector<Field2D>& vx, const std::vector<Field2D>& vy,
                                 std::span<const double> times) {
  if (vx.size() < 2 || vx.size() != vy.size() || vx.size() != times.size())
    throw InvalidParams("holder_diagnostic: need matched series with >= 2 samples");
  const int n = vx[0].n;

  // spatial: largest |dv| over grid pairs at dyadic separations, fit log-log;
  // pairs below 2h are excluded by construction (smallest separation is 2h)
  std::vector<double> lx, ly;
  for (int p = 1; (2 << p) <= n / 4; ++p) {
    const int d = 2 << (p - 1);  // 2, 4, 8, ... cells
    double dmax = 0;
    for (const auto* comp : {&vx, &vy}) {
      for (size_t f = 0; f < comp->size(); ++f) {
        const Field2D& v = (*comp)[f];
        for (int j = 0; j < n; j += 3)
          for (int i = 0; i < n; i += 3) {
            dmax = std::max(dmax, std::abs(v.at((i + d) % n, j) - v.at(i, j)));
            dmax = std::max(dmax, std::abs(v.at(i, (j + d) % n) - v.at(i, j)));
          }
      }
    }
    if (dmax > 0) {
      lx.push_back(std::log(d * vx[0].h()));
      ly.push_back(std::log(dmax));
    }
  }
  HolderEstimate est;
  est.space_exponent = lx.size() >= 2 ? std::min(1.0, fit_line(lx, ly).slope) : 1.0;

  // temporal: sup_x |v(t2) - v(t1)| against |t2 - t1| at dyadic index strides
  std::vector<double> tx, ty;
  for (size_t stride = 1; stride < vx.size(); stride *= 2) {
    double dmax = 0, dt = 0;
    size_t cnt = 0;
    for (size_t f = 0; f + stride < vx.size(); ++f) {
      for (size_t k = 0; k < vx[f].v.size(); ++k) {
        dmax = std::max(dmax, std::abs(vx[f + stride].v[k] - vx[f].v[k]));
        dmax = std::max(dmax, std::abs(vy[f + stride].v[k] - vy[f].v[k]));
      }
      dt += times[f + stride] - times[f];
      ++cnt;
    }
    if (dmax > 0 && cnt > 0) {
      tx.push_back(std::log(dt / cnt));
      ty.push_back(std::log(dmax));
    }
  }
  est.time_exponent = tx.size() >= 2 ? std::min(1.0, fit_line(tx, ty).slope) : 1.0;
  est.exponent = std::min(est.space_exponent, est.time_exponent);
  return est;
}

}  // namespace vlab
