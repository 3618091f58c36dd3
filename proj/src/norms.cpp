#include "vortexlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace vlab {

double lq_norm(const Field2D& f, double q) {
  if (q <= 0) throw InvalidParams("lq_norm: q must be positive");
  double s = 0;
  for (double x : f.v) s += std::pow(std::abs(x), q);
  return std::pow(s * f.cell_area(), 1.0 / q);
}

double lq_norm_pair(const Field2D& fx, const Field2D& fy, double q) {
  double s = 0;
  for (size_t k = 0; k < fx.v.size(); ++k)
    s += std::pow(std::hypot(fx.v[k], fy.v[k]), q);
  return std::pow(s * fx.cell_area(), 1.0 / q);
}

Rearrangement decreasing_rearrangement(const Field2D& f) {
  Rearrangement r;
  r.cell_area = f.cell_area();
  r.values.reserve(f.v.size());
  for (double x : f.v) r.values.push_back(std::abs(x));
  std::sort(r.values.begin(), r.values.end(), std::greater<double>());
  while (!r.values.empty() && r.values.back() == 0.0) r.values.pop_back();
  return r;
}

double f_star(const Rearrangement& r, double t) {
  if (t < 0) throw InvalidParams("f_star: t must be nonnegative");
  const size_t k = (size_t)(t / r.cell_area);
  return k < r.values.size() ? r.values[k] : 0.0;
}

double f_star_star(const Rearrangement& r, double t) {
  if (t <= 0) throw InvalidParams("f_star_star: t must be positive");
  double integral = 0, covered = 0;
  for (double v : r.values) {
    const double seg = std::min(r.cell_area, t - covered);
    if (seg <= 0) break;
    integral += v * seg;
    covered += seg;
  }
  return integral / t;
}

double lorentz_norm_integral(const Rearrangement& r, double q) {
  if (q <= 1.0) throw InvalidParams("lorentz_norm_integral: q > 1 required");
  if (r.values.empty()) return 0.0;
  const double a = 1.0 / q - 1.0;  // negative
  double norm = 0, cum = 0;
  for (size_t k = 0; k < r.values.size(); ++k) {
    const double t0 = k * r.cell_area, t1 = (k + 1) * r.cell_area;
    const double v = r.values[k];
    // F(t) = cum + v (t - t0) on [t0, t1]; integrate t^{1/q-2} F(t)
    const double c0 = cum - v * t0;
    // c0 * t^{1/q-1}/(1/q-1) + v * t^{1/q} * q, evaluated between t0 and t1
    double term = v * q * (std::pow(t1, 1.0 / q) - std::pow(t0, 1.0 / q));
    if (k > 0)
      term += c0 / a * (std::pow(t1, a) - std::pow(t0, a));
    norm += term;
    cum += v * r.cell_area;
  }
  const double tn = r.values.size() * r.cell_area;
  norm += cum * std::pow(tn, a) / (-a);  // tail: F constant
  return norm;
}

double lorentz_norm_integral(const Field2D& f, double q) {
  return lorentz_norm_integral(decreasing_rearrangement(f), q);
}

double lorentz_norm_dyadic(const Field2D& f, double q) {
  if (q <= 1.0) throw InvalidParams("lorentz_norm_dyadic: q > 1 required");
  std::map<int, double> measure;
  for (double x : f.v) {
    const double a = std::abs(x);
    if (a <= 0.0) continue;
    measure[(int)std::floor(std::log2(a))] += f.cell_area();
  }
  double s = 0;
  for (auto& [j, mj] : measure) s += std::ldexp(std::pow(mj, 1.0 / q), j);
  return s;
}

double lorentz_norm_integral_pair(const Field2D& fx, const Field2D& fy, double q) {
  Field2D mod = fx;
  for (size_t k = 0; k < fx.v.size(); ++k) mod.v[k] = std::hypot(fx.v[k], fy.v[k]);
  return lorentz_norm_integral(mod, q);
}

}  // namespace vlab
