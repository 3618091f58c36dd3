#include "vortexlab/profile.hpp"

#include <algorithm>
#include <cmath>

#include "vortexlab/bump.hpp"

namespace vlab {

namespace {

// 8-point Gauss-Legendre on [-1, 1]
constexpr double kGlX[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                            -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                            0.7966664774136267,  0.9602898564975363};
constexpr double kGlW[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                            0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                            0.2223810344533745, 0.1012285362903763};

template <class F>
double gauss(F&& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0;
  for (int k = 0; k < 8; ++k) s += kGlW[k] * f(c + h * kGlX[k]);
  return s * h;
}

}  // namespace

std::string ClassCReport::first_failure() const {
  if (!monotone.pass) return "item (i) monotonicity: " + monotone.detail;
  if (!closed_forms.pass) return "item (ii) closed forms: " + closed_forms.detail;
  if (!zero_count.pass) return "item (iii) zero count: " + zero_count.detail;
  return "";
}

double RadialVortexProfile::g(double s) const {
  if (s <= m1_) return g0_ - 4.0 * c0_ * s * s;
  if (s >= m_) return std::pow(s, -alpha_);
  const double t = std::log(s);
  const double x = (t - std::log(m1_)) / (std::log(m_) - std::log(m1_));
  const double w = smooth_step(x);
  const double core = g0_ - 4.0 * c0_ * s * s;
  const double tail = std::pow(s, -alpha_);
  const double u = (t - bump_.center_log) / bump_.width_log;
  return (1.0 - w) * core + w * tail + bump_.amplitude * smooth_bump(u);
}

double RadialVortexProfile::g_prime(double s) const {
  if (s <= m1_) return -8.0 * c0_ * s;
  if (s >= m_) return -alpha_ * std::pow(s, -alpha_ - 1.0);
  const double t = std::log(s);
  const double dl = std::log(m_) - std::log(m1_);
  const double x = (t - std::log(m1_)) / dl;
  const double w = smooth_step(x);
  const double wp = smooth_step_d(x) / (dl * s);
  const double core = g0_ - 4.0 * c0_ * s * s;
  const double corep = -8.0 * c0_ * s;
  const double tail = std::pow(s, -alpha_);
  const double tailp = -alpha_ * std::pow(s, -alpha_ - 1.0);
  const double u = (t - bump_.center_log) / bump_.width_log;
  return wp * (tail - core) + (1.0 - w) * corep + w * tailp +
         bump_.amplitude * smooth_bump_d(u) / (bump_.width_log * s);
}

void RadialVortexProfile::init_quadrature() {
  const double ta = std::log(m1_), tb = std::log(m_);
  panel_t_.resize(n_panels_ + 1);
  for (int i = 0; i <= n_panels_; ++i) panel_t_[i] = ta + (tb - ta) * i / n_panels_;
  cum_sg_.assign(n_panels_ + 1, 0.0);
  cum_s2gp_.assign(n_panels_ + 1, 0.0);
  auto f_sg = [this](double t) { return std::exp(2.0 * t) * g(std::exp(t)); };
  auto f_s2gp = [this](double t) { return std::exp(3.0 * t) * g_prime(std::exp(t)); };
  for (int i = 0; i < n_panels_; ++i) {
    cum_sg_[i + 1] = cum_sg_[i] + gauss(f_sg, panel_t_[i], panel_t_[i + 1]);
    cum_s2gp_[i + 1] = cum_s2gp_[i] + gauss(f_s2gp, panel_t_[i], panel_t_[i + 1]);
  }
  i_core_ = 0.5 * g0_ * m1_ * m1_ - c0_ * std::pow(m1_, 4);
  j_core_ = -2.0 * c0_ * std::pow(m1_, 4);
  i_blend_full_ = cum_sg_.back();
  j_blend_full_ = cum_s2gp_.back();
  c_omega_ = (i_core_ + i_blend_full_) - std::pow(m_, 2.0 - alpha_) / (2.0 - alpha_);
  s_grid_ = logspace(1e-4 * m1_, 1e3 * m_, 4096);
}

double RadialVortexProfile::integral_sg(double r) const {
  if (r <= 0) return 0.0;
  if (r <= m1_) return 0.5 * g0_ * r * r - c0_ * std::pow(r, 4);
  if (r >= m_)
    return i_core_ + i_blend_full_ +
           (std::pow(r, 2.0 - alpha_) - std::pow(m_, 2.0 - alpha_)) / (2.0 - alpha_);
  const double t = std::log(r);
  const double dt = (std::log(m_) - std::log(m1_)) / n_panels_;
  int k = std::min(int((t - std::log(m1_)) / dt), n_panels_ - 1);
  auto f_sg = [this](double u) { return std::exp(2.0 * u) * g(std::exp(u)); };
  return i_core_ + cum_sg_[k] + gauss(f_sg, panel_t_[k], t);
}

double RadialVortexProfile::cumulative_s2gprime(double r) const {
  if (r <= 0) return 0.0;
  if (r <= m1_) return -2.0 * c0_ * std::pow(r, 4);
  if (r >= m_)
    return j_core_ + j_blend_full_ -
           alpha_ * (std::pow(r, 2.0 - alpha_) - std::pow(m_, 2.0 - alpha_)) / (2.0 - alpha_);
  const double t = std::log(r);
  const double dt = (std::log(m_) - std::log(m1_)) / n_panels_;
  int k = std::min(int((t - std::log(m1_)) / dt), n_panels_ - 1);
  auto f = [this](double u) { return std::exp(3.0 * u) * g_prime(std::exp(u)); };
  return j_core_ + cum_s2gp_[k] + gauss(f, panel_t_[k], t);
}

double RadialVortexProfile::omega(double s) const {
  if (s <= 0) return 0.5 * g0_;
  if (s <= m1_) return 0.5 * g0_ - c0_ * s * s;  // exact core form
  return integral_sg(s) / (s * s);
}

double RadialVortexProfile::omega_prime(double s) const {
  if (s <= 0) return 0.0;
  return (g(s) - 2.0 * omega(s)) / s;
}

double RadialVortexProfile::e_potential(double s) const {
  if (s <= 0) return -8.0 * c0_;  // limit of G'(s)/s in the core
  return g_prime(s) / s;
}

double RadialVortexProfile::a_of_t(double t) const {
  const double s = std::exp(t);
  return s * g_prime(s);
}

double RadialVortexProfile::r_of_t(double t) const { return omega(std::exp(t)); }

double RadialVortexProfile::r_prime_of_t(double t) const {
  const double s = std::exp(t);
  return g(s) - 2.0 * omega(s);
}

std::array<double, 2> RadialVortexProfile::background_velocity(double x1, double x2) const {
  const double s = std::hypot(x1, x2);
  if (s == 0.0) return {0.0, 0.0};
  const double om = omega(s);
  return {-om * x2, om * x1};
}

double RadialVortexProfile::integral_s_gprime_sq() const {
  // core: G' = -8 c0 s -> int s (8 c0 s)^2 = 16 c0^2 m1^4
  const double core = 16.0 * c0_ * c0_ * std::pow(m1_, 4);
  // tail: G' = -alpha s^{-alpha-1} -> int_m^inf alpha^2 s^{-2alpha-1} ds
  const double tail = 0.5 * alpha_ * std::pow(m_, -2.0 * alpha_);
  auto f = [this](double t) {
    const double s = std::exp(t);
    return s * s * sq(g_prime(s));  // s G'^2 ds = e^{2t} G'^2 dt
  };
  double blend = 0;
  for (int i = 0; i < n_panels_; ++i) blend += gauss(f, panel_t_[i], panel_t_[i + 1]);
  return core + blend + tail;
}

std::vector<double> RadialVortexProfile::g_samples() const {
  std::vector<double> out(s_grid_.size());
  for (size_t i = 0; i < s_grid_.size(); ++i) out[i] = g(s_grid_[i]);
  return out;
}

void RadialVortexProfile::locate_zeros() {
  // G' is strictly negative in core and tail; zeros can only sit in the blend
  const double ta = std::log(m1_), tb = std::log(m_);
  const int nscan = 4096;
  std::vector<double> zeros;
  double prev_t = ta + 1e-12, prev_a = a_of_t(prev_t);
  for (int i = 1; i <= nscan; ++i) {
    const double t = ta + (tb - ta) * i / nscan;
    const double a = a_of_t(t);
    if (prev_a == 0.0) zeros.push_back(prev_t);
    if (prev_a * a < 0.0) {
      double lo = prev_t, hi = t;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (a_of_t(lo) * a_of_t(mid) <= 0.0)
          hi = mid;
        else
          lo = mid;
      }
      zeros.push_back(0.5 * (lo + hi));
    }
    prev_t = t;
    prev_a = a;
  }
  if (zeros.size() == 2) {
    t_a_ = zeros[0];
    t_b_ = zeros[1];
  } else {
    t_a_ = t_b_ = 0.0;
  }
}

ClassCReport RadialVortexProfile::verify() const {
  ClassCReport rep;

  // item (i): R'(t) < 0 everywhere, i.e. int_0^r s^2 G' ds < 0 for all r
  {
    double worst = -1e300, best = 1e300;
    for (double s : s_grid_) {
      const double rp = r_prime_of_t(std::log(s));
      worst = std::max(worst, rp);
      best = std::min(best, rp);
    }
    rep.cumulative_max = worst;
    rep.cumulative_min = best;
    rep.monotone.pass = worst < 0.0;
    rep.monotone.margin = worst;
    if (!rep.monotone.pass) rep.monotone.detail = "max of e^{-2t} cumulative integral is nonnegative";
  }

  // item (ii): closed forms hold on the core and tail pieces
  {
    double dev = 0.0;
    for (double s : s_grid_) {
      if (s <= m1_) {
        const double ref = g0_ - 4.0 * c0_ * s * s;
        dev = std::max(dev, std::abs(g(s) - ref) / std::max(1.0, std::abs(ref)));
      } else if (s >= m_) {
        const double ref = std::pow(s, -alpha_);
        dev = std::max(dev, std::abs(g(s) - ref) / std::abs(ref));
      }
    }
    const bool sane = c0_ > 0.0 && m1_ > 0.0 && m_ > m1_;
    rep.closed_forms.pass = sane && dev < 1e-12;
    rep.closed_forms.margin = dev;
    if (!sane) rep.closed_forms.detail = "core/tail parameters out of range";
    else if (dev >= 1e-12) rep.closed_forms.detail = "closed-form pieces deviate";
  }

  // item (iii): A has exactly two zeros a < b with A'(a) > 0, A'(b) < 0
  {
    const double ta = std::log(m1_), tb = std::log(m_);
    const int nscan = 4096;
    int count = 0;
    double prev = a_of_t(ta + 1e-12);
    for (int i = 1; i <= nscan; ++i) {
      const double a = a_of_t(ta + (tb - ta) * i / nscan);
      if (prev * a < 0.0) ++count;
      prev = a;
    }
    rep.n_zeros = count;
    rep.t_a = t_a_;
    rep.t_b = t_b_;
    bool slopes = false;
    if (count == 2 && t_b_ > t_a_) {
      const double h = 1e-5;
      const double da = (a_of_t(t_a_ + h) - a_of_t(t_a_ - h)) / (2 * h);
      const double db = (a_of_t(t_b_ + h) - a_of_t(t_b_ - h)) / (2 * h);
      slopes = da > 0.0 && db < 0.0;
      rep.zero_count.margin = std::min(da, -db);
    }
    rep.zero_count.pass = (count == 2) && slopes;
    if (count != 2)
      rep.zero_count.detail = std::to_string(count) + " sign changes of A (need 2)";
    else if (!slopes)
      rep.zero_count.detail = "zero slopes have wrong signs";
  }
  return rep;
}

RadialVortexProfile RadialVortexProfile::build(double alpha, double m_inner, double m_outer,
                                               double c0, BumpShape bump, double g_core_level) {
  if (!(alpha > 0.0 && alpha < 2.0)) throw InvalidParams("alpha must lie in (0, 2)");
  if (!(m_inner > 0.0 && m_outer > m_inner)) throw InvalidParams("need 0 < m_inner < m_outer");
  if (!(c0 > 0.0)) throw InvalidParams("c0 must be positive");
  if (!(g_core_level > 0.0)) throw InvalidParams("g_core_level must be positive");
  const double la = std::log(m_inner), lb = std::log(m_outer);
  if (bump.width_log <= 0.0) throw InvalidParams("bump width must be positive");
  if (bump.center_log - bump.width_log <= la || bump.center_log + bump.width_log >= lb)
    throw InvalidParams("bump support must sit strictly inside (log m_inner, log m_outer)");

  auto make = [&](double amp) {
    RadialVortexProfile p;
    p.alpha_ = alpha;
    p.m1_ = m_inner;
    p.m_ = m_outer;
    p.c0_ = c0;
    p.g0_ = g_core_level;
    p.bump_ = bump;
    p.bump_.amplitude = amp;
    p.init_quadrature();
    p.locate_zeros();
    return p;
  };

  double amplitude = bump.amplitude;
  if (bump.auto_tune) {
    // smallest amplitude for which A picks up its two zeros, then a margin
    double lo = 0.0, hi = 0.05 * g_core_level;
    for (int it = 0; it < 60 && make(hi).verify().n_zeros != 2; ++it) hi *= 2.0;
    if (make(hi).verify().n_zeros != 2)
      throw ClassCViolation("auto-tune found no amplitude with two zeros of A");
    for (int it = 0; it < 40; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (make(mid).verify().n_zeros == 2)
        hi = mid;
      else
        lo = mid;
    }
    amplitude = 1.3 * hi;
  }

  RadialVortexProfile p = make(amplitude);
  const ClassCReport rep = p.verify();
  if (!rep.pass()) throw ClassCViolation("constructed profile fails class C: " + rep.first_failure());
  return p;
}

RadialVortexProfile RadialVortexProfile::dilated(double eps0) const {
  if (!(eps0 > 0)) throw InvalidParams("dilated: eps0 must be positive");
  BumpShape b = bump_;
  b.center_log += std::log(eps0);
  b.amplitude *= std::pow(eps0, -alpha_);
  b.auto_tune = false;
  return build(alpha_, eps0 * m1_, eps0 * m_, c0_ * std::pow(eps0, -2.0 - alpha_), b,
               g0_ * std::pow(eps0, -alpha_));
}

double angular_velocity(const RadialVortexProfile& p, double s) {
  if (s < 0) throw InvalidParams("angular_velocity: s must be nonnegative");
  return p.omega(s);
}

PotentialSamples instability_potentials(const RadialVortexProfile& p,
                                        std::span<const double> t_grid) {
  PotentialSamples out;
  out.a.reserve(t_grid.size());
  out.r.reserve(t_grid.size());
  out.e.reserve(t_grid.size());
  for (double t : t_grid) {
    const double s = std::exp(t);
    out.a.push_back(p.a_of_t(t));
    out.r.push_back(p.r_of_t(t));
    out.e.push_back(p.e_potential(s));
  }
  return out;
}

}  // namespace vlab
