#include "vortexlab/greens.hpp"

#include <cmath>

namespace vlab {

void SpectralGrid::validate(double m_inner, double m_outer) const {
  if (n < 512) throw WindowTooSmall("spectral grid needs n >= 512");
  if (!(t_min < std::log(m_inner) - 4.0) || !(t_max > std::log(m_outer) + 4.0))
    throw WindowTooSmall("spectral window must contain [log m_inner, log m_outer] with margin 4");
  if (!(t_max > t_min)) throw WindowTooSmall("empty spectral window");
}

namespace {

// Cubic interpolant coefficients on the local interval [0, h]:
// p(u) = c0 + c1 u + c2 u^2 + c3 u^3.

// values at local nodes (-h, 0, h, 2h)
template <class T>
void cubic_centered(T fm, T f0, T f1, T f2, double h, T c[4]) {
  c[0] = f0;
  c[3] = (f2 - 3.0 * f1 + 3.0 * f0 - fm) / (6.0 * h * h * h);
  c[2] = (fm + f1 - 2.0 * f0) / (2.0 * h * h);
  c[1] = (f1 - fm) / (2.0 * h) - c[3] * h * h;
}

// values at nodes (0, h, 2h, 3h)
template <class T>
void cubic_forward(T f0, T f1, T f2, T f3, double h, T c[4]) {
  c[0] = f0;
  c[1] = (-11.0 * f0 + 18.0 * f1 - 9.0 * f2 + 2.0 * f3) / (6.0 * h);
  c[2] = (2.0 * f0 - 5.0 * f1 + 4.0 * f2 - f3) / (2.0 * h * h);
  c[3] = (-f0 + 3.0 * f1 - 3.0 * f2 + f3) / (6.0 * h * h * h);
}

// values at nodes (-2h, -h, 0, h)
template <class T>
void cubic_backward(T fmm, T fm, T f0, T f1, double h, T c[4]) {
  c[0] = f0;
  c[1] = (fmm - 6.0 * fm + 3.0 * f0 + 2.0 * f1) / (6.0 * h);
  c[2] = (fm - 2.0 * f0 + f1) / (2.0 * h * h);
  c[3] = (-fmm + 3.0 * fm - 3.0 * f0 + f1) / (6.0 * h * h * h);
}

template <class T>
std::vector<T> greens_apply_impl(double m, std::span<const T> f, const SpectralGrid& grid) {
  if (m <= 0) throw InvalidParams("greens_apply: m must be positive");
  const int n = grid.n;
  const double h = grid.h();
  if (m * h > 0.5) throw GridTooCoarse("greens_apply: m*h > 0.5, kernel under-resolved");
  if ((int)f.size() != n) throw InvalidParams("greens_apply: f size mismatch");
  if (n < 4) throw InvalidParams("greens_apply: grid too small");

  // exponential moments I_k = int_0^h e^{-mu} u^k du
  const double E = std::exp(-m * h);
  double I[4];
  I[0] = (1.0 - E) / m;
  double hk = 1.0;
  for (int k = 1; k < 4; ++k) {
    hk *= h;
    I[k] = (k * I[k - 1] - hk * E) / m;
  }

  auto seg = [&](const T c[4]) { return c[0] * I[0] + c[1] * I[1] + c[2] * I[2] + c[3] * I[3]; };

  // forward sweep: Jp_i = int_{t_i}^{t_max} e^{-m(eta - t_i)} f d eta
  std::vector<T> jp(n, T(0));
  for (int i = n - 2; i >= 0; --i) {
    T c[4];
    if (i == 0)
      cubic_forward(f[0], f[1], f[2], f[3], h, c);
    else if (i + 2 <= n - 1)
      cubic_centered(f[i - 1], f[i], f[i + 1], f[i + 2], h, c);
    else
      cubic_backward(f[i - 2], f[i - 1], f[i], f[i + 1], h, c);
    jp[i] = E * jp[i + 1] + seg(c);
  }

  // backward sweep in v = t_i - eta: Jm_i = int_{t_min}^{t_i} e^{-m(t_i - eta)} f d eta
  std::vector<T> jm(n, T(0));
  for (int i = 1; i < n; ++i) {
    T c[4];
    if (i == n - 1)
      cubic_forward(f[i], f[i - 1], f[i - 2], f[i - 3], h, c);
    else if (i >= 2)
      cubic_centered(f[i + 1], f[i], f[i - 1], f[i - 2], h, c);
    else
      cubic_backward(f[i + 2], f[i + 1], f[i], f[i - 1], h, c);
    jm[i] = E * jm[i - 1] + seg(c);
  }

  std::vector<T> psi(n);
  for (int i = 0; i < n; ++i) psi[i] = (jp[i] + jm[i]) / (2.0 * m);
  return psi;
}

}  // namespace

std::vector<double> greens_apply(double m, std::span<const double> f, const SpectralGrid& grid) {
  return greens_apply_impl<double>(m, f, grid);
}
std::vector<cx> greens_apply(double m, std::span<const cx> f, const SpectralGrid& grid) {
  return greens_apply_impl<cx>(m, f, grid);
}

}  // namespace vlab
