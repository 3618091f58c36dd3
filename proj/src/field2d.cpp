#include "vortexlab/field2d.hpp"

#include <algorithm>
#include <cmath>

namespace vlab {

Field2D make_field(int n, double L, const std::string& kind) {
  Field2D f;
  f.n = n;
  f.L = L;
  f.kind = kind;
  f.v.assign((size_t)n * n, 0.0);
  return f;
}

Field2D sample_field(int n, double L, const std::function<double(double, double)>& fn,
                     const std::string& kind) {
  Field2D f = make_field(n, L, kind);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) f.at(i, j) = fn(f.x(i), f.x(j));
  return f;
}

double field_mean(const Field2D& f) {
  double s = 0;
  for (double x : f.v) s += x;
  return s / f.v.size();
}

double field_max_abs(const Field2D& f) {
  double m = 0;
  for (double x : f.v) m = std::max(m, std::abs(x));
  return m;
}

double field_l2(const Field2D& f) {
  double s = 0;
  for (double x : f.v) s += x * x;
  return std::sqrt(s * f.cell_area());
}

namespace {
inline double cr_spline(double pm, double p0, double p1, double p2, double u) {
  return p0 + 0.5 * u * (p1 - pm + u * (2.0 * pm - 5.0 * p0 + 4.0 * p1 - p2 +
                                        u * (3.0 * (p0 - p1) + p2 - pm)));
}
}  // namespace

double sample_bicubic(const Field2D& f, double x, double y) {
  const int n = f.n;
  const double h = f.h();
  const double fx = (x + f.L) / h, fy = (y + f.L) / h;
  int i0 = (int)std::floor(fx), j0 = (int)std::floor(fy);
  const double ux = fx - i0, uy = fy - j0;
  double col[4];
  for (int dj = -1; dj <= 2; ++dj) {
    const int j = ((j0 + dj) % n + n) % n;
    double row[4];
    for (int di = -1; di <= 2; ++di) {
      const int i = ((i0 + di) % n + n) % n;
      row[di + 1] = f.at(i, j);
    }
    col[dj + 1] = cr_spline(row[0], row[1], row[2], row[3], ux);
  }
  return cr_spline(col[0], col[1], col[2], col[3], uy);
}

Field2D rotate_quarter(const Field2D& f) {
  // (R f)(x_i, y_j) = f(y_j, -x_i)
  Field2D out = f;
  const int n = f.n;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out.at(i, j) = f.at(j, (n - i) % n);
  return out;
}

Field2D rotate_half(const Field2D& f) {
  Field2D out = f;
  const int n = f.n;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out.at(i, j) = f.at((n - i) % n, (n - j) % n);
  return out;
}

void symmetrize(Field2D& f, int m) {
  if (m <= 1) return;
  const int n = f.n;
  if (m % 4 == 0) {
    Field2D q = rotate_quarter(f);
    Field2D h = rotate_half(f);
    Field2D t = rotate_quarter(h);
    for (size_t k = 0; k < f.v.size(); ++k)
      f.v[k] = 0.25 * (f.v[k] + q.v[k] + h.v[k] + t.v[k]);
    (void)n;
  } else if (m % 2 == 0) {
    Field2D h = rotate_half(f);
    for (size_t k = 0; k < f.v.size(); ++k) f.v[k] = 0.5 * (f.v[k] + h.v[k]);
  }
}

double symmetry_defect(const Field2D& f, int m) {
  if (m <= 1) return 0.0;
  const double base = field_l2(f);
  if (base <= 0) return 0.0;
  Field2D rot;
  if (m % 4 == 0) {
    rot = rotate_quarter(f);
  } else if (m % 2 == 0) {
    rot = rotate_half(f);
  } else {
    // bicubic rotation by 2 pi / m; accuracy limited by interpolation
    const double th = 2.0 * M_PI / m, c = std::cos(th), s = std::sin(th);
    rot = f;
    for (int j = 0; j < f.n; ++j)
      for (int i = 0; i < f.n; ++i) {
        const double x = f.x(i), y = f.x(j);
        rot.at(i, j) = sample_bicubic(f, c * x + s * y, -s * x + c * y);
      }
  }
  double num = 0;
  for (size_t k = 0; k < f.v.size(); ++k) num += sq(f.v[k] - rot.v[k]);
  return std::sqrt(num * f.cell_area()) / base;
}

}  // namespace vlab
