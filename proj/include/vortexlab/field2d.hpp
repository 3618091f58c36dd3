#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vortexlab/util.hpp"

namespace vlab {

// Scalar samples on the periodic box [-L, L]^2, nodes x_i = -L + i h, h = 2L/n.
// Row-major storage, x fastest: v[j*n + i].
struct Field2D {
  int n = 0;
  double L = 0.0;
  std::vector<double> v;
  double time = 0.0;
  int sym_m = 0;  // claimed m-fold symmetry (0 = none)
  std::string kind = "sigma";

  double h() const { return 2.0 * L / n; }
  double x(int i) const { return -L + h() * i; }
  double& at(int i, int j) { return v[(size_t)j * n + i]; }
  double at(int i, int j) const { return v[(size_t)j * n + i]; }
  double cell_area() const { return h() * h(); }
};

Field2D make_field(int n, double L, const std::string& kind = "sigma");
Field2D sample_field(int n, double L, const std::function<double(double, double)>& f,
                     const std::string& kind = "sigma");

double field_mean(const Field2D& f);
double field_max_abs(const Field2D& f);
double field_l2(const Field2D& f);  // grid L2 norm, sqrt(sum v^2 h^2)

// periodic bicubic (Catmull-Rom) interpolation
double sample_bicubic(const Field2D& f, double x, double y);

// rotation by pi/2 and pi as exact index permutations: (R f)(x) = f(R^{-1} x)
Field2D rotate_quarter(const Field2D& f);
Field2D rotate_half(const Field2D& f);

// relative L2 defect of m-fold rotational symmetry; exact permutations are
// used for m in {1, 2, 4}, other m fall back to bicubic rotation
double symmetry_defect(const Field2D& f, int m);

// exact projection onto the m-fold-symmetric subspace for m divisible by 2
// or 4 (group average over the grid-exact rotation subgroup); no-op otherwise
void symmetrize(Field2D& f, int m);

}  // namespace vlab
