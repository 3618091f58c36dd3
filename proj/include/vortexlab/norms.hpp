#pragma once

#include <vector>

#include "vortexlab/field2d.hpp"

namespace vlab {

// L^q norm of a grid field treated as piecewise constant on cells
double lq_norm(const Field2D& f, double q);
double lq_norm_pair(const Field2D& fx, const Field2D& fy, double q);  // of the modulus

// |f| cell values sorted descending; every measure is a multiple of cell_area
struct Rearrangement {
  std::vector<double> values;
  double cell_area = 0.0;
  double total_measure() const { return values.size() * cell_area; }
};
Rearrangement decreasing_rearrangement(const Field2D& f);

// f*(t) and f**(t) = (1/t) int_0^t f* for the step structure
double f_star(const Rearrangement& r, double t);
double f_star_star(const Rearrangement& r, double t);

// || f ||_{L^{q,1}} = int_0^inf t^{1/q} f**(t) dt/t, exact on the step structure
double lorentz_norm_integral(const Rearrangement& r, double q);
double lorentz_norm_integral(const Field2D& f, double q);

// sum_j 2^j |E_j|^{1/q} over dyadic level sets (quasi-norm)
double lorentz_norm_dyadic(const Field2D& f, double q);

// Lorentz norms of the modulus of a two-component field
double lorentz_norm_integral_pair(const Field2D& fx, const Field2D& fy, double q);

}  // namespace vlab
