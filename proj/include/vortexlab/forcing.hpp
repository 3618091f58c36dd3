#pragma once

#include <array>

#include "vortexlab/family.hpp"
#include "vortexlab/profile.hpp"

namespace vlab {

// W(y) = -alpha curl V - (y, d) curl V  and  B = -alpha Om - s Om'.
// W vanishes for s >= M; B s^2 is constant there.
double forcing_w(const RadialVortexProfile& p, double s);
double forcing_b(const RadialVortexProfile& p, double s);

enum class ForcingVariant {
  physical,  // Z of (6.8), original variables, needs the support condition (6.7)
  rescaled,  // Z_eps of (9.8)
  limit,     // Zbar of (10.13), t > 0
  velocity,  // F_eps of (9.24), vector-valued
};

struct ForcingSpec {
  const RadialVortexProfile* profile = nullptr;
  ForcingVariant variant = ForcingVariant::rescaled;
};

// scalar vorticity forcing for the first three variants
double forcing(const ForcingSpec& spec, const ScalingFamily& f, double x1, double x2, double t);

// velocity forcing (9.24)
std::array<double, 2> forcing_velocity(const ForcingSpec& spec, const ScalingFamily& f, double x1,
                                       double x2, double t);

// curl_x[ chi(|x|) (alpha gamma t)^{-1+1/alpha} V((alpha gamma t)^{-1/alpha} x) ],
// the field whose t-derivative reproduces Zbar; radial analytic evaluation
double limit_curl_field(const RadialVortexProfile& p, const ScalingFamily& f, double x1,
                        double x2, double t);

}  // namespace vlab
