#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vlab {

using cx = std::complex<double>;

// All recoverable failures are thrown as NumericalError subclasses carrying
// the stage name; the CLI maps them to exit code 3.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParams : NumericalError {
  using NumericalError::NumericalError;
};
struct ClassCViolation : NumericalError {
  using NumericalError::NumericalError;
};
struct GridTooCoarse : NumericalError {
  using NumericalError::NumericalError;
};
struct WindowTooSmall : NumericalError {
  using NumericalError::NumericalError;
};
struct TailTruncation : NumericalError {
  using NumericalError::NumericalError;
};
struct NoConvergence : NumericalError {
  using NumericalError::NumericalError;
};
struct SingularDenominator : NumericalError {
  using NumericalError::NumericalError;
};
struct TrackingLost : NumericalError {
  using NumericalError::NumericalError;
};
struct NotNormalized : NumericalError {
  using NumericalError::NumericalError;
};
struct SupportViolation : NumericalError {
  using NumericalError::NumericalError;
};
struct TimeSingularity : NumericalError {
  using NumericalError::NumericalError;
};
struct ResolutionLoss : NumericalError {
  using NumericalError::NumericalError;
};
struct CflViolation : NumericalError {
  using NumericalError::NumericalError;
};
struct NonFinite : NumericalError {
  using NumericalError::NumericalError;
};
struct MismatchedSampling : NumericalError {
  using NumericalError::NumericalError;
};
struct DegenerateFit : NumericalError {
  using NumericalError::NumericalError;
};
struct UnresolvedQuadrature : NumericalError {
  using NumericalError::NumericalError;
};
struct IncompleteRun : NumericalError {
  using NumericalError::NumericalError;
};
struct ConfigInvalid : std::runtime_error {
  explicit ConfigInvalid(const std::string& what) : std::runtime_error(what) {}
};

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = a + (b - a) * i / (n - 1);
  return x;
}

// log-spaced nodes on [a, b]
inline std::vector<double> logspace(double a, double b, int n) {
  std::vector<double> x(n);
  const double la = std::log(a), lb = std::log(b);
  for (int i = 0; i < n; ++i) x[i] = std::exp(la + (lb - la) * i / (n - 1));
  return x;
}

inline double trapezoid(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (size_t i = 0; i + 1 < x.size(); ++i) s += 0.5 * (y[i] + y[i + 1]) * (x[i + 1] - x[i]);
  return s;
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

// least squares y = slope*x + intercept
inline LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  const size_t n = x.size();
  if (n < 2) throw DegenerateFit("fit_line: need at least 2 samples");
  double sx = 0, sy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0) throw DegenerateFit("fit_line: zero variance in x");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = (syy > 0) ? (sxy * sxy) / (sxx * syy) : 1.0;
  return f;
}

inline double sq(double x) { return x * x; }

// Complex intercept of the linear model y = c + c2 x (least squares). Used to
// estimate power-law tail coefficients with their first subleading correction
// removed: y = g s^{power} against x = s^{-alpha}.
inline cx fit_intercept(std::span<const double> x, std::span<const cx> y) {
  const size_t n = x.size();
  if (n < 3) throw DegenerateFit("fit_intercept: need at least 3 samples");
  double sx = 0, sxx = 0;
  cx sy = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sxx += x[i] * x[i];
    sy += y[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  if (den == 0) throw DegenerateFit("fit_intercept: degenerate abscissae");
  return (sy * sxx - sx * sxy) / den;
}

}  // namespace vlab
