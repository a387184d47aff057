#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "wsdirac/errors.hpp"
#include "wsdirac/special_fn.hpp"

namespace wsdirac::detail {

inline constexpr double kMaxLogMagnitude = 709.78;

/// log(e^p - e^q) with the larger magnitude factored out first.
inline Complex log_difference(Complex p, Complex q) {
  const double shift = std::max(p.real(), q.real());
  return shift + std::log(std::exp(p - shift) - std::exp(q - shift));
}

inline Complex exp_checked(Complex log_value, const std::string& what) {
  if (log_value.real() > kMaxLogMagnitude) {
    throw OverflowError(what + ": magnitude exp(" + std::to_string(log_value.real()) +
                        ") is not representable");
  }
  return std::exp(log_value);
}

/// Golden-section search for a minimum of f on [lo, hi], down to an
/// absolute bracket width of x_tol.
template <class F>
double golden_minimize(F&& f, double lo, double hi, double x_tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < 200 && (b - a) > x_tol; ++iter) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

}  // namespace wsdirac::detail
