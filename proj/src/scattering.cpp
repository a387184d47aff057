#include "wsdirac/scattering.hpp"

#include <cmath>
#include <limits>

#include "detail.hpp"
#include "wsdirac/errors.hpp"

namespace wsdirac {
namespace {

struct LogAmplitudes {
  Complex log_numerator_left;   // e^{-4 a nu L} S1 S5 - S3 S6
  Complex log_numerator_right;  // e^{-2 a nu L} (S1 S4 - S3 S2)
  Complex log_denominator;      // S4 S6 - e^{-4 a nu L} S2 S5
};

LogAmplitudes log_amplitudes(const PhysicalConfig& cfg, const ScatteringExponents& x) {
  const MatchingCoefficients m = matching(x);
  const auto& l = m.log_s;
  const Complex width_phase = -2.0 * cfg.alpha * cfg.half_width * x.nu;
  const Complex double_phase = 2.0 * width_phase;

  LogAmplitudes out;
  out.log_numerator_left = detail::log_difference(double_phase + l[0] + l[4], l[2] + l[5]);
  out.log_numerator_right = width_phase + detail::log_difference(l[0] + l[3], l[2] + l[1]);
  out.log_denominator = detail::log_difference(l[3] + l[5], double_phase + l[1] + l[4]);
  return out;
}

}  // namespace

AmplitudeRatios amplitude_ratios(const PhysicalConfig& cfg, double energy) {
  const ScatteringExponents x = exponents(cfg, ProblemKind::Barrier, energy);
  const LogAmplitudes a = log_amplitudes(cfg, x);
  return {detail::exp_checked(a.log_numerator_left - a.log_denominator, "L2/L1"),
          detail::exp_checked(a.log_numerator_right - a.log_denominator, "R2/L1")};
}

Complex log_resonance_expression(const PhysicalConfig& cfg, double energy) {
  const ScatteringExponents x = exponents(cfg, ProblemKind::Barrier, energy);
  return log_amplitudes(cfg, x).log_numerator_left;
}

ScatteringResult reflection_transmission(const PhysicalConfig& cfg, double energy) {
  ScatteringResult r;
  r.energy = energy;
  const double gap = energy * energy - cfg.m0 * cfg.m0;
  if (std::abs(gap) >= kThresholdWindow && gap < 0.0) {
    r.evanescent = true;
    r.reflection = 1.0;
    r.transmission = 0.0;
    r.unitarity_defect = 0.0;
    return r;
  }

  const AmplitudeRatios ratios = amplitude_ratios(cfg, energy);
  const double k = std::sqrt(gap);
  r.ratio_left = ratios.reflected;
  r.ratio_right = ratios.transmitted;
  r.reflection = (energy + k) / (energy - k) * std::norm(ratios.reflected);
  r.transmission = std::norm(ratios.transmitted);
  r.unitarity_defect = r.reflection + r.transmission - 1.0;
  return r;
}

PhysicalConfig with_parameter(PhysicalConfig cfg, SweepVariable variable, double value) {
  switch (variable) {
    case SweepVariable::Energy:
      break;
    case SweepVariable::V0:
      cfg.v0 = value;
      break;
    case SweepVariable::Alpha:
      cfg.alpha = value;
      break;
    case SweepVariable::HalfWidth:
      cfg.half_width = value;
      break;
  }
  return cfg;
}

std::vector<SweepPoint> sweep(const PhysicalConfig& cfg, double energy, SweepVariable variable,
                              double lo, double hi, int n_points) {
  if (n_points < 2) {
    throw DomainError("sweep: need at least two points");
  }
  std::vector<SweepPoint> points(static_cast<std::size_t>(n_points));
  const double step = (hi - lo) / static_cast<double>(n_points - 1);
  for (int i = 0; i < n_points; ++i) {
    SweepPoint& p = points[static_cast<std::size_t>(i)];
    p.parameter = i == n_points - 1 ? hi : lo + step * static_cast<double>(i);
    try {
      const PhysicalConfig point_cfg = with_parameter(cfg, variable, p.parameter);
      validate(point_cfg);
      const double e = variable == SweepVariable::Energy ? p.parameter : energy;
      p.result = reflection_transmission(point_cfg, e);
    } catch (const Error& e) {
      p.hole_reason = e.what();
    }
  }
  return points;
}

std::vector<Resonance> resonances(const PhysicalConfig& cfg, double lo, double hi,
                                  const ResonanceOptions& options) {
  if (!(options.tol > 0.0)) {
    throw DomainError("resonances: tol must be positive");
  }
  if (!(lo >= cfg.m0) || !(hi > lo)) {
    throw DomainError("resonances: window must lie inside (m0, inf)");
  }
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const auto log_magnitude = [&](double e) {
    try {
      return log_resonance_expression(cfg, e).real();
    } catch (const Error&) {
      return kInf;
    }
  };

  const int cells = std::max(16, static_cast<int>(std::ceil((hi - lo) * options.points_per_unit)));
  const double h = (hi - lo) / cells;
  std::vector<double> grid(static_cast<std::size_t>(cells + 1));
  std::vector<double> value(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = lo + h * static_cast<double>(i);
    value[i] = log_magnitude(grid[i]);
  }

  std::vector<Resonance> found;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (!std::isfinite(value[i - 1]) || !std::isfinite(value[i]) || !std::isfinite(value[i + 1])) {
      continue;
    }
    if (!(value[i] < value[i - 1] && value[i] <= value[i + 1])) continue;

    const double e = detail::golden_minimize(log_magnitude, grid[i - 1], grid[i + 1],
                                             4.0 * std::numeric_limits<double>::epsilon() *
                                                 std::abs(grid[i]));
    ScatteringResult r;
    try {
      r = reflection_transmission(cfg, e);
    } catch (const Error&) {
      continue;
    }
    if (r.transmission >= 1.0 - 10.0 * options.tol) {
      found.push_back({e, std::abs(r.ratio_left), r.transmission});
    }
  }
  return found;
}

}  // namespace wsdirac
