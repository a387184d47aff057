#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsdirac/model.hpp"

namespace wsdirac {

struct AmplitudeRatios {
  Complex reflected;    ///< L2 / L1
  Complex transmitted;  ///< R2 / L1
};

struct ScatteringResult {
  double energy = 0.0;
  Complex ratio_left;   ///< L2 / L1 (zero when evanescent)
  Complex ratio_right;  ///< R2 / L1 (zero when evanescent)
  double reflection = 0.0;
  double transmission = 0.0;
  double unitarity_defect = 0.0;  ///< R + T - 1
  bool evanescent = false;        ///< |E| <= m0, reported as T = 0, R = 1
};

/// L2/L1 and R2/L1 of the barrier problem, assembled in log space from the
/// matching coefficients and exp(-4 alpha nu L). Needs |E| > m0.
AmplitudeRatios amplitude_ratios(const PhysicalConfig& cfg, double energy);

/// log of e^{-4 alpha nu L} S1 S5 - S3 S6, the numerator of L2/L1. Its
/// zeros on the real energy axis are the transmission resonances.
Complex log_resonance_expression(const PhysicalConfig& cfg, double energy);

/// R = (E+k)/(E-k) |L2/L1|^2, T = |R2/L1|^2. Below the continuum
/// (|E| < m0) the conventional T = 0, R = 1 is returned with evanescent set.
/// Throws ThresholdError at E = +-m0 and on the nu = 0 threshold.
ScatteringResult reflection_transmission(const PhysicalConfig& cfg, double energy);

enum class SweepVariable { Energy, V0, Alpha, HalfWidth };

struct SweepPoint {
  double parameter = 0.0;
  std::optional<ScatteringResult> result;  ///< empty for a hole
  std::string hole_reason;

  bool is_hole() const noexcept { return !result.has_value(); }
};

/// Uniform sweep of one variable over [lo, hi] with n_points >= 2 samples.
/// `energy` is the fixed energy when the swept variable is not Energy.
/// Points that raise (thresholds, poles, invalid configs) become holes.
std::vector<SweepPoint> sweep(const PhysicalConfig& cfg, double energy, SweepVariable variable,
                              double lo, double hi, int n_points);

/// Config with the swept variable replaced by value (energy is untouched).
PhysicalConfig with_parameter(PhysicalConfig cfg, SweepVariable variable, double value);

struct Resonance {
  double energy = 0.0;
  double residual = 0.0;      ///< |L2/L1| at the located energy
  double transmission = 0.0;
};

struct ResonanceOptions {
  double tol = 1e-7;              ///< accept when T >= 1 - 10 tol
  double points_per_unit = 1000;  ///< scan density in energy
};

/// Isolated zeros of the resonance expression in (lo, hi), lo >= m0.
std::vector<Resonance> resonances(const PhysicalConfig& cfg, double lo, double hi,
                                  const ResonanceOptions& options = {});

}  // namespace wsdirac
