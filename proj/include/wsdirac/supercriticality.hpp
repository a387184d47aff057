#pragma once

#include <array>

#include "wsdirac/model.hpp"

namespace wsdirac {

/// Zero-momentum (E = +-m0) comparison of the barrier resonance condition
/// and the well bound-state condition.
struct LowMomentumReport {
  EnergySign sign = EnergySign::Plus;
  Complex resonance_value;  ///< LHS - RHS of the resonance condition at E = +-m0
  Complex bound_value;      ///< LHS - RHS of the bound condition under v0 -> -v0
  bool parameter_identity_ok = false;  ///< a'=a, b'=b, c'=c, a'3=a2, b'3=b2, c'3=c2 exactly
  double difference = 0.0;             ///< |resonance_value - bound_value|
  bool values_agree = false;           ///< difference <= 1e-10 max(1, |resonance_value|)
};

/// e^{-4 alpha nu L} S1 S5 - S3 S6 for the barrier at E = +-m0, with k = mu = 0
/// substituted exactly so that c = c2 = 1.
Complex resonance_condition_at(const PhysicalConfig& cfg, EnergySign sign);

/// e^{-4 alpha nu' L} S'1 S'4 - S'3 S'2 at E = +-m0 for the well of depth
/// cfg.v0, with the primed exponents written out directly in terms of the
/// well depth (c' = c'3 = 1). This is the negative of eigen_condition's
/// limit at E -> +-m0.
Complex bound_condition_at(const PhysicalConfig& cfg, EnergySign sign);

/// Same as bound_condition_at but for an arbitrary signed well depth, so the
/// v0 -> -v0 substitution can be applied to a config whose v0 is positive.
Complex bound_condition_at_depth(const PhysicalConfig& cfg, double depth, EnergySign sign);

/// Evaluates both conditions for E = +m0 and E = -m0 and checks the
/// parameter identities that make them coincide.
std::array<LowMomentumReport, 2> verify_equivalence(const PhysicalConfig& cfg);

}  // namespace wsdirac
