#pragma once

#include <array>
#include <string>
#include <vector>

#include "wsdirac/special_fn.hpp"

namespace wsdirac {

/// Woods-Saxon potential and mass profile, natural units (hbar = c = 1).
///
/// Both the potential V(x) = v0 f(x) and the mass m(x) = m0 + m1 f(x) share
/// the profile f(x) = 1 / (1 + exp(alpha (|x| - half_width))).
struct PhysicalConfig {
  double m0 = 0.4;
  double m1 = 0.0;
  double v0 = 1.2;          ///< strength; barrier or well is chosen by ProblemKind
  double alpha = 5.0;       ///< edge steepness (inverse length)
  double half_width = 10.0; ///< L
};

/// Throws DomainError unless m0 > 0, m1 >= 0, v0 > 0, alpha > 0 and
/// half_width > 0. Soft limits of the closed-form treatment (alpha L >= 5,
/// m1 <= 0.2 m0) come back as warning strings.
std::vector<std::string> validate(const PhysicalConfig& cfg);

/// f(x) and its derivative; the derivative jumps at x = 0.
double profile(const PhysicalConfig& cfg, double x) noexcept;
double profile_derivative(const PhysicalConfig& cfg, double x) noexcept;

enum class ProblemKind { Barrier, Well };

/// Which root of mu^2 = -(m0^2 - E^2)/alpha^2 the well problem keeps.
/// AsPrinted is mu' = -sqrt(m0^2 - E^2)/alpha, whose kept branch grows at
/// infinity; Decaying flips the sign so the kept branch is normalizable.
enum class MuBranch { Decaying, AsPrinted };

enum class EnergySign { Plus, Minus };

/// +v0 for the barrier, -v0 for the well.
double signed_strength(const PhysicalConfig& cfg, ProblemKind kind) noexcept;

/// Width of the exclusion window around k = 0 and nu = 0 (in E^2 units).
inline constexpr double kThresholdWindow = 1e-12;

struct ScatteringExponents {
  ProblemKind kind = ProblemKind::Barrier;
  double energy = 0.0;
  Complex k;      ///< sqrt(E^2 - m0^2), principal branch
  Complex mu;
  Complex nu;
  Complex sigma;
  Complex delta;
};

/// Exponents for a signed potential strength vs (barrier: +v0, well: -v0).
Complex sigma_for(const PhysicalConfig& cfg, double vs);
Complex delta_for(const PhysicalConfig& cfg, double vs);
/// (i/alpha) sqrt((E - vs)^2 - (m0 + m1)^2); ThresholdError when nu ~ 0.
Complex nu_for(const PhysicalConfig& cfg, double vs, double energy);

/// Barrier needs |E| > m0, Well needs |E| <= m0 (DomainError otherwise).
/// ThresholdError when E^2 - m0^2 (barrier) or nu sits on its threshold.
ScatteringExponents exponents(const PhysicalConfig& cfg, ProblemKind kind, double energy,
                              MuBranch branch = MuBranch::Decaying);

/// Exponents with E = +-m0 substituted exactly: k = mu = 0.
ScatteringExponents low_momentum_exponents(const PhysicalConfig& cfg, ProblemKind kind,
                                           EnergySign sign);

/// The four hypergeometric branches of the left (y) and right (z) solutions.
///
///   left_plus   = (mu+nu+sigma,  mu+nu-sigma+1,  1+2mu)   kept with y^mu
///   left_minus  = (-mu+nu+sigma, -mu+nu-sigma+1, 1-2mu)   kept with y^-mu
///   right_minus = (-mu+nu+delta, -mu+nu-delta+1, 1-2mu)   kept with z^-mu
///   right_plus  = (mu+nu+delta,  mu+nu-delta+1,  1+2mu)   kept with z^mu
///
/// For the well the same expressions, fed with well exponents, give the
/// primed parameter sets.
struct SolutionTriples {
  HypergeomTriple left_plus;
  HypergeomTriple left_minus;
  HypergeomTriple right_minus;
  HypergeomTriple right_plus;
};

SolutionTriples triples(const ScatteringExponents& x);

/// Gamma-ratio constants of the x -> 0 expansion, stored as logarithms.
///
/// Barrier: S1..S6 in log_s[0..5]. Well: S'1..S'4 in log_s[0..3].
struct MatchingCoefficients {
  ProblemKind kind = ProblemKind::Barrier;
  std::array<Complex, 6> log_s{};

  /// exp(log_s[index - 1]), 1-based to follow the usual S1..S6 labels.
  Complex s(int index) const;
  int count() const noexcept { return kind == ProblemKind::Barrier ? 6 : 4; }
};

MatchingCoefficients matching(const ScatteringExponents& x);
MatchingCoefficients matching(const PhysicalConfig& cfg, ProblemKind kind, double energy,
                              MuBranch branch = MuBranch::Decaying);

}  // namespace wsdirac
