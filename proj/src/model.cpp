#include "wsdirac/model.hpp"

#include <cmath>
#include <sstream>

#include "wsdirac/errors.hpp"

namespace wsdirac {
namespace {

std::string energy_text(double e) {
  std::ostringstream os;
  os.precision(17);
  os << e;
  return os.str();
}

// 1/2 + sqrt(w^2 + m1^2/alpha^2), shared by sigma and delta.
Complex shape_root(const PhysicalConfig& cfg, Complex w) {
  const double mass_term = (cfg.m1 / cfg.alpha) * (cfg.m1 / cfg.alpha);
  return 0.5 + std::sqrt(w * w + mass_term);
}

}  // namespace

std::vector<std::string> validate(const PhysicalConfig& cfg) {
  if (!(cfg.m0 > 0.0) || !(cfg.m1 >= 0.0) || !(cfg.v0 > 0.0) || !(cfg.alpha > 0.0) ||
      !(cfg.half_width > 0.0)) {
    throw DomainError("config: need m0 > 0, m1 >= 0, v0 > 0, alpha > 0, L > 0");
  }
  std::vector<std::string> warnings;
  if (cfg.alpha * cfg.half_width < 5.0) {
    warnings.push_back("alpha*L = " + energy_text(cfg.alpha * cfg.half_width) +
                       " < 5: x = 0 matching is no longer accurate");
  }
  if (cfg.m1 > 0.2 * cfg.m0) {
    warnings.push_back("m1 > 0.2*m0: dropped mass-derivative terms are not small");
  }
  return warnings;
}

double profile(const PhysicalConfig& cfg, double x) noexcept {
  return 1.0 / (1.0 + std::exp(cfg.alpha * (std::abs(x) - cfg.half_width)));
}

double profile_derivative(const PhysicalConfig& cfg, double x) noexcept {
  // f (1 - f) = 1 / (4 cosh^2(u/2)), u = alpha (|x| - L)
  const double half_u = 0.5 * cfg.alpha * (std::abs(x) - cfg.half_width);
  const double c = std::cosh(half_u);
  const double f_one_minus_f = 0.25 / (c * c);
  return (x < 0.0 ? 1.0 : -1.0) * cfg.alpha * f_one_minus_f;
}

double signed_strength(const PhysicalConfig& cfg, ProblemKind kind) noexcept {
  return kind == ProblemKind::Barrier ? cfg.v0 : -cfg.v0;
}

Complex sigma_for(const PhysicalConfig& cfg, double vs) {
  return shape_root(cfg, Complex(0.0, vs / cfg.alpha) + 0.5);
}

Complex delta_for(const PhysicalConfig& cfg, double vs) {
  return shape_root(cfg, Complex(0.0, vs / cfg.alpha) - 0.5);
}

Complex nu_for(const PhysicalConfig& cfg, double vs, double energy) {
  const double inner_mass = cfg.m0 + cfg.m1;
  const double q = (energy - vs) * (energy - vs) - inner_mass * inner_mass;
  if (std::abs(q) < kThresholdWindow) {
    throw ThresholdError("nu = 0 threshold at E = " + energy_text(energy));
  }
  return Complex(0.0, 1.0 / cfg.alpha) * std::sqrt(Complex(q, 0.0));
}

ScatteringExponents exponents(const PhysicalConfig& cfg, ProblemKind kind, double energy,
                              MuBranch branch) {
  const double gap = energy * energy - cfg.m0 * cfg.m0;
  if (kind == ProblemKind::Barrier) {
    if (std::abs(gap) < kThresholdWindow) {
      throw ThresholdError("k = 0 threshold at E = " + energy_text(energy));
    }
    if (gap < 0.0) {
      throw DomainError("barrier scattering needs |E| > m0, got E = " + energy_text(energy));
    }
  } else if (gap > 0.0) {
    throw DomainError("well bound states need |E| <= m0, got E = " + energy_text(energy));
  }

  const double vs = signed_strength(cfg, kind);
  ScatteringExponents x;
  x.kind = kind;
  x.energy = energy;
  x.k = std::sqrt(Complex(gap, 0.0));
  x.mu = Complex(0.0, 1.0 / cfg.alpha) * x.k;
  if (kind == ProblemKind::Well && branch == MuBranch::Decaying) {
    x.mu = -x.mu;
  }
  x.nu = nu_for(cfg, vs, energy);
  x.sigma = sigma_for(cfg, vs);
  x.delta = delta_for(cfg, vs);
  return x;
}

ScatteringExponents low_momentum_exponents(const PhysicalConfig& cfg, ProblemKind kind,
                                           EnergySign sign) {
  const double vs = signed_strength(cfg, kind);
  ScatteringExponents x;
  x.kind = kind;
  x.energy = sign == EnergySign::Plus ? cfg.m0 : -cfg.m0;
  x.k = 0.0;
  x.mu = 0.0;
  x.nu = nu_for(cfg, vs, x.energy);
  x.sigma = sigma_for(cfg, vs);
  x.delta = delta_for(cfg, vs);
  return x;
}

SolutionTriples triples(const ScatteringExponents& x) {
  const Complex mu = x.mu;
  const Complex nu = x.nu;
  SolutionTriples t;
  t.left_plus = {mu + nu + x.sigma, mu + nu - x.sigma + 1.0, 1.0 + 2.0 * mu};
  t.left_minus = {-mu + nu + x.sigma, -mu + nu - x.sigma + 1.0, 1.0 - 2.0 * mu};
  t.right_minus = {-mu + nu + x.delta, -mu + nu - x.delta + 1.0, 1.0 - 2.0 * mu};
  t.right_plus = {mu + nu + x.delta, mu + nu - x.delta + 1.0, 1.0 + 2.0 * mu};
  return t;
}

Complex MatchingCoefficients::s(int index) const {
  if (index < 1 || index > count()) {
    throw DomainError("matching coefficient index out of range");
  }
  return std::exp(log_s[static_cast<std::size_t>(index - 1)]);
}

MatchingCoefficients matching(const ScatteringExponents& x) {
  using special::log_connection_crossed;
  using special::log_connection_direct;

  const SolutionTriples t = triples(x);
  MatchingCoefficients m;
  m.kind = x.kind;
  try {
    if (x.kind == ProblemKind::Barrier) {
      m.log_s[0] = log_connection_direct(t.left_plus);
      m.log_s[1] = log_connection_direct(t.left_minus);
      m.log_s[2] = log_connection_crossed(t.left_plus);
      m.log_s[3] = log_connection_crossed(t.left_minus);
      m.log_s[4] = log_connection_direct(t.right_minus);
      m.log_s[5] = log_connection_crossed(t.right_minus);
    } else {
      m.log_s[0] = log_connection_direct(t.left_plus);
      m.log_s[1] = log_connection_crossed(t.right_plus);
      m.log_s[2] = log_connection_crossed(t.left_plus);
      m.log_s[3] = log_connection_direct(t.right_plus);
    }
  } catch (const PoleError& e) {
    throw PoleError(std::string(e.what()) + " (threshold energy E = " + energy_text(x.energy) +
                        ")",
                    e.argument());
  }
  return m;
}

MatchingCoefficients matching(const PhysicalConfig& cfg, ProblemKind kind, double energy,
                              MuBranch branch) {
  return matching(exponents(cfg, kind, energy, branch));
}

}  // namespace wsdirac
