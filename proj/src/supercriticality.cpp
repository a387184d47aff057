#include "wsdirac/supercriticality.hpp"

#include <cmath>

#include "detail.hpp"

namespace wsdirac {
namespace {

struct LowMomentumTriples {
  HypergeomTriple left;   // (a, b, c) or (a', b', c')
  HypergeomTriple right;  // (a2, b2, c2) or (a'3, b'3, c'3)
  Complex nu;
};

// Primed exponents of the well as functions of its depth:
//   sigma' = 1/2 + sqrt((-i D/alpha + 1/2)^2 + m1^2/alpha^2)
//   nu'    = (i/alpha) sqrt((E + D)^2 - (m0 + m1)^2)
//   delta' = 1/2 + sqrt((-i D/alpha - 1/2)^2 + m1^2/alpha^2)
LowMomentumTriples well_triples(const PhysicalConfig& cfg, double depth, EnergySign sign) {
  const double energy = sign == EnergySign::Plus ? cfg.m0 : -cfg.m0;
  const double mass_term = (cfg.m1 / cfg.alpha) * (cfg.m1 / cfg.alpha);
  const Complex wp = Complex(0.0, -depth / cfg.alpha) + 0.5;
  const Complex wd = Complex(0.0, -depth / cfg.alpha) - 0.5;
  const Complex sigma = 0.5 + std::sqrt(wp * wp + mass_term);
  const Complex delta = 0.5 + std::sqrt(wd * wd + mass_term);

  const double inner_mass = cfg.m0 + cfg.m1;
  const double q = (energy + depth) * (energy + depth) - inner_mass * inner_mass;
  if (std::abs(q) < kThresholdWindow) {
    throw ThresholdError("bound condition: nu' = 0 at E = +-m0");
  }
  const Complex nu = Complex(0.0, 1.0 / cfg.alpha) * std::sqrt(Complex(q, 0.0));
  return {{nu + sigma, nu - sigma + 1.0, 1.0}, {nu + delta, nu - delta + 1.0, 1.0}, nu};
}

LowMomentumTriples barrier_triples(const PhysicalConfig& cfg, EnergySign sign) {
  const ScatteringExponents x = low_momentum_exponents(cfg, ProblemKind::Barrier, sign);
  const SolutionTriples t = triples(x);
  return {t.left_plus, t.right_minus, x.nu};
}

// e^{-4 alpha nu L} D(left) D(right) - C(left) C(right), D/C = direct/crossed
// connection coefficients.
Complex low_momentum_condition(const PhysicalConfig& cfg, const LowMomentumTriples& t) {
  using special::log_connection_crossed;
  using special::log_connection_direct;
  const Complex decay = -4.0 * cfg.alpha * cfg.half_width * t.nu;
  const Complex lhs = decay + log_connection_direct(t.left) + log_connection_direct(t.right);
  const Complex rhs = log_connection_crossed(t.left) + log_connection_crossed(t.right);
  return detail::exp_checked(detail::log_difference(lhs, rhs), "low-momentum condition");
}

bool same(const HypergeomTriple& x, const HypergeomTriple& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c;
}

}  // namespace

Complex resonance_condition_at(const PhysicalConfig& cfg, EnergySign sign) {
  return low_momentum_condition(cfg, barrier_triples(cfg, sign));
}

Complex bound_condition_at_depth(const PhysicalConfig& cfg, double depth, EnergySign sign) {
  return low_momentum_condition(cfg, well_triples(cfg, depth, sign));
}

Complex bound_condition_at(const PhysicalConfig& cfg, EnergySign sign) {
  return bound_condition_at_depth(cfg, cfg.v0, sign);
}

std::array<LowMomentumReport, 2> verify_equivalence(const PhysicalConfig& cfg) {
  std::array<LowMomentumReport, 2> reports;
  const std::array<EnergySign, 2> signs = {EnergySign::Plus, EnergySign::Minus};
  for (std::size_t i = 0; i < 2; ++i) {
    LowMomentumReport& r = reports[i];
    r.sign = signs[i];
    const LowMomentumTriples barrier = barrier_triples(cfg, r.sign);
    const LowMomentumTriples well = well_triples(cfg, -cfg.v0, r.sign);
    r.parameter_identity_ok = same(barrier.left, well.left) && same(barrier.right, well.right);
    r.resonance_value = low_momentum_condition(cfg, barrier);
    r.bound_value = low_momentum_condition(cfg, well);
    r.difference = std::abs(r.resonance_value - r.bound_value);
    r.values_agree = r.difference <= 1e-10 * std::max(1.0, std::abs(r.resonance_value));
  }
  return reports;
}

}  // namespace wsdirac
