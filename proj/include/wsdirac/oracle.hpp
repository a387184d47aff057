#pragma once

#include <span>
#include <vector>

#include "wsdirac/model.hpp"

namespace wsdirac {

/// Which differential equation the oracle integrates.
enum class OracleMode {
  Reduced,                 ///< phi'' + [(E-V)^2 - m^2 + i V'] phi = 0 (mass derivative dropped)
  FullCoupled,             ///< first-order (phi, chi) system
  FullWithMassDerivative,  ///< second-order phi equation keeping the m'/m terms
};

struct IntegrationSettings {
  double x_max = 0.0;  ///< 0 selects 4 L + 20 / alpha
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  OracleMode mode = OracleMode::Reduced;
};

/// Domain half-width actually used; throws DomainError if f(x_max) >= 1e-12.
double resolved_x_max(const PhysicalConfig& cfg, const IntegrationSettings& settings);

struct OracleScattering {
  double reflection = 0.0;
  double transmission = 0.0;
  Complex incident;   ///< coefficient of e^{ikx} at -x_max (outgoing wave normalised to 1)
  Complex reflected;  ///< coefficient of e^{-ikx} at -x_max
};

/// Integrates a pure outgoing wave e^{ikx} from +x_max back to -x_max
/// (split at x = 0) and projects onto e^{+-ikx}. Needs |E| > m0.
/// Throws StiffnessError when step control fails.
OracleScattering integrate_scattering(const PhysicalConfig& cfg, double energy,
                                      const IntegrationSettings& settings = {});

/// phi(x) of the same backward integration, sampled at xs (|x| <= x_max).
std::vector<Complex> integrate_wavefunction(const PhysicalConfig& cfg, double energy,
                                            std::span<const double> xs,
                                            const IntegrationSettings& settings = {});

struct ShootingMismatch {
  double mismatch = 0.0;  ///< Re (Im for FullCoupled) of the normalised x = 0 Wronskian
  Complex wronskian;      ///< full normalised Wronskian
};

/// Integrates decaying solutions of the well inward from +-x_max and
/// compares them at x = 0. E must lie in (max(-m0, m0 - v0), m0).
ShootingMismatch shoot_bound_state(const PhysicalConfig& cfg, double energy,
                                   const IntegrationSettings& settings = {});

/// Bound-state energies from sign changes of the shooting mismatch on an
/// n_grid scan of the well window, each refined to full precision.
std::vector<double> shooting_bound_states(const PhysicalConfig& cfg, int n_grid,
                                          const IntegrationSettings& settings = {});

/// Closed-form phi(x) built from the hypergeometric solutions.
///
/// Barrier: L1 = 1, L2 and R2 from amplitude_ratios, so that
/// phi -> e^{ik(x+L)} + (L2/L1) e^{-ik(x+L)} as x -> -inf.
/// Well: L3 = 1, R3 fixed by matching the e^{-alpha nu' x} coefficient.
Complex analytic_wavefunction(const PhysicalConfig& cfg, ProblemKind kind, double energy, double x,
                              MuBranch branch = MuBranch::Decaying);

}  // namespace wsdirac
