#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wsdirac/model.hpp"

namespace wsdirac {

/// Distance from the window ends inside which eigen_condition refuses to run.
inline constexpr double kBoundEndpointWindow = 1e-10;

/// Energy window searched for bound states: (max(-m0, m0 - v0), m0).
std::pair<double, double> bound_state_window(const PhysicalConfig& cfg);

/// f(E) = S'2 S'3 - S'1 S'4 exp(-4 alpha nu' L) for the well of depth v0.
/// Zeros on the real axis are the bound-state energies.
Complex eigen_condition(const PhysicalConfig& cfg, double energy,
                        MuBranch branch = MuBranch::Decaying);

struct BoundStateOptions {
  int n_grid = 2000;
  std::optional<double> tol;  ///< default: 1e-8 * median |f| over the grid
  MuBranch branch = MuBranch::Decaying;
};

struct BoundStateSpectrum {
  std::vector<double> energies;   ///< ascending
  std::vector<double> residuals;  ///< |f(E_n)|
  PhysicalConfig config;
  int count = 0;
  double tolerance = 0.0;  ///< acceptance threshold actually used
};

/// Scans |f| over the window, refines every local minimum by golden-section
/// search and keeps the points where max(|Re f|, |Im f|) <= tol.
BoundStateSpectrum find_bound_states(const PhysicalConfig& cfg,
                                     const BoundStateOptions& options = {});

}  // namespace wsdirac
