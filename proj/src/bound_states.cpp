#include "wsdirac/bound_states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "detail.hpp"
#include "wsdirac/errors.hpp"

namespace wsdirac {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEndpointExclusion = 1e-8;

struct Scan {
  std::vector<double> energy;
  std::vector<double> log_abs;
};

Scan scan(const PhysicalConfig& cfg, MuBranch branch, double lo, double hi, int n) {
  Scan s;
  s.energy.resize(static_cast<std::size_t>(n));
  s.log_abs.resize(s.energy.size());
  const double h = (hi - lo) / n;
  for (int i = 0; i < n; ++i) {
    const double e = lo + h * (i + 0.5);
    s.energy[static_cast<std::size_t>(i)] = e;
    try {
      s.log_abs[static_cast<std::size_t>(i)] = std::log(std::abs(eigen_condition(cfg, e, branch)));
    } catch (const Error&) {
      s.log_abs[static_cast<std::size_t>(i)] = kInf;
    }
  }
  return s;
}

struct Candidate {
  double energy;
  double residual;
};

// Refines every interior local minimum of the scan and keeps accepted roots.
std::vector<Candidate> refine(const PhysicalConfig& cfg, MuBranch branch, const Scan& s,
                              double tol, std::pair<double, double> window) {
  const auto log_abs = [&](double e) {
    try {
      return std::log(std::abs(eigen_condition(cfg, e, branch)));
    } catch (const Error&) {
      return kInf;
    }
  };
  std::vector<Candidate> out;
  for (std::size_t i = 1; i + 1 < s.energy.size(); ++i) {
    const double left = s.log_abs[i - 1];
    const double mid = s.log_abs[i];
    const double right = s.log_abs[i + 1];
    if (!std::isfinite(mid) || !(mid < left && mid <= right)) continue;

    const double e = detail::golden_minimize(
        log_abs, s.energy[i - 1], s.energy[i + 1],
        4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(s.energy[i])));
    if (e - window.first < kEndpointExclusion || window.second - e < kEndpointExclusion) {
      continue;
    }
    Complex f;
    try {
      f = eigen_condition(cfg, e, branch);
    } catch (const Error&) {
      continue;
    }
    if (std::max(std::abs(f.real()), std::abs(f.imag())) <= tol) {
      out.push_back({e, std::abs(f)});
    }
  }
  return out;
}

}  // namespace

std::pair<double, double> bound_state_window(const PhysicalConfig& cfg) {
  return {std::max(-cfg.m0, cfg.m0 - cfg.v0), cfg.m0};
}

Complex eigen_condition(const PhysicalConfig& cfg, double energy, MuBranch branch) {
  const auto [lo, hi] = bound_state_window(cfg);
  if (energy < lo || energy > hi) {
    std::ostringstream os;
    os.precision(17);
    os << "eigen_condition: E = " << energy << " outside (" << lo << ", " << hi << ")";
    throw DomainError(os.str());
  }
  if (energy - lo < kBoundEndpointWindow || hi - energy < kBoundEndpointWindow) {
    throw ThresholdError("eigen_condition: E is at an end of the bound-state window");
  }
  const ScatteringExponents x = exponents(cfg, ProblemKind::Well, energy, branch);
  const MatchingCoefficients m = matching(x);
  const auto& l = m.log_s;
  const Complex decay = -4.0 * cfg.alpha * cfg.half_width * x.nu;
  return detail::exp_checked(detail::log_difference(l[1] + l[2], l[0] + l[3] + decay),
                             "eigen_condition");
}

BoundStateSpectrum find_bound_states(const PhysicalConfig& cfg, const BoundStateOptions& options) {
  if (options.n_grid < 100) {
    throw DomainError("find_bound_states: n_grid must be at least 100");
  }
  const auto window = bound_state_window(cfg);
  const Scan coarse = scan(cfg, options.branch, window.first, window.second, options.n_grid);

  double tol = 0.0;
  if (options.tol) {
    tol = *options.tol;
  } else {
    std::vector<double> magnitudes;
    for (double v : coarse.log_abs) {
      if (std::isfinite(v)) magnitudes.push_back(std::exp(v));
    }
    if (!magnitudes.empty()) {
      auto mid = magnitudes.begin() + static_cast<std::ptrdiff_t>(magnitudes.size() / 2);
      std::nth_element(magnitudes.begin(), mid, magnitudes.end());
      tol = 1e-8 * *mid;
    }
  }

  std::vector<Candidate> roots = refine(cfg, options.branch, coarse, tol, window);

  // Close pairs: rescan their neighbourhood ten times finer so that two
  // nearby levels are not merged into one.
  const double h = (window.second - window.first) / options.n_grid;
  std::vector<Candidate> merged;
  for (std::size_t i = 0; i < roots.size();) {
    std::size_t j = i;
    while (j + 1 < roots.size() && roots[j + 1].energy - roots[j].energy < 5.0 * h) ++j;
    if (j == i) {
      merged.push_back(roots[i]);
    } else {
      const double lo = std::max(window.first, roots[i].energy - 5.0 * h);
      const double hi = std::min(window.second, roots[j].energy + 5.0 * h);
      const int n = static_cast<int>(std::ceil((hi - lo) / (h / 10.0)));
      const std::vector<Candidate> fine =
          refine(cfg, options.branch, scan(cfg, options.branch, lo, hi, n), tol, window);
      if (fine.size() >= j - i + 1) {
        merged.insert(merged.end(), fine.begin(), fine.end());
      } else {
        merged.insert(merged.end(), roots.begin() + static_cast<std::ptrdiff_t>(i),
                      roots.begin() + static_cast<std::ptrdiff_t>(j + 1));
      }
    }
    i = j + 1;
  }

  std::sort(merged.begin(), merged.end(),
            [](const Candidate& a, const Candidate& b) { return a.energy < b.energy; });
  BoundStateSpectrum spectrum;
  spectrum.config = cfg;
  spectrum.tolerance = tol;
  for (const Candidate& c : merged) {
    if (!spectrum.energies.empty() && c.energy - spectrum.energies.back() < 1e-12) continue;
    spectrum.energies.push_back(c.energy);
    spectrum.residuals.push_back(c.residual);
  }
  spectrum.count = static_cast<int>(spectrum.energies.size());
  return spectrum;
}

}  // namespace wsdirac
