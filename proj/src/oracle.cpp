#include "wsdirac/oracle.hpp"

#include <algorithm>
#include <array>
#include <boost/math/tools/toms748_solve.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numeric>

#include "detail.hpp"
#include "wsdirac/errors.hpp"
#include "wsdirac/scattering.hpp"

namespace wsdirac {
namespace {

namespace odeint = boost::numeric::odeint;

// (Re phi, Im phi, Re w, Im w) with w = phi' or w = chi depending on mode.
using State = std::array<double, 4>;

Complex first(const State& s) { return {s[0], s[1]}; }
Complex second(const State& s) { return {s[2], s[3]}; }
State pack(Complex phi, Complex w) { return {phi.real(), phi.imag(), w.real(), w.imag()}; }

struct Equation {
  PhysicalConfig cfg;
  double energy;
  double strength;  // signed potential strength
  OracleMode mode;

  void operator()(const State& s, State& ds, double x) const {
    const double f = profile(cfg, x);
    const double df = profile_derivative(cfg, x);
    const double v = strength * f;
    const double dv = strength * df;
    const double m = cfg.m0 + cfg.m1 * f;
    const double dm = cfg.m1 * df;
    const double kinetic = energy - v;
    const Complex phi = first(s);
    const Complex w = second(s);
    const Complex i(0.0, 1.0);

    Complex dphi;
    Complex dw;
    switch (mode) {
      case OracleMode::Reduced:
        dphi = w;
        dw = -(kinetic * kinetic - m * m + i * dv) * phi;
        break;
      case OracleMode::FullWithMassDerivative: {
        const double log_dm = dm / m;
        dphi = w;
        dw = log_dm * w - (kinetic * kinetic - m * m + i * dv + i * kinetic * log_dm) * phi;
        break;
      }
      case OracleMode::FullCoupled:
        dphi = i * kinetic * phi - i * m * w;
        dw = -i * kinetic * w + i * m * phi;
        break;
    }
    ds = pack(dphi, dw);
  }
};

// Integrates through `times` (monotone, times[0] = start), splitting at the
// x = 0 kink, and returns the state at every requested time.
std::vector<State> propagate(const Equation& eq, State start, const std::vector<double>& times,
                             const IntegrationSettings& settings) {
  std::vector<State> out;
  out.reserve(times.size());
  out.push_back(start);
  if (times.size() < 2) return out;

  const double direction = times.back() < times.front() ? -1.0 : 1.0;
  std::vector<double> path;
  std::vector<bool> requested;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i > 0 && times[i - 1] * direction < 0.0 && times[i] * direction > 0.0) {
      path.push_back(0.0);
      requested.push_back(false);
    }
    path.push_back(times[i]);
    requested.push_back(true);
  }

  auto stepper = odeint::make_controlled(settings.abs_tol, settings.rel_tol,
                                         odeint::runge_kutta_fehlberg78<State>());
  State state = start;
  std::size_t seg_begin = 0;
  try {
    while (seg_begin + 1 < path.size()) {
      std::size_t seg_end = seg_begin + 1;
      while (seg_end + 1 < path.size() && path[seg_end] != 0.0) ++seg_end;
      std::vector<State> seg_states;
      const auto observer = [&](const State& s, double) { seg_states.push_back(s); };
      odeint::integrate_times(stepper, eq, state, path.begin() + static_cast<std::ptrdiff_t>(seg_begin),
                              path.begin() + static_cast<std::ptrdiff_t>(seg_end + 1),
                              direction * 1e-3, observer, odeint::max_step_checker(1000000));
      for (std::size_t j = 1; j < seg_states.size(); ++j) {
        if (requested[seg_begin + j]) out.push_back(seg_states[j]);
      }
      state = seg_states.back();
      seg_begin = seg_end;
    }
  } catch (const odeint::odeint_error& e) {
    throw StiffnessError(std::string("oracle integration failed: ") + e.what());
  }
  for (const State& s : out) {
    for (double v : s) {
      if (!std::isfinite(v)) throw StiffnessError("oracle integration produced a non-finite state");
    }
  }
  return out;
}

Complex outgoing_partner(const PhysicalConfig& cfg, OracleMode mode, double energy, double k,
                         double x, Complex phi) {
  if (mode == OracleMode::FullCoupled) {
    return (energy - k) / (cfg.m0 + cfg.m1 * profile(cfg, x)) * phi;
  }
  return Complex(0.0, k) * phi;
}

struct LogisticLogs {
  double log_y;
  double log_one_minus_y;
};

// y = 1 / (1 + e^u): log y and log(1 - y) without cancellation.
LogisticLogs logistic_logs(double u) {
  if (u > 0.0) {
    const double l = std::log1p(std::exp(-u));
    return {-u - l, -l};
  }
  const double l = std::log1p(std::exp(u));
  return {-l, u - l};
}

Complex hypergeometric(const HypergeomTriple& t, const LogisticLogs& logs) {
  const double y = std::exp(logs.log_y);
  if (y <= 0.5) return special::hyp2f1(t, y);
  return special::connect_at_one_complement(t, std::exp(logs.log_one_minus_y));
}

}  // namespace

double resolved_x_max(const PhysicalConfig& cfg, const IntegrationSettings& settings) {
  const double x_max =
      settings.x_max > 0.0 ? settings.x_max : 4.0 * cfg.half_width + 20.0 / cfg.alpha;
  if (!(profile(cfg, x_max) < 1e-12)) {
    throw DomainError("oracle: x_max too small, potential has not decayed to 1e-12");
  }
  return x_max;
}

OracleScattering integrate_scattering(const PhysicalConfig& cfg, double energy,
                                      const IntegrationSettings& settings) {
  const double gap = energy * energy - cfg.m0 * cfg.m0;
  if (!(gap > kThresholdWindow)) {
    throw DomainError("integrate_scattering needs |E| > m0");
  }
  const double k = std::sqrt(gap);
  const double x_max = resolved_x_max(cfg, settings);
  const Equation eq{cfg, energy, cfg.v0, settings.mode};

  const Complex phi0 = std::exp(Complex(0.0, k * x_max));
  const State start = pack(phi0, outgoing_partner(cfg, settings.mode, energy, k, x_max, phi0));
  const State end = propagate(eq, start, {x_max, -x_max}, settings).back();

  const double x = -x_max;
  const Complex phi = first(end);
  const Complex w = second(end);
  Complex incident;
  Complex reflected;
  if (settings.mode == OracleMode::FullCoupled) {
    const double m = cfg.m0 + cfg.m1 * profile(cfg, x);
    incident = ((energy + k) * phi - m * w) / (2.0 * k) * std::exp(Complex(0.0, -k * x));
    reflected = (m * w - (energy - k) * phi) / (2.0 * k) * std::exp(Complex(0.0, k * x));
  } else {
    const Complex ik(0.0, k);
    incident = (ik * phi + w) / (2.0 * ik) * std::exp(Complex(0.0, -k * x));
    reflected = (ik * phi - w) / (2.0 * ik) * std::exp(Complex(0.0, k * x));
  }

  OracleScattering r;
  r.incident = incident;
  r.reflected = reflected;
  r.transmission = 1.0 / std::norm(incident);
  r.reflection = (energy + k) / (energy - k) * std::norm(reflected) / std::norm(incident);
  return r;
}

std::vector<Complex> integrate_wavefunction(const PhysicalConfig& cfg, double energy,
                                            std::span<const double> xs,
                                            const IntegrationSettings& settings) {
  const double gap = energy * energy - cfg.m0 * cfg.m0;
  if (!(gap > kThresholdWindow)) {
    throw DomainError("integrate_wavefunction needs |E| > m0");
  }
  const double k = std::sqrt(gap);
  const double x_max = resolved_x_max(cfg, settings);
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] > xs[b]; });

  std::vector<double> times = {x_max};
  for (std::size_t idx : order) {
    if (std::abs(xs[idx]) > x_max) throw DomainError("integrate_wavefunction: x outside domain");
    if (xs[idx] < times.back()) times.push_back(xs[idx]);
  }
  const Equation eq{cfg, energy, cfg.v0, settings.mode};
  const Complex phi0 = std::exp(Complex(0.0, k * x_max));
  const State start = pack(phi0, outgoing_partner(cfg, settings.mode, energy, k, x_max, phi0));
  const std::vector<State> states = propagate(eq, start, times, settings);

  std::vector<Complex> out(xs.size());
  std::size_t t = 0;
  for (std::size_t idx : order) {
    while (times[t] != xs[idx]) ++t;
    out[idx] = first(states[t]);
  }
  return out;
}

ShootingMismatch shoot_bound_state(const PhysicalConfig& cfg, double energy,
                                   const IntegrationSettings& settings) {
  const double lo = std::max(-cfg.m0, cfg.m0 - cfg.v0);
  if (!(energy > lo && energy < cfg.m0)) {
    throw DomainError("shoot_bound_state: E outside the bound-state window");
  }
  const double kappa = std::sqrt(cfg.m0 * cfg.m0 - energy * energy);
  const double x_max = resolved_x_max(cfg, settings);
  const Equation eq{cfg, energy, -cfg.v0, settings.mode};
  const Complex i(0.0, 1.0);

  // decaying boundary data: phi = 1, phi' = -+kappa
  const auto boundary = [&](double x, double slope) {
    if (settings.mode == OracleMode::FullCoupled) {
      const double m = cfg.m0 + cfg.m1 * profile(cfg, x);
      return pack(1.0, (energy + i * slope) / m);
    }
    return pack(1.0, slope);
  };
  const State right = propagate(eq, boundary(x_max, -kappa), {x_max, 0.0}, settings).back();
  const State left = propagate(eq, boundary(-x_max, kappa), {-x_max, 0.0}, settings).back();

  const Complex w = first(left) * second(right) - second(left) * first(right);
  const double norm = std::sqrt((std::norm(first(left)) + std::norm(second(left))) *
                                (std::norm(first(right)) + std::norm(second(right))));
  ShootingMismatch r;
  r.wronskian = w / norm;
  // PT symmetry pins the phase: real for the phi equations, imaginary for (phi, chi).
  r.mismatch = settings.mode == OracleMode::FullCoupled ? r.wronskian.imag() : r.wronskian.real();
  return r;
}

std::vector<double> shooting_bound_states(const PhysicalConfig& cfg, int n_grid,
                                          const IntegrationSettings& settings) {
  if (n_grid < 2) throw DomainError("shooting_bound_states: n_grid must be at least 2");
  const double lo = std::max(-cfg.m0, cfg.m0 - cfg.v0);
  const double hi = cfg.m0;
  const double h = (hi - lo) / n_grid;
  const auto mismatch = [&](double e) { return shoot_bound_state(cfg, e, settings).mismatch; };

  std::vector<double> roots;
  double prev_e = lo + 0.5 * h;
  double prev_m = mismatch(prev_e);
  for (int i = 1; i < n_grid; ++i) {
    const double e = lo + h * (i + 0.5);
    const double m = mismatch(e);
    if (prev_m == 0.0) {
      roots.push_back(prev_e);
    } else if ((prev_m < 0.0) != (m < 0.0) && m != 0.0) {
      boost::uintmax_t iterations = 200;
      const auto bracket = boost::math::tools::toms748_solve(
          mismatch, prev_e, e, prev_m, m, boost::math::tools::eps_tolerance<double>(50), iterations);
      roots.push_back(0.5 * (bracket.first + bracket.second));
    }
    prev_e = e;
    prev_m = m;
  }
  return roots;
}

Complex analytic_wavefunction(const PhysicalConfig& cfg, ProblemKind kind, double energy, double x,
                              MuBranch branch) {
  const ScatteringExponents ex = exponents(cfg, kind, energy, branch);
  const SolutionTriples t = triples(ex);
  const double a = cfg.alpha;
  const double len = cfg.half_width;

  if (kind == ProblemKind::Barrier) {
    if (x < 0.0) {
      const LogisticLogs g = logistic_logs(-a * (x + len));
      const AmplitudeRatios ratios = amplitude_ratios(cfg, energy);
      const Complex kept = std::exp(ex.mu * g.log_y + ex.nu * g.log_one_minus_y) *
                           hypergeometric(t.left_plus, g);
      const Complex other = std::exp(-ex.mu * g.log_y + ex.nu * g.log_one_minus_y) *
                            hypergeometric(t.left_minus, g);
      return kept + ratios.reflected * other;
    }
    const LogisticLogs g = logistic_logs(a * (x - len));
    const AmplitudeRatios ratios = amplitude_ratios(cfg, energy);
    return ratios.transmitted * std::exp(-ex.mu * g.log_y + ex.nu * g.log_one_minus_y) *
           hypergeometric(t.right_minus, g);
  }

  if (x < 0.0) {
    const LogisticLogs g = logistic_logs(-a * (x + len));
    return std::exp(ex.mu * g.log_y + ex.nu * g.log_one_minus_y) * hypergeometric(t.left_plus, g);
  }
  const MatchingCoefficients m = matching(ex);
  const Complex log_r3 = m.log_s[0] - m.log_s[1] - 2.0 * a * len * ex.nu;
  const LogisticLogs g = logistic_logs(a * (x - len));
  return detail::exp_checked(log_r3 + ex.mu * g.log_y + ex.nu * g.log_one_minus_y, "R3") *
         hypergeometric(t.right_plus, g);
}

}  // namespace wsdirac
