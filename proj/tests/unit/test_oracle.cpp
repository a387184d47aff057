#include <doctest.h>

#include <cmath>
#include <vector>

#include "wsdirac/bound_states.hpp"
#include "wsdirac/errors.hpp"
#include "wsdirac/oracle.hpp"
#include "wsdirac/scattering.hpp"

using namespace wsdirac;

namespace {

const PhysicalConfig kFig1{};
const PhysicalConfig kFig6{0.5, 0.0, 1.0, 10.0, 5.0};

IntegrationSettings in_mode(OracleMode m) {
  IntegrationSettings s;
  s.mode = m;
  return s;
}

}  // namespace

TEST_CASE("domain size") {
  CHECK(resolved_x_max(kFig1, {}) == doctest::Approx(44.0));
  IntegrationSettings s;
  s.x_max = 12.0;
  CHECK_THROWS_AS(resolved_x_max(kFig1, s), DomainError);
  s.x_max = 20.0;
  CHECK(resolved_x_max(kFig1, s) == 20.0);
}

TEST_CASE("free particle passes untouched") {
  PhysicalConfig c = kFig1;
  c.v0 = 0.0;
  for (OracleMode m : {OracleMode::Reduced, OracleMode::FullCoupled, OracleMode::FullWithMassDerivative}) {
    const OracleScattering o = integrate_scattering(c, 1.0, in_mode(m));
    CHECK(o.transmission == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(o.reflection < 1e-8);
  }
}

TEST_CASE("analytic and integrated transmission agree") {
  for (double m1 : {0.0, 0.01}) {
    PhysicalConfig c = kFig1;
    c.m1 = m1;
    for (double e : {0.45, 0.6, 0.75, 1.0, 1.19}) {
      CHECK(std::abs(reflection_transmission(c, e).transmission -
                     integrate_scattering(c, e).transmission) <= 1e-8);
    }
  }
}

TEST_CASE("the three modes coincide for constant mass") {
  for (double e : {0.45, 0.6, 1.7}) {
    const double reduced = integrate_scattering(kFig1, e).transmission;
    CHECK(std::abs(integrate_scattering(kFig1, e, in_mode(OracleMode::FullCoupled)).transmission -
                   reduced) <= 1e-6);
    CHECK(std::abs(integrate_scattering(kFig1, e, in_mode(OracleMode::FullWithMassDerivative))
                       .transmission -
                   reduced) <= 1e-6);
  }
}

TEST_CASE("dropped mass-derivative terms change T at first order in m1") {
  double worst = 0.0;
  for (double m1 : {0.005, 0.01, 0.02}) {
    PhysicalConfig c = kFig1;
    c.m1 = m1;
    for (double e : {0.45, 0.6, 0.75, 1.1}) {
      const double reduced = integrate_scattering(c, e).transmission;
      const double full =
          integrate_scattering(c, e, in_mode(OracleMode::FullWithMassDerivative)).transmission;
      worst = std::max(worst, std::abs(full - reduced) / m1);
    }
  }
  CHECK(worst > 0.0);
  CHECK(worst <= 10.0);
}

TEST_CASE("flux conservation of the integrator") {
  PhysicalConfig pdm = kFig1;
  pdm.m1 = 0.01;
  for (double e : {0.45, 0.6, 1.0}) {
    for (OracleMode m : {OracleMode::Reduced, OracleMode::FullCoupled, OracleMode::FullWithMassDerivative}) {
      const OracleScattering o = integrate_scattering(kFig1, e, in_mode(m));
      CHECK(std::abs(o.reflection + o.transmission - 1.0) <= 1e-8);
    }
    // with m(x) varying only the complete equations conserve flux
    for (OracleMode m : {OracleMode::FullCoupled, OracleMode::FullWithMassDerivative}) {
      const OracleScattering o = integrate_scattering(pdm, e, in_mode(m));
      CHECK(std::abs(o.reflection + o.transmission - 1.0) <= 1e-8);
    }
  }
}

TEST_CASE("scattering preconditions") {
  CHECK_THROWS_AS(integrate_scattering(kFig1, 0.3), DomainError);
  CHECK_THROWS_AS(integrate_scattering(kFig1, 0.4), DomainError);
  IntegrationSettings s;
  s.rel_tol = 1e-30;
  s.abs_tol = 1e-300;
  CHECK_THROWS_AS(integrate_scattering(kFig1, 0.6, s), StiffnessError);
}

TEST_CASE("analytic wavefunction: asymptote, continuity and shape") {
  const double e = 0.6;
  const double k = std::sqrt(e * e - kFig1.m0 * kFig1.m0);
  const double x_max = resolved_x_max(kFig1, {});
  const AmplitudeRatios ratios = amplitude_ratios(kFig1, e);

  const double x = -x_max;
  const Complex asymptote = std::exp(Complex(0.0, k * (x + kFig1.half_width))) +
                            ratios.reflected * std::exp(Complex(0.0, -k * (x + kFig1.half_width)));
  CHECK(std::abs(analytic_wavefunction(kFig1, ProblemKind::Barrier, e, x) - asymptote) <= 1e-8);

  const Complex left = analytic_wavefunction(kFig1, ProblemKind::Barrier, e, -1e-300);
  const Complex right = analytic_wavefunction(kFig1, ProblemKind::Barrier, e, 0.0);
  CHECK(std::abs(left - right) <= 1e-8 * std::abs(left));

  std::vector<double> xs;
  for (double s = -kFig1.half_width; s <= kFig1.half_width; s += 0.5) xs.push_back(s);
  const std::vector<Complex> numeric = integrate_wavefunction(kFig1, e, xs);
  const Complex scale = numeric[0] / analytic_wavefunction(kFig1, ProblemKind::Barrier, e, xs[0]);
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Complex a = scale * analytic_wavefunction(kFig1, ProblemKind::Barrier, e, xs[i]);
    worst = std::max(worst, std::abs(a - numeric[i]) / std::abs(numeric[i]));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("well wavefunction is continuous at a bound state") {
  const BoundStateSpectrum s = find_bound_states(kFig6);
  REQUIRE(s.count > 0);
  for (double e : s.energies) {
    const Complex left = analytic_wavefunction(kFig6, ProblemKind::Well, e, -1e-300);
    const Complex right = analytic_wavefunction(kFig6, ProblemKind::Well, e, 0.0);
    CHECK(std::abs(left - right) <= 1e-6 * std::abs(left));
    // and decays like exp(-kappa |x|) on both sides
    const double kappa = std::sqrt(kFig6.m0 * kFig6.m0 - e * e);
    for (double x : {-15.0, 15.0}) {
      const double near = std::abs(analytic_wavefunction(kFig6, ProblemKind::Well, e, x));
      const double far = std::abs(analytic_wavefunction(kFig6, ProblemKind::Well, e, 2.0 * x));
      CHECK(far / near == doctest::Approx(std::exp(-15.0 * kappa)).epsilon(1e-6));
    }
  }
}

TEST_CASE("shooting reproduces the eigenvalue-condition roots") {
  const BoundStateSpectrum s = find_bound_states(kFig6);
  for (OracleMode m : {OracleMode::Reduced, OracleMode::FullCoupled}) {
    const std::vector<double> shot = shooting_bound_states(kFig6, 400, in_mode(m));
    REQUIRE(shot.size() == s.energies.size());
    for (std::size_t i = 0; i < shot.size(); ++i) CHECK(std::abs(shot[i] - s.energies[i]) < 1e-6);
  }
}

TEST_CASE("deep square-like well") {
  // alpha L = 50; lowest level sits below the infinite-well estimate
  const PhysicalConfig c{10.0, 0.0, 0.5, 10.0, 5.0};
  const std::vector<double> shot = shooting_bound_states(c, 2000);
  REQUIRE(!shot.empty());
  const double floor = c.m0 - c.v0;
  const double box = M_PI * M_PI / (2.0 * c.m0 * 4.0 * c.half_width * c.half_width);
  CHECK(shot.front() > floor);
  CHECK(shot.front() < floor + box);
  CHECK(shot.front() > floor + 0.5 * box);
}

TEST_CASE("shooting preconditions") {
  CHECK_THROWS_AS(shoot_bound_state(kFig6, 0.5), DomainError);
  CHECK_THROWS_AS(shoot_bound_state(kFig6, -0.6), DomainError);
  CHECK_THROWS_AS(shooting_bound_states(kFig6, 1), DomainError);
  const ShootingMismatch m = shoot_bound_state(kFig6, 0.1);
  CHECK(std::abs(m.wronskian.imag()) < 1e-12);
  CHECK(m.mismatch == m.wronskian.real());
}
