#include <doctest.h>

#include <cmath>

#include "reference_values.hpp"
#include "wsdirac/bound_states.hpp"
#include "wsdirac/errors.hpp"
#include "wsdirac/oracle.hpp"
#include "wsdirac/supercriticality.hpp"

using namespace wsdirac;

namespace {

const PhysicalConfig kFig6{0.5, 0.0, 1.0, 10.0, 5.0};
const PhysicalConfig kFig5{0.5, 0.1, 1.0, 10.0, 5.0};

double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("window") {
  CHECK(bound_state_window(kFig6) == std::pair<double, double>(-0.5, 0.5));
  PhysicalConfig shallow = kFig6;
  shallow.v0 = 0.3;
  CHECK(bound_state_window(shallow).first == doctest::Approx(0.2));
}

TEST_CASE("eigen condition against the high-precision values") {
  const PhysicalConfig c{0.5, 0.07, 0.8, 8.0, 6.0};
  CHECK(rel_err(eigen_condition(c, 0.13), reference::kEigenDecaying) < 1e-10);
  CHECK(rel_err(eigen_condition(c, 0.13, MuBranch::AsPrinted), reference::kEigenPrinted) < 1e-10);
}

TEST_CASE("eigen condition domain") {
  CHECK_THROWS_AS(eigen_condition(kFig6, 0.6), DomainError);
  CHECK_THROWS_AS(eigen_condition(kFig6, -0.6), DomainError);
  CHECK_THROWS_AS(eigen_condition(kFig6, 0.5 - 1e-11), ThresholdError);
  CHECK_THROWS_AS(eigen_condition(kFig6, -0.5 + 1e-11), ThresholdError);
  const Complex mid = eigen_condition(kFig5, 0.0);
  CHECK(std::isfinite(mid.real()));
  CHECK(std::isfinite(mid.imag()));
}

TEST_CASE("eigen condition approaches the zero-momentum bound condition") {
  const Complex edge = eigen_condition(kFig5, 0.5 - 1e-9);
  const Complex limit = -bound_condition_at(kFig5, EnergySign::Plus);
  CHECK(rel_err(edge, limit) < 1e-4);
}

TEST_CASE("constant-mass spectrum agrees with shooting") {
  const BoundStateSpectrum s = find_bound_states(kFig6);
  const std::vector<double> shot = shooting_bound_states(kFig6, 400);
  REQUIRE(s.count == 5);
  REQUIRE(shot.size() == 5);
  for (int i = 0; i < s.count; ++i) {
    CHECK(std::abs(s.energies[static_cast<std::size_t>(i)] - shot[static_cast<std::size_t>(i)]) < 1e-6);
  }
  CHECK(s.energies.front() == doctest::Approx(-0.41775719465).epsilon(1e-9));
}

TEST_CASE("spectrum invariants") {
  for (const PhysicalConfig& c : {kFig5, kFig6}) {
    const BoundStateSpectrum s = find_bound_states(c);
    const auto [lo, hi] = bound_state_window(c);
    CHECK(s.tolerance > 0.0);
    CHECK(s.count == static_cast<int>(s.energies.size()));
    CHECK(std::is_sorted(s.energies.begin(), s.energies.end()));
    for (std::size_t i = 0; i < s.energies.size(); ++i) {
      const Complex f = eigen_condition(c, s.energies[i]);
      CHECK(std::max(std::abs(f.real()), std::abs(f.imag())) <= s.tolerance);
      CHECK(s.residuals[i] == doctest::Approx(std::abs(f)));
      CHECK(s.energies[i] > lo + 1e-8);
      CHECK(s.energies[i] < hi - 1e-8);
    }
  }
}

TEST_CASE("mass variation does not lose states") {
  CHECK(find_bound_states(kFig5).count >= find_bound_states(kFig6).count);
}

TEST_CASE("grid doubling leaves the spectrum unchanged") {
  BoundStateOptions coarse;
  BoundStateOptions fine;
  fine.n_grid = 2 * coarse.n_grid;
  for (const PhysicalConfig& c : {kFig5, kFig6}) {
    const BoundStateSpectrum a = find_bound_states(c, coarse);
    const BoundStateSpectrum b = find_bound_states(c, fine);
    REQUIRE(a.count == b.count);
    for (std::size_t i = 0; i < a.energies.size(); ++i) {
      CHECK(std::abs(a.energies[i] - b.energies[i]) <= 1e-9);
    }
  }
}

TEST_CASE("deeper wells keep at least as many states below 2 m0") {
  for (double v0 : {0.3, 0.5, 0.6, 0.8}) {
    PhysicalConfig c = kFig6;
    c.v0 = v0;
    const int base = find_bound_states(c).count;
    c.v0 = 1.2 * v0;
    CHECK(find_bound_states(c).count >= base);
  }
  // past 2 m0 the lowest level leaves through -m0
  PhysicalConfig c = kFig6;
  c.v0 = 1.2;
  CHECK(find_bound_states(c).count == 5);
  c.v0 = 1.44;
  CHECK(find_bound_states(c).count == 4);
  CHECK(shooting_bound_states(c, 2000).size() == 4);
}

TEST_CASE("a shallow one-dimensional well still binds one state") {
  PhysicalConfig c = kFig6;
  c.v0 = 0.005;
  const BoundStateSpectrum s = find_bound_states(c);
  REQUIRE(s.count == 1);
  CHECK(s.energies[0] > 0.499);
  const std::vector<double> shot = shooting_bound_states(c, 400);
  REQUIRE(shot.size() == 1);
  CHECK(std::abs(shot[0] - s.energies[0]) < 1e-8);
}

TEST_CASE("printed mu branch gives different zeros") {
  BoundStateOptions printed;
  printed.branch = MuBranch::AsPrinted;
  const BoundStateSpectrum p = find_bound_states(kFig6, printed);
  const BoundStateSpectrum d = find_bound_states(kFig6);
  bool differs = p.count != d.count;
  for (std::size_t i = 0; !differs && i < p.energies.size(); ++i) {
    differs = std::abs(p.energies[i] - d.energies[i]) > 1e-6;
  }
  CHECK(differs);
}

TEST_CASE("explicit tolerance") {
  BoundStateOptions strict;
  strict.tol = 1e-300;
  CHECK(find_bound_states(kFig6, strict).count == 0);
  BoundStateOptions bad;
  bad.n_grid = 10;
  CHECK_THROWS_AS(find_bound_states(kFig6, bad), DomainError);
}
