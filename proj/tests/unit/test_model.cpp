#include <doctest.h>

#include <cmath>
#include <random>

#include "reference_values.hpp"
#include "wsdirac/errors.hpp"
#include "wsdirac/model.hpp"

using namespace wsdirac;

namespace {

const PhysicalConfig kFig1{};

double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

PhysicalConfig random_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PhysicalConfig c;
  c.m0 = 0.1 + u(rng);
  c.m1 = 0.2 * c.m0 * u(rng);
  c.v0 = 0.1 + 3.0 * u(rng);
  c.alpha = 1.0 + 10.0 * u(rng);
  c.half_width = 5.0 / c.alpha + 10.0 * u(rng);
  return c;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(kFig1).empty());
  PhysicalConfig c = kFig1;
  c.m0 = 0.0;
  CHECK_THROWS_AS(validate(c), DomainError);
  c = kFig1;
  c.m1 = -0.1;
  CHECK_THROWS_AS(validate(c), DomainError);
  c = kFig1;
  c.v0 = -1.0;
  CHECK_THROWS_AS(validate(c), DomainError);
  c = kFig1;
  c.half_width = 0.5;
  CHECK(validate(c).size() == 1);
  c.m1 = 0.3;
  CHECK(validate(c).size() == 2);
}

TEST_CASE("profile and its derivative") {
  CHECK(profile(kFig1, 10.0) == doctest::Approx(0.5));
  CHECK(profile(kFig1, -10.0) == doctest::Approx(0.5));
  CHECK(profile(kFig1, 0.0) == doctest::Approx(1.0).epsilon(1e-20));
  CHECK(profile(kFig1, 1e4) == 0.0);
  for (double x : {-12.0, -9.7, -3.0, 2.0, 9.9, 11.3}) {
    const double h = 1e-5;
    const double numeric = (profile(kFig1, x + h) - profile(kFig1, x - h)) / (2 * h);
    CHECK(profile_derivative(kFig1, x) == doctest::Approx(numeric).epsilon(1e-8));
  }
  CHECK(profile_derivative(kFig1, -1e-9) > 0.0);
  CHECK(profile_derivative(kFig1, 1e-9) < 0.0);
}

TEST_CASE("barrier exponents") {
  const ScatteringExponents x = exponents(kFig1, ProblemKind::Barrier, 1.0);
  CHECK(x.k.real() == doctest::Approx(std::sqrt(0.84)).epsilon(1e-15));
  CHECK(x.mu.real() == 0.0);
  CHECK(x.mu.imag() == doctest::Approx(std::sqrt(0.84) / 5.0).epsilon(1e-15));

  const ScatteringExponents y = exponents(kFig1, ProblemKind::Barrier, 0.5);
  CHECK(y.nu.real() == 0.0);
  CHECK(y.nu.imag() == doctest::Approx(std::sqrt(0.33) / 5.0).epsilon(1e-14));

  // evanescent interior: nu real
  const ScatteringExponents z = exponents(kFig1, ProblemKind::Barrier, 1.0);
  CHECK(z.nu.imag() == 0.0);
  CHECK(z.nu.real() < 0.0);
}

TEST_CASE("exponent domain and threshold errors") {
  CHECK_THROWS_AS(exponents(kFig1, ProblemKind::Barrier, 0.3), DomainError);
  CHECK_THROWS_AS(exponents(kFig1, ProblemKind::Barrier, 0.4), ThresholdError);
  CHECK_THROWS_AS(exponents(kFig1, ProblemKind::Barrier, -0.4), ThresholdError);
  CHECK_THROWS_AS(exponents(kFig1, ProblemKind::Barrier, 0.8), ThresholdError);  // (E - V0)^2 = m0^2
  CHECK_THROWS_AS(exponents(kFig1, ProblemKind::Well, 0.41), DomainError);
  CHECK_NOTHROW(exponents(kFig1, ProblemKind::Well, 0.4));
}

TEST_CASE("well exponents and mu branch") {
  const double e = 0.13;
  const ScatteringExponents d = exponents(kFig1, ProblemKind::Well, e);
  const ScatteringExponents p = exponents(kFig1, ProblemKind::Well, e, MuBranch::AsPrinted);
  const double kappa = std::sqrt(0.16 - e * e) / 5.0;
  CHECK(p.mu.real() == doctest::Approx(-kappa).epsilon(1e-15));
  CHECK(d.mu.real() == doctest::Approx(kappa).epsilon(1e-15));
  CHECK(d.nu == p.nu);

  const ScatteringExponents edge = exponents(kFig1, ProblemKind::Well, kFig1.m0);
  CHECK(edge.mu == Complex(0.0, 0.0));
  CHECK(triples(edge).left_plus.c == Complex(1.0, 0.0));
}

TEST_CASE("sigma and delta") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const PhysicalConfig c = random_config(rng);
    CHECK(sigma_for(c, c.v0) == delta_for(c, -c.v0));
    CHECK(delta_for(c, c.v0) == sigma_for(c, -c.v0));
  }
  // m1 = 0: sigma = 1/2 + (1/2 + i V0/alpha)
  const Complex s = sigma_for(kFig1, kFig1.v0);
  CHECK(std::abs(s - Complex(1.0, 1.2 / 5.0)) < 1e-15);
}

TEST_CASE("triples") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const PhysicalConfig c = random_config(rng);
    const double e = c.m0 * (1.05 + 2.0 * std::uniform_real_distribution<double>(0, 1)(rng));
    ScatteringExponents x;
    try {
      x = exponents(c, ProblemKind::Barrier, e);
    } catch (const ThresholdError&) {
      continue;
    }
    const SolutionTriples t = triples(x);
    CHECK(t.left_plus.c == 1.0 + 2.0 * x.mu);
    CHECK(t.left_minus.c == 1.0 - 2.0 * x.mu);
    CHECK(std::abs(t.left_plus.a - t.left_plus.b - (2.0 * x.sigma - 1.0)) < 1e-14);
    CHECK(std::abs(t.right_minus.a - t.right_minus.b - (2.0 * x.delta - 1.0)) < 1e-14);
    CHECK(std::abs(t.left_plus.c - t.left_plus.a - t.left_plus.b + 2.0 * x.nu) < 1e-14);
  }
  const ScatteringExponents zero = low_momentum_exponents(kFig1, ProblemKind::Barrier, EnergySign::Plus);
  CHECK(triples(zero).left_plus.c == Complex(1.0, 0.0));
  CHECK(triples(zero).right_plus.c == Complex(1.0, 0.0));
}

TEST_CASE("barrier with v0 -> -v0 equals the well at E = +-m0") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const PhysicalConfig c = random_config(rng);
    PhysicalConfig flipped = c;
    flipped.v0 = -c.v0;
    for (EnergySign s : {EnergySign::Plus, EnergySign::Minus}) {
      ScatteringExponents b, w;
      try {
        b = low_momentum_exponents(flipped, ProblemKind::Barrier, s);
        w = low_momentum_exponents(c, ProblemKind::Well, s);
      } catch (const ThresholdError&) {
        continue;
      }
      CHECK(b.nu == w.nu);
      CHECK(b.sigma == w.sigma);
      CHECK(b.delta == w.delta);
      const SolutionTriples tb = triples(b), tw = triples(w);
      CHECK(tb.left_plus.a == tw.left_plus.a);
      CHECK(tb.left_plus.b == tw.left_plus.b);
      CHECK(tb.right_plus.a == tw.right_plus.a);
    }
  }
}

TEST_CASE("matching coefficients against the high-precision values") {
  const MatchingCoefficients c = matching(kFig1, ProblemKind::Barrier, 0.6);
  CHECK(c.count() == 6);
  const Complex want_const[6] = {reference::kFig1ConstS1, reference::kFig1ConstS2,
                                 reference::kFig1ConstS3, reference::kFig1ConstS4,
                                 reference::kFig1ConstS5, reference::kFig1ConstS6};
  for (int i = 0; i < 6; ++i) CHECK(rel_err(c.s(i + 1), want_const[i]) < 1e-12);

  PhysicalConfig pdm = kFig1;
  pdm.m1 = 0.01;
  const MatchingCoefficients d = matching(pdm, ProblemKind::Barrier, 0.6);
  const Complex want_pdm[6] = {reference::kFig1PdmS1, reference::kFig1PdmS2,
                               reference::kFig1PdmS3, reference::kFig1PdmS4,
                               reference::kFig1PdmS5, reference::kFig1PdmS6};
  for (int i = 0; i < 6; ++i) CHECK(rel_err(d.s(i + 1), want_pdm[i]) < 1e-12);

  CHECK_THROWS_AS(c.s(0), DomainError);
  CHECK_THROWS_AS(c.s(7), DomainError);
  CHECK(matching(kFig1, ProblemKind::Well, 0.1).count() == 4);
}

TEST_CASE("conjugation symmetry of the matching coefficients") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const PhysicalConfig c = random_config(rng);
    const double e = c.m0 * (1.05 + 2.0 * std::uniform_real_distribution<double>(0, 1)(rng));
    ScatteringExponents x;
    MatchingCoefficients m;
    try {
      x = exponents(c, ProblemKind::Barrier, e);
      m = matching(x);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    // above threshold conj(mu) = -mu
    CHECK(std::abs(std::conj(x.mu) + x.mu) < 1e-15 * std::abs(x.mu));
    ScatteringExponents y = x;
    y.mu = -x.mu;
    y.nu = std::conj(x.nu);
    y.sigma = std::conj(x.sigma);
    y.delta = std::conj(x.delta);
    const MatchingCoefficients n = matching(y);
    for (int j = 1; j <= 6; ++j) CHECK(rel_err(n.s(j), std::conj(m.s(j))) < 1e-10);
  }
  CHECK(checked > 150);
}

TEST_CASE("matching coefficients stay finite in the scattering regime") {
  for (double e = 0.41; e < 3.0; e += 0.0173) {
    MatchingCoefficients m;
    try {
      m = matching(kFig1, ProblemKind::Barrier, e);
    } catch (const ThresholdError&) {
      continue;
    }
    for (int i = 1; i <= 6; ++i) {
      CHECK(std::isfinite(std::abs(m.s(i))));
    }
  }
}
