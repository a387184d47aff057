#include "wsdirac/special_fn.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wsdirac/errors.hpp"

namespace wsdirac::special {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// exp() of anything above this does not fit in a double.
constexpr double kMaxLogMagnitude = 709.78;

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex series = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    series += kLanczosCoefficients[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

// log sin(pi z) without overflowing for large |Im z|.
Complex log_sin_pi(Complex z) {
  if (std::abs(z.imag()) < 8.0) {
    return std::log(std::sin(kPi * z));
  }
  if (z.imag() < 0.0) {
    return std::conj(log_sin_pi(std::conj(z)));
  }
  // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}), |e^{2 i pi z}| = e^{-2 pi Im z}
  const Complex i_pi_z = Complex(0.0, kPi) * z;
  return std::log(Complex(0.0, 0.5)) - i_pi_z + std::log(1.0 - std::exp(2.0 * i_pi_z));
}

bool near_integer(Complex z) noexcept {
  return std::abs(z - std::round(z.real())) < kPoleTolerance;
}

}  // namespace

bool near_pole(Complex z) noexcept {
  return z.real() < 0.5 && std::round(z.real()) <= 0.0 && near_integer(z);
}

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: non-finite argument " + describe(z));
  }
  if (near_pole(z)) {
    throw PoleError("log_gamma: argument " + describe(z) + " is at a Gamma pole", z);
  }
  if (z.real() >= 0.5) {
    return lanczos_log_gamma(z);
  }
  return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

Complex log_gamma_ratio(std::span<const Complex> num, std::span<const Complex> den) {
  Complex acc = 0.0;
  for (const Complex& z : num) acc += log_gamma(z);
  for (const Complex& z : den) acc -= log_gamma(z);
  return acc;
}

Complex gamma_ratio(std::span<const Complex> num, std::span<const Complex> den) {
  const Complex log_value = log_gamma_ratio(num, den);
  if (log_value.real() > kMaxLogMagnitude) {
    throw OverflowError("gamma_ratio: magnitude exp(" + std::to_string(log_value.real()) +
                        ") exceeds double range");
  }
  return std::exp(log_value);
}

Complex hyp2f1(const HypergeomTriple& t, Complex x) {
  if (!(std::abs(x) < 1.0)) {
    throw DomainError("hyp2f1: series needs |x| < 1, got " + describe(x));
  }
  if (near_pole(t.c)) {
    throw PoleError("hyp2f1: c = " + describe(t.c) + " is a nonpositive integer", t.c);
  }
  // tail of a slowly decaying series is ~ term / (1 - |x|)
  const double tail = 1.0 / (1.0 - std::abs(x));
  Complex sum = 1.0;
  Complex carry = 0.0;
  Complex term = 1.0;
  int small_terms = 0;
  for (int n = 0; n < kSeriesMaxTerms; ++n) {
    const double dn = static_cast<double>(n);
    const Complex ab = (t.a + dn) * (t.b + dn);
    term *= ab / ((t.c + dn) * (dn + 1.0)) * x;
    const Complex y = term - carry;
    const Complex next = sum + y;
    carry = (next - sum) - y;
    sum = next;
    if (std::abs(term) * tail <= kSeriesTolerance * std::abs(sum)) {
      if (++small_terms == 2) return sum;
    } else {
      small_terms = 0;
    }
  }
  throw NonConvergence("hyp2f1: no convergence after " + std::to_string(kSeriesMaxTerms) +
                       " terms at x = " + describe(x));
}

Complex log_connection_direct(const HypergeomTriple& t) {
  const std::array<Complex, 2> num = {t.c, t.c - t.a - t.b};
  const std::array<Complex, 2> den = {t.c - t.a, t.c - t.b};
  return log_gamma_ratio(num, den);
}

Complex log_connection_crossed(const HypergeomTriple& t) {
  const std::array<Complex, 2> num = {t.c, t.a + t.b - t.c};
  const std::array<Complex, 2> den = {t.a, t.b};
  return log_gamma_ratio(num, den);
}

Complex connect_at_one_complement(const HypergeomTriple& t, Complex w) {
  if (!(std::abs(w) < 1.0)) {
    throw DomainError("connect_at_one: needs |1 - x| < 1, got 1 - x = " + describe(w));
  }
  const Complex s = t.c - t.a - t.b;
  if (near_integer(s)) {
    throw DegenerateParameters("connect_at_one: c - a - b = " + describe(s) +
                               " is an integer (logarithmic case)");
  }
  if (near_pole(t.c)) {
    throw PoleError("connect_at_one: c = " + describe(t.c) + " is a nonpositive integer", t.c);
  }

  // A pole in a denominator Gamma makes that whole coefficient vanish.
  Complex regular = 0.0;
  if (!near_pole(t.c - t.a) && !near_pole(t.c - t.b)) {
    const std::array<Complex, 2> num = {t.c, s};
    const std::array<Complex, 2> den = {t.c - t.a, t.c - t.b};
    regular = gamma_ratio(num, den) * hyp2f1({t.a, t.b, 1.0 - s}, w);
  }

  Complex singular = 0.0;
  if (!near_pole(t.a) && !near_pole(t.b)) {
    if (w == Complex(0.0)) {
      if (s.real() <= 0.0) {
        throw DomainError("connect_at_one: 2F1 diverges at x = 1 when Re(c - a - b) <= 0");
      }
    } else {
      const Complex log_coefficient = log_connection_crossed(t) + s * std::log(w);
      if (log_coefficient.real() > kMaxLogMagnitude) {
        throw OverflowError("connect_at_one: singular term overflows");
      }
      singular = std::exp(log_coefficient) * hyp2f1({t.c - t.a, t.c - t.b, s + 1.0}, w);
    }
  }
  return regular + singular;
}

Complex connect_at_one(const HypergeomTriple& t, Complex x) {
  return connect_at_one_complement(t, 1.0 - x);
}

}  // namespace wsdirac::special
