#pragma once

#include <complex>
#include <span>

namespace wsdirac {

using Complex = std::complex<double>;

/// Parameters (a, b, c) of one Gauss hypergeometric branch 2F1(a, b; c; x).
struct HypergeomTriple {
  Complex a;
  Complex b;
  Complex c;
};

namespace special {

/// Distance below which an argument counts as sitting on a Gamma pole.
inline constexpr double kPoleTolerance = 1e-9;

/// Relative term size that ends a hypergeometric series (needs two in a row).
inline constexpr double kSeriesTolerance = 1e-13;
inline constexpr int kSeriesMaxTerms = 100000;

/// True when z is within kPoleTolerance of a nonpositive integer.
bool near_pole(Complex z) noexcept;

/// log Gamma(z) via the g = 7, 9-term Lanczos approximation, with the
/// reflection formula for Re z < 1/2. The branch agrees with the principal
/// log-gamma on the right half plane; callers should only rely on exp().
///
/// Throws PoleError when z is within kPoleTolerance of 0, -1, -2, ...
Complex log_gamma(Complex z);

/// log of prod Gamma(num) / prod Gamma(den), summed in log space.
Complex log_gamma_ratio(std::span<const Complex> num, std::span<const Complex> den);

/// prod Gamma(num) / prod Gamma(den). Stays finite when the individual
/// Gamma values would overflow; throws OverflowError if the ratio itself
/// does not fit in a double.
Complex gamma_ratio(std::span<const Complex> num, std::span<const Complex> den);

/// Gauss series for 2F1(a, b; c; x), |x| < 1.
///
/// Stops once |term / partial sum| / (1 - |x|) < kSeriesTolerance on two
/// consecutive terms. Throws NonConvergence after kSeriesMaxTerms, PoleError if c is a
/// nonpositive integer and DomainError for |x| >= 1.
Complex hyp2f1(const HypergeomTriple& t, Complex x);

/// 2F1(a, b; c; x) for x near 1 through the two-term connection formula,
/// each term summed as a Gauss series in 1 - x. Requires |1 - x| < 1 and a
/// non-integer c - a - b (DegenerateParameters otherwise).
Complex connect_at_one(const HypergeomTriple& t, Complex x);

/// Same as connect_at_one but takes w = 1 - x directly, so that arguments
/// extremely close to 1 keep full relative precision in w.
Complex connect_at_one_complement(const HypergeomTriple& t, Complex w);

/// log[Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))], the coefficient of
/// the regular term of the connection formula.
Complex log_connection_direct(const HypergeomTriple& t);

/// log[Gamma(c) Gamma(a+b-c) / (Gamma(a) Gamma(b))], the coefficient of the
/// (1-x)^(c-a-b) term.
Complex log_connection_crossed(const HypergeomTriple& t);

}  // namespace special
}  // namespace wsdirac
