#pragma once

#include <complex>
#include <numbers>

#include "mevreg/rational.hpp"

namespace mevreg {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kTwoPiI{0.0, 2.0 * std::numbers::pi};

// Apery's constant and the derivative of the Riemann zeta function at -2.
inline constexpr long double kZeta3 = 1.202056903159594285399738161511449990765L;
inline constexpr long double kZetaPrimeMinus2 = -0.030448457058393270780251530471154776647L;

// exp(2 pi i r), reduced exactly before the trigonometric call.
Complex unit(const Rational& r);

// Bernoulli polynomial B_k(t) for 0 <= k <= 6.
double bernoulli_poly(int k, double t);

// Euler Gamma for complex arguments (Lanczos with reflection).
Complex gamma(Complex s);

// Laurent data at a point: residue of a simple pole and the constant term.
// Away from poles the residue is zero and the constant is the value.
struct Laurent {
  Complex residue{0.0, 0.0};
  Complex constant{0.0, 0.0};
};

// sum_{n > 0, n = y mod 1} n^{-s}; y = 0 gives the Riemann zeta function.
Complex hurwitz_zeta(const Rational& y, Complex s);
Laurent hurwitz_zeta_laurent(const Rational& y, Complex s);

// sum_{n > 0} e(n y) n^{-s}.
Complex periodic_zeta(const Rational& y, Complex s);
Laurent periodic_zeta_laurent(const Rational& y, Complex s);

// Bloch-Wigner dilogarithm. Arguments with an infinite component stand for
// the point at infinity.
double bloch_wigner(Complex z);

struct IncompleteGamma {
  Complex value{0.0, 0.0};
  bool underflow = false;
};

// Gamma(s, x) = int_x^inf t^{s-1} e^{-t} dt for x > 0.
IncompleteGamma upper_incomplete_gamma(Complex s, double x);

}  // namespace mevreg
