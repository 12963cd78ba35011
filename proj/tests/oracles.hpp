#pragma once

// Independent numerical oracles shared by the unit and acceptance tests.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "mevreg/eisenstein.hpp"
#include "mevreg/series.hpp"

namespace oracle {

using mevreg::Complex;

// f(iy) for any y > 0 from the two-sided expansion.
inline Complex value_on_axis(const mevreg::SidedSeries& f, double y) {
  if (y >= 1.0) return mevreg::evaluate_at(f.inf, y).value;
  // iy = -1/tau with tau = i/y.
  const double t = 1.0 / y;
  return std::pow(Complex(0.0, t), f.sigma_tau_power) * mevreg::evaluate_at(f.sigma, t).value;
}

// Brute-force q-series value: sum over the defining double series, no use of the
// stored coefficients.
inline Complex e_brute(int k, const mevreg::EllipticParam& x, Complex tau, int terms = 60) {
  using mevreg::kPi;
  const double x1 = x.x1.to_double(), x2 = x.x2.to_double();
  Complex sum = mevreg::constant_term({mevreg::Family::E, k, x});
  const Complex twopii(0.0, 2 * kPi);
  for (int m = 1; m <= terms; ++m) {
    for (int j = 0; j <= terms; ++j) {
      const double n_plus = x1 + j;
      if (n_plus > 0) {
        sum -= std::pow(n_plus, k - 1) * std::exp(twopii * (m * x2 + n_plus * m * tau));
      }
      const double n_minus = (x1 == 0.0 ? 1.0 : 1.0 - x1) + j;
      sum += ((k % 2 == 0) ? -1.0 : 1.0) * std::pow(n_minus, k - 1) * std::exp(twopii * (-m * x2 + n_minus * m * tau));
    }
  }
  return sum;
}

// Adaptive Gauss-Kronrod on geometric panels of [lo, hi].
inline double integrate(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-13) {
  using boost::math::quadrature::gauss_kronrod;
  double total = 0.0;
  for (double a = lo; a < hi;) {
    const double b = std::min(a * 2.0, hi);
    const double edge = (a < 1.0 && b > 1.0) ? 1.0 : b;
    total += gauss_kronrod<double, 31>::integrate(f, a, edge, 10, tol);
    a = edge;
  }
  return total;
}

inline Complex integrate_complex(const std::function<Complex(double)>& f, double lo, double hi) {
  const double re = integrate([&](double y) { return f(y).real(); }, lo, hi);
  const double im = integrate([&](double y) { return f(y).imag(); }, lo, hi);
  return {re, im};
}

// Random rational in (0, 1) with one of the given denominators.
inline mevreg::Rational random_fraction(std::mt19937& rng, const std::vector<int>& denominators) {
  std::uniform_int_distribution<std::size_t> pick(0, denominators.size() - 1);
  const int d = denominators[pick(rng)];
  std::uniform_int_distribution<int> num(1, d - 1);
  return mevreg::Rational(num(rng), d);
}

inline mevreg::EllipticParam random_point(std::mt19937& rng, const std::vector<int>& denominators) {
  return {random_fraction(rng, denominators), random_fraction(rng, denominators)};
}

}  // namespace oracle
