#include "mevreg/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "mevreg/errors.hpp"

namespace mevreg {

namespace {

constexpr int kSplit = 30;          // Euler-Maclaurin split point
constexpr int kBernoulliTerms = 12;  // correction terms B_2 .. B_24

// B_{2j} for j = 1..12.
constexpr std::array<long double, kBernoulliTerms> kEvenBernoulli = {
    1.0L / 6,           -1.0L / 30,        1.0L / 42,          -1.0L / 30,
    5.0L / 66,          -691.0L / 2730,    7.0L / 6,           -3617.0L / 510,
    43867.0L / 798,     -174611.0L / 330,  854513.0L / 138,    -236364091.0L / 2730};

const std::array<double, kBernoulliTerms>& bernoulli_over_factorial() {
  static const auto table = [] {
    std::array<double, kBernoulliTerms> t{};
    long double fact = 1.0L;
    for (int j = 1; j <= kBernoulliTerms; ++j) {
      fact *= static_cast<long double>(2 * j - 1) * (2 * j);
      t[j - 1] = static_cast<double>(kEvenBernoulli[j - 1] / fact);
    }
    return t;
  }();
  return table;
}

Complex cpow_real_base(double base, Complex exponent) {
  return std::exp(exponent * std::log(base));
}

// Hurwitz zeta sum_{n>=0} (n + a)^{-s} for a in (0, 1], s != 1.
Complex hurwitz_em(double a, Complex s) {
  Complex sum = 0.0;
  for (int n = 0; n < kSplit; ++n) sum += cpow_real_base(n + a, -s);
  const double big = kSplit + a;
  const Complex big_ms = cpow_real_base(big, -s);
  sum += big * big_ms / (s - 1.0);
  sum += 0.5 * big_ms;
  Complex poch = s;
  Complex power = big_ms / big;
  const auto& coeff = bernoulli_over_factorial();
  for (int j = 1; j <= kBernoulliTerms; ++j) {
    sum += coeff[j - 1] * poch * power;
    poch *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
    power /= big * big;
  }
  return sum;
}

// Constant term of the Laurent expansion at s = 1, i.e. -digamma(a).
double hurwitz_em_constant_at_one(double a) {
  long double sum = 0.0L;
  for (int n = 0; n < kSplit; ++n) sum += 1.0L / (n + a);
  const long double big = kSplit + a;
  sum += -std::log(big) + 0.5L / big;
  long double power = 1.0L;
  for (int j = 1; j <= kBernoulliTerms; ++j) {
    power /= big * big;
    sum += kEvenBernoulli[j - 1] / (2 * j) * power;
  }
  return static_cast<double>(sum);
}

double representative(const Rational& y) {
  Rational f = y.frac();
  return f.is_zero() ? 1.0 : f.to_double();
}

bool is_one(Complex s) { return s.real() == 1.0 && s.imag() == 0.0; }

Complex reflected_hurwitz(const Rational& y, Complex s) {
  const Complex w = 1.0 - s;
  const Complex phase = Complex(0.0, kPi / 2) * w;
  return cpow_real_base(2 * kPi, s - 1.0) * gamma(w) *
         (std::exp(-phase) * periodic_zeta(y, w) + std::exp(phase) * periodic_zeta(-y, w));
}

}  // namespace

Complex unit(const Rational& r) {
  Rational f = r.frac();
  if (f.num() * 2 > f.den()) f -= 1;
  const double angle = 2.0 * kPi * f.to_double();
  if (f.is_zero()) return {1.0, 0.0};
  if (f == Rational(1, 2)) return {-1.0, 0.0};
  if (f == Rational(1, 4)) return {0.0, 1.0};
  if (f == Rational(-1, 4)) return {0.0, -1.0};
  return {std::cos(angle), std::sin(angle)};
}

double bernoulli_poly(int k, double t) {
  switch (k) {
    case 0: return 1.0;
    case 1: return t - 0.5;
    case 2: return t * t - t + 1.0 / 6;
    case 3: return t * (t * (t - 1.5) + 0.5);
    case 4: return t * t * (t * (t - 2.0) + 1.0) - 1.0 / 30;
    case 5: return t * (t * t * (t * (t - 2.5) + 5.0 / 3) - 1.0 / 6);
    case 6: return t * t * (t * t * (t * (t - 3.0) + 2.5) - 0.5) + 1.0 / 42;
    default: throw DomainError("bernoulli_poly supports 0 <= k <= 6, got " + std::to_string(k));
  }
}

Complex gamma(Complex s) {
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real())) {
    throw PoleError("Gamma has a pole at " + std::to_string(s.real()));
  }
  if (s.real() < 0.5) return kPi / (std::sin(kPi * s) * gamma(1.0 - s));
  static constexpr std::array<double, 9> p = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;
  s -= 1.0;
  Complex x = p[0];
  for (int i = 1; i < 9; ++i) x += p[i] / (s + static_cast<double>(i));
  const Complex t = s + g + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((s + 0.5) * std::log(t) - t) * x;
}

Complex hurwitz_zeta(const Rational& y, Complex s) {
  if (is_one(s)) throw PoleError("Hurwitz zeta has a pole at s = 1");
  if (s.real() < -0.5) return reflected_hurwitz(y, s);
  return hurwitz_em(representative(y), s);
}

Laurent hurwitz_zeta_laurent(const Rational& y, Complex s) {
  if (is_one(s)) return {Complex(1.0, 0.0), Complex(hurwitz_em_constant_at_one(representative(y)), 0.0)};
  return {Complex(0.0, 0.0), hurwitz_zeta(y, s)};
}

Complex periodic_zeta(const Rational& y, Complex s) {
  const Rational f = y.frac();
  if (f.is_zero()) return hurwitz_zeta(f, s);
  const std::int64_t q = f.den();
  Complex sum = 0.0;
  if (is_one(s)) {
    for (std::int64_t r = 1; r <= q; ++r) {
      sum += unit(f * r) * hurwitz_em_constant_at_one(static_cast<double>(r) / q);
    }
    return sum / static_cast<double>(q);
  }
  for (std::int64_t r = 1; r <= q; ++r) sum += unit(f * r) * hurwitz_zeta(Rational(r, q), s);
  return cpow_real_base(static_cast<double>(q), -s) * sum;
}

Laurent periodic_zeta_laurent(const Rational& y, Complex s) {
  if (y.frac().is_zero()) return hurwitz_zeta_laurent(y, s);
  return {Complex(0.0, 0.0), periodic_zeta(y, s)};
}

namespace {

// B_{2k} / (2k+1)! for the dilogarithm series in u = -log(1 - z).
const std::array<double, 20>& dilog_coefficients() {
  static const auto table = [] {
    std::array<double, 20> c{};
    for (int k = 1; k <= 20; ++k) {
      long double zeta = 0.0L;
      if (k == 1) {
        zeta = std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 6;
      } else {
        for (int n = 2000; n >= 1; --n) zeta += std::pow(static_cast<long double>(n), -2.0L * k);
      }
      const long double sign = (k % 2 == 1) ? 1.0L : -1.0L;
      c[k - 1] = static_cast<double>(sign * 2.0L * zeta /
                                     ((2 * k + 1) * std::pow(2 * std::numbers::pi_v<long double>, 2.0L * k)));
    }
    return c;
  }();
  return table;
}

double bloch_wigner_reduced(Complex z) {
  const Complex u = -std::log(1.0 - z);
  const Complex u2 = u * u;
  Complex li2 = u - 0.25 * u2;
  Complex power = u;
  for (double c : dilog_coefficients()) {
    power *= u2;
    li2 += c * power;
  }
  return li2.imag() + std::arg(1.0 - z) * std::log(std::abs(z));
}

}  // namespace

double bloch_wigner(Complex z) {
  if (std::isinf(z.real()) || std::isinf(z.imag())) return 0.0;
  if (z.imag() == 0.0) return 0.0;
  if (std::abs(z) > 1.0) return -bloch_wigner(1.0 / z);
  if (z.real() > 0.5) return -bloch_wigner_reduced(1.0 - z);
  return bloch_wigner_reduced(z);
}

namespace {

constexpr double kTiny = 1e-300;
constexpr double kEps = 1e-16;

Complex incomplete_continued_fraction(Complex a, double x) {
  Complex b = x + 1.0 - a;
  Complex c = 1.0 / kTiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i < 100000; ++i) {
    const Complex an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const Complex del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return std::exp(-x + a * std::log(x)) * h;
}

Complex lower_incomplete_series(Complex a, double x) {
  Complex ap = a;
  Complex del = 1.0 / a;
  Complex sum = del;
  for (int n = 0; n < 100000; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x));
}

double exponential_integral_e1(double x) {
  if (x >= 1.0) return incomplete_continued_fraction(0.0, x).real();
  constexpr double kEulerGamma = 0.57721566490153286061;
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= -x / k;
    const double add = -term / k;
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(x) + sum;
}

}  // namespace

IncompleteGamma upper_incomplete_gamma(Complex s, double x) {
  if (!(x > 0.0)) throw DomainError("upper_incomplete_gamma needs x > 0");
  IncompleteGamma out;
  const bool integral = s.imag() == 0.0 && s.real() == std::round(s.real());
  if (x >= std::abs(s) + 1.0) {
    out.value = incomplete_continued_fraction(s, x);
  } else if (integral && s.real() <= 0.0) {
    // Gamma(s, x) = (Gamma(s + 1, x) - x^s e^{-x}) / s, started from E_1.
    double value = exponential_integral_e1(x);
    for (int k = -1; k >= static_cast<int>(s.real()); --k) {
      value = (value - std::pow(x, k) * std::exp(-x)) / k;
    }
    out.value = value;
  } else if (integral) {
    const int n = static_cast<int>(s.real());
    double term = 1.0;
    double sum = 1.0;
    double fact = 1.0;
    for (int k = 1; k < n; ++k) {
      term *= x / k;
      sum += term;
      fact *= k;
    }
    out.value = fact * std::exp(-x) * sum;
  } else {
    out.value = gamma(s) - lower_incomplete_series(s, x);
  }
  if (std::abs(out.value) < std::numeric_limits<double>::min() || !std::isfinite(std::abs(out.value))) {
    out.underflow = std::abs(out.value) < std::numeric_limits<double>::min();
    if (out.underflow) out.value = 0.0;
  }
  return out;
}

}  // namespace mevreg
