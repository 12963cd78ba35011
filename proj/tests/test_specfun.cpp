#include <doctest.h>

#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "mevreg/errors.hpp"
#include "mevreg/rational.hpp"
#include "mevreg/specfun.hpp"

using namespace mevreg;

namespace {
constexpr double kCatalan = 0.9159655941772190150546035;
bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }
}  // namespace

TEST_CASE("rational arithmetic stays exact and reduced") {
  const Rational a = Rational::parse("6/-8");
  CHECK(a.num() == -3);
  CHECK(a.den() == 4);
  CHECK(a.frac() == Rational(1, 4));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(-7, 3)).floor() == -3);
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(5).str() == "5");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("0.5"));
  CHECK_THROWS(Rational(INT64_MAX) * Rational(3));
}

TEST_CASE("unit reduces exactly") {
  CHECK(std::abs(unit(Rational(1, 4)) - Complex(0, 1)) < 1e-16);
  CHECK(std::abs(unit(Rational(7, 2)) - Complex(-1, 0)) < 1e-16);
  CHECK(std::abs(unit(Rational(-1, 3)) - std::exp(Complex(0, -2 * kPi / 3))) < 1e-15);
}

TEST_CASE("Bernoulli polynomials") {
  CHECK(bernoulli_poly(1, 0.25) == doctest::Approx(-0.25));
  CHECK(bernoulli_poly(2, 0.0) == doctest::Approx(1.0 / 6));
  CHECK(bernoulli_poly(3, 0.5) == doctest::Approx(0.0));
  CHECK(bernoulli_poly(4, 0.0) == doctest::Approx(-1.0 / 30));
}

TEST_CASE("complex Gamma against frozen high-precision values") {
  CHECK(near(mevreg::gamma(Complex(1, 1)), Complex(0.4980156681183560427, -0.1549498283018106851), 1e-13));
  CHECK(near(mevreg::gamma(Complex(-2.5, 0.5)), Complex(-0.3338752035224323374, -0.2064573079636084149), 1e-13));
  CHECK(near(mevreg::gamma(0.5), std::sqrt(kPi), 1e-14));
  for (double x : {0.3, 1.7, 4.2, 9.5}) CHECK(near(mevreg::gamma(x), std::tgamma(x), 1e-13));
  CHECK_THROWS_AS(mevreg::gamma(-2.0), PoleError);
  CHECK_THROWS_AS(mevreg::gamma(0.0), PoleError);
}

TEST_CASE("Hurwitz zeta on both sides of the critical strip") {
  CHECK(near(hurwitz_zeta(Rational(0), 2.0), kPi * kPi / 6, 1e-13));
  CHECK(near(hurwitz_zeta(Rational(0), 3.0), static_cast<double>(kZeta3), 1e-13));
  CHECK(near(hurwitz_zeta(Rational(0), -1.0), -1.0 / 12, 1e-13));
  CHECK(near(hurwitz_zeta(Rational(1, 4), 2.0), kPi * kPi + 8 * kCatalan, 1e-13));
  CHECK(near(hurwitz_zeta(Rational(1, 3), Complex(0.5, 2)), Complex(-0.9758711508402348305, 0.8558062719651688770),
             1e-12));
  CHECK(near(hurwitz_zeta(Rational(1, 3), -1.5), -0.003531462856495216740, 1e-11));
  CHECK(near(hurwitz_zeta(Rational(2, 7), Complex(-2.5, 1)),
             Complex(-0.009082181681026880572, -0.02099965574653906638), 1e-11));
  // zeta(-n, a) = -B_{n+1}(a) / (n + 1)
  CHECK(near(hurwitz_zeta(Rational(2, 5), -2.0), -bernoulli_poly(3, 0.4) / 3, 1e-12));
}

TEST_CASE("Hurwitz zeta Laurent data at s = 1") {
  const Laurent l = hurwitz_zeta_laurent(Rational(0), 1.0);
  CHECK(near(l.residue, 1.0, 1e-14));
  CHECK(near(l.constant, 0.5772156649015328606, 1e-12));
  CHECK_THROWS_AS(hurwitz_zeta(Rational(1, 3), 1.0), PoleError);
}

TEST_CASE("periodic zeta") {
  CHECK(near(periodic_zeta(Rational(1, 4), 2.0), Complex(-kPi * kPi / 48, kCatalan), 1e-13));
  CHECK(near(periodic_zeta(Rational(1, 2), 2.0), -kPi * kPi / 12, 1e-13));
  CHECK(near(periodic_zeta(Rational(2, 5), 0.3), Complex(-0.5508927137919323091, 0.2113486941805465525), 1e-11));
  CHECK(near(periodic_zeta(Rational(1, 3), -1.7), Complex(-0.1151668592468431586, -0.1606889246706537694), 1e-11));
  // sum e(n y) / n = -log(1 - e(y))
  const Rational y(2, 7);
  CHECK(near(periodic_zeta(y, 1.0), -std::log(1.0 - unit(y)), 1e-12));
  CHECK(near(periodic_zeta_laurent(y, 1.0).constant, -std::log(1.0 - unit(y)), 1e-12));
}

TEST_CASE("Bloch-Wigner dilogarithm") {
  CHECK(bloch_wigner(Complex(0, 1)) == doctest::Approx(kCatalan).epsilon(1e-14));
  CHECK(bloch_wigner(unit(Rational(1, 6))) == doctest::Approx(1.014941606409653625).epsilon(1e-14));
  CHECK(bloch_wigner(Complex(0.3, 0.8)) == doctest::Approx(0.9950268877440632482).epsilon(1e-13));
  CHECK(bloch_wigner(Complex(2.5, -1.5)) == doctest::Approx(-0.4698193806574312559).epsilon(1e-13));
  CHECK(bloch_wigner(0.7) == 0.0);
  CHECK(bloch_wigner(Complex(INFINITY, 0)) == 0.0);
  // D(1 - z) = D(1/z) = D(conj z) = -D(z)
  const Complex z(0.2, 1.3);
  CHECK(bloch_wigner(1.0 - z) == doctest::Approx(-bloch_wigner(z)).epsilon(1e-13));
  CHECK(bloch_wigner(1.0 / z) == doctest::Approx(-bloch_wigner(z)).epsilon(1e-13));
  CHECK(bloch_wigner(std::conj(z)) == doctest::Approx(-bloch_wigner(z)).epsilon(1e-13));
}

TEST_CASE("upper incomplete Gamma") {
  CHECK(near(upper_incomplete_gamma(0.5, 2.0).value, 0.08064711796031769079, 1e-13));
  CHECK(near(upper_incomplete_gamma(Complex(-1.5, 0.3), 0.7).value,
             Complex(0.3319359947817012605, -0.001185917419305207801), 1e-12));
  CHECK(near(upper_incomplete_gamma(-2.0, 0.5).value, 0.8864174571007138295, 1e-13));
  CHECK(near(upper_incomplete_gamma(3.7, 0.2).value, 4.170052697827106864, 1e-13));
  CHECK(near(upper_incomplete_gamma(-3.3, 5.5).value, 1.565747420341205838e-6, 1e-12));
  CHECK(near(upper_incomplete_gamma(Complex(2, 1), 12.0).value,
             Complex(-6.687955008532848781e-5, 4.323999187307423650e-5), 1e-12));
  // Boost as an independent oracle on a real grid.
  for (double s : {0.25, 1.0, 2.5, 6.0}) {
    for (double x : {0.1, 1.0, 3.0, 15.0}) {
      CHECK(near(upper_incomplete_gamma(s, x).value, boost::math::tgamma(s, x), 1e-12));
    }
  }
  for (double x : {0.05, 0.8, 4.0, 20.0}) {
    CHECK(near(upper_incomplete_gamma(0.0, x).value, boost::math::expint(1, x), 1e-12));
  }
}
