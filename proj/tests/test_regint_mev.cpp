#include <doctest.h>

#include <cmath>
#include <random>

#include "mevreg/errors.hpp"
#include "mevreg/mellin.hpp"
#include "mevreg/mev.hpp"
#include "mevreg/regint.hpp"
#include "oracles.hpp"

using namespace mevreg;

namespace {

AdmissibleForm dlog(const char* x) { return dlog_siegel_form(EllipticParam::parse(x)); }

// E2_x - E2_{(x1,-x2)}: constant terms cancel at both cusps, so the form decays at 0 and infinity.
SidedSeries decaying(const EllipticParam& x) {
  return sided_series({Family::E, 2, x}) - sided_series({Family::E, 2, {x.x1, -x.x2}});
}

}  // namespace

TEST_CASE("shuffle_expand counts interleavings") {
  const FormWord x({dlog("1/5,2/5")}), yz({dlog("1/3,1/4"), dlog("2/7,1/7")});
  CHECK(shuffle_expand(x, FormWord({dlog("1/3,1/4")})).size() == 2);
  const auto three = shuffle_expand(x, yz);
  CHECK(three.size() == 3);
  CHECK(three[0].label() != three[1].label());
  const FormWord zw({dlog("1/5,1/5"), dlog("2/5,1/5")});
  CHECK(shuffle_expand(yz, zw).size() == 6);
  CHECK_THROWS_AS(shuffle_expand(FormWord({dlog("1/5,2/5"), dlog("1/5,2/5"), dlog("1/5,2/5")}), yz), DomainError);
  CHECK_THROWS_AS(FormWord(std::vector<AdmissibleForm>{}), DomainError);
}

TEST_CASE("single letters integrate to the closed values") {
  for (const char* x : {"1/4,1/4", "1/5,2/5", "0,1/2", "1/2,0", "0,1/3", "3/7,0", "5/12,1/6"}) {
    const EllipticParam p = EllipticParam::parse(x);
    const Complex v = word_integral_zero_to_infinity(FormWord({dlog_siegel_form(p)})).value;
    CHECK(std::abs(v - lambda_single_closed(p)) < 1e-12);
  }
  CHECK(std::abs(lambda_single_closed(EllipticParam::parse("1/4,1/4")) - Complex(0, kPi / 8)) < 1e-15);
  CHECK(lambda_single_closed(EllipticParam::parse("0,1/2")).real() == doctest::Approx(std::log(2.0)));
  CHECK(lambda_single_closed(EllipticParam::parse("1/2,0")).real() == doctest::Approx(-std::log(2.0)));
  CHECK_THROWS_AS(lambda_single_closed(EllipticParam{}), DomainError);
}

TEST_CASE("the split point does not matter") {
  const FormWord w({dlog("1/5,2/5"), dlog("3/5,1/5"), dlog("1/7,3/7")});
  const Complex at_i = word_integral_zero_to_infinity(w, 1.0).value;
  const Complex at_2i = word_integral_zero_to_infinity(w, 2.0).value;
  CHECK(std::abs(at_i - at_2i) < 1e-10);
}

TEST_CASE("a repeated letter gives half the square") {
  const AdmissibleForm w = dlog("2/7,3/7");
  const Complex one = word_integral_zero_to_infinity(FormWord({w})).value;
  const Complex two = word_integral_zero_to_infinity(FormWord({w, w})).value;
  CHECK(std::abs(two - 0.5 * one * one) < 1e-12);
}

TEST_CASE("decaying words agree with nested quadrature") {
  const EllipticParam u{Rational(1, 5), Rational(2, 5)}, v{Rational(2, 7), Rational(1, 7)};
  const SidedSeries f = decaying(u), g = decaying(v);
  const FormWord word({AdmissibleForm::from_function(f), AdmissibleForm::from_function(g)});
  const Complex engine = word_integral_zero_to_infinity(word).value;
  // omega = f(tau) dtau with dtau = i dy; the inner integral runs from y to infinity.
  const Complex i(0, 1);
  auto inner = [&](double y) { return oracle::integrate_complex([&](double t) { return i * oracle::value_on_axis(g, t); }, y, 40.0); };
  const Complex nested =
      oracle::integrate_complex([&](double y) { return i * oracle::value_on_axis(f, y) * inner(y); }, 0.05, 40.0);
  CHECK(std::abs(engine - nested) < 1e-8);
  // single decaying letter
  const Complex one = word_integral_zero_to_infinity(FormWord({AdmissibleForm::from_function(f)})).value;
  CHECK(std::abs(one - oracle::integrate_complex([&](double y) { return i * oracle::value_on_axis(f, y); }, 0.02, 50.0)) <
        1e-9);
}

TEST_CASE("too small a cutoff is reported, not hidden") {
  MevOptions options;
  options.cutoff = Rational(1, 2);
  const std::vector<EllipticParam> w = {EllipticParam::parse("1/5,2/5"), EllipticParam::parse("2/5,1/5")};
  CHECK_THROWS_AS(lambda_mev(w, options), PrecisionError);
}

TEST_CASE("signed single values") {
  const std::vector<EllipticParam> x = {EllipticParam::parse("1/3,1/7")};
  CHECK(std::abs(lambda_signed(x, std::vector<Sign>{Sign::Plus})) < 1e-13);
  const std::vector<EllipticParam> y = {EllipticParam::parse("1/3,2/3")};
  CHECK(lambda_signed(y, std::vector<Sign>{Sign::Minus}) == doctest::Approx(-kPi / 18).epsilon(1e-12));
}

TEST_CASE("mixed-sign pairs cancel for nonzero coordinates") {
  std::mt19937 rng(7);
  for (int n = 0; n < 5; ++n) {
    const EllipticParam x = oracle::random_point(rng, {5, 7}), y = oracle::random_point(rng, {5, 7});
    const std::vector<EllipticParam> xy = {x, y}, yx = {y, x};
    const std::vector<Sign> mp = {Sign::Minus, Sign::Plus}, pm = {Sign::Plus, Sign::Minus};
    CHECK(std::abs(lambda_signed(xy, mp) + lambda_signed(yx, pm)) < 1e-12);
  }
}

TEST_CASE("pair shuffle and path reversal on random pairs") {
  std::mt19937 rng(11);
  for (int n = 0; n < 20; ++n) {
    const EllipticParam x = oracle::random_point(rng, {5, 6, 7, 12}), y = oracle::random_point(rng, {5, 6, 7, 12});
    const std::vector<EllipticParam> xy = {x, y}, yx = {y, x}, turned = {x.sigma(), y.sigma()};
    const Complex lhs = lambda_mev(std::vector{x}).value * lambda_mev(std::vector{y}).value;
    CHECK(std::abs(lhs - lambda_mev(xy).value - lambda_mev(yx).value) < 1e-9);
    CHECK(std::abs(lambda_mev(turned).value - lambda_mev(yx).value) < 1e-9);
  }
}

TEST_CASE("zero coordinates are rejected beyond single letters") {
  const std::vector<EllipticParam> w = {EllipticParam::parse("0,1/3"), EllipticParam::parse("1/5,2/5")};
  CHECK_THROWS_AS(lambda_mev(w), BoundaryError);
  MevOptions allow;
  allow.allow_zero_coordinates = true;
  CHECK_NOTHROW(lambda_mev(w, allow));
  CHECK_THROWS_AS(lambda_mev(std::vector{EllipticParam{}}), DomainError);
}

TEST_CASE("general single values") {
  const EllipticParam x{Rational(1, 4), Rational(1, 3)};
  const std::vector<int> k3 = {3}, m1 = {1};
  const std::vector<EllipticParam> px = {x};
  CHECK(std::abs(lambda_general(k3, px, m1).value - lambda_general_single_closed(3, x, 1)) < 1e-12);
  CHECK(lambda_general_single_closed(3, x, 1) ==
        doctest::Approx(bernoulli_poly(2, 0.25) * bernoulli_poly(1, 1.0 / 3) / 2));
  // weight 2, power 1 is the dlog letter up to 2 pi i
  const std::vector<int> k2 = {2};
  CHECK(std::abs(lambda_general(k2, px, m1).value * kTwoPiI - lambda_single_closed(x)) < 1e-12);
  // weight 4, power 2 against the Mellin transform: int E tau dtau = i^2 M(E, 2)
  const EllipticParam z{Rational(1, 5), Rational(2, 5)};
  const std::vector<int> k4 = {4}, m2 = {2};
  const std::vector<EllipticParam> pz = {z};
  const Complex mellin = mellin_eisenstein_closed({Family::E, 4, z}, 2.0).value;
  CHECK(std::abs(lambda_general(k4, pz, m2).value + mellin) < 1e-10);
  CHECK_THROWS_AS(lambda_general(k4, pz, std::vector<int>{4}), DomainError);
}

TEST_CASE("length-drop derivative on a pair") {
  const EllipticParam x{Rational(1, 5), Rational(2, 5)}, y{Rational(3, 7), Rational(1, 7)};
  const Rational h(1, 4096);
  for (std::size_t p : {1u, 2u}) {
    auto shifted = [&](const Rational& d) {
      std::vector<EllipticParam> w = {x, y};
      w[p - 1] = {w[p - 1].x1, w[p - 1].x2 + d};
      return lambda_mev(w).value;
    };
    // five-point central stencil at step h
    const Complex fd = (8.0 * (shifted(h) - shifted(-h)) - (shifted(2 * h) - shifted(-2 * h))) / (12 * h.to_double());
    const std::vector<EllipticParam> w = {x, y};
    CHECK(std::abs(fd - lambda_partial_x2(w, p)) < 1e-6);
  }
}
