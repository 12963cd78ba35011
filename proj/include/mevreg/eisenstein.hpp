#pragma once

#include <map>
#include <string>

#include "mevreg/rational.hpp"
#include "mevreg/series.hpp"

namespace mevreg {

// Point of (R/Z)^2 with rational coordinates kept in [0, 1).
struct EllipticParam {
  Rational x1;
  Rational x2;

  EllipticParam() = default;
  EllipticParam(Rational a, Rational b) : x1(a.frac()), x2(b.frac()) {}

  // Parses "p/q,r/s".
  static EllipticParam parse(const std::string& text);
  // (a/N, b/N)
  static EllipticParam torsion(std::int64_t a, std::int64_t b, std::int64_t n);

  bool is_zero() const { return x1.is_zero() && x2.is_zero(); }
  bool has_zero_coordinate() const { return x1.is_zero() || x2.is_zero(); }
  // (x2, -x1): the action of the inversion tau -> -1/tau.
  EllipticParam sigma() const { return {x2, -x1}; }
  std::string str() const { return x1.str() + "," + x2.str(); }

  friend EllipticParam operator+(const EllipticParam& a, const EllipticParam& b) {
    return {a.x1 + b.x1, a.x2 + b.x2};
  }
  friend EllipticParam operator-(const EllipticParam& a, const EllipticParam& b) {
    return {a.x1 - b.x1, a.x2 - b.x2};
  }
  EllipticParam operator-() const { return {-x1, -x2}; }
  friend bool operator==(const EllipticParam&, const EllipticParam&) = default;
};

enum class Family { E, G, H, LogSiegel };

std::string family_name(Family f);
Family parse_family(const std::string& name);

struct EisensteinSpec {
  Family family = Family::E;
  int weight = 2;
  EllipticParam param;

  // Throws DomainError for weight < 1, E of weight 2 at the origin, H of weight
  // 2 with vanishing first coordinate, or a log-Siegel at the origin.
  void validate() const;
  std::string str() const;
};

// Holomorphic Eisenstein series of weight k at parameter x.
TauQSeries e_series(int k, const EllipticParam& x, Rational cutoff = default_cutoff());
// Series with exponents m n over (m, n) = x mod 1.
TauQSeries g_series(int k, const EllipticParam& x, Rational cutoff = default_cutoff());
// Level-N version with (m, n) = (a, b) mod N and exponents m n / N.
TauQSeries gN_series(int k, std::int64_t n, std::int64_t a, std::int64_t b, Rational cutoff = default_cutoff());
// Exact coefficients of g_series: q-exponent -> coefficient. All coefficients
// of G are rational for rational parameters.
using RationalQSeries = std::map<Rational, Rational>;
RationalQSeries g_series_rational(int k, const EllipticParam& x, Rational cutoff = default_cutoff());
// Bernoulli polynomial B_k at a rational point, 0 <= k <= 6.
Rational bernoulli_poly_rational(int k, const Rational& t);
TauQSeries h_series(int k, const EllipticParam& x, Rational cutoff = default_cutoff());
// Logarithm of the Siegel unit, with log(1 - e(x2)) on the principal branch.
TauQSeries log_siegel_series(const EllipticParam& x, Rational cutoff = default_cutoff());
// Primitive of 2 pi i E dtau with regularised value zero at infinity.
TauQSeries eichler_series(int k, const EllipticParam& x, Rational cutoff = default_cutoff());

TauQSeries series_for(const EisensteinSpec& spec, Rational cutoff = default_cutoff());
Complex constant_term(const EisensteinSpec& spec);

// f(-1/tau) = sign * tau^tau_power * companion(tau).
struct SigmaCompanion {
  Complex sign{1.0, 0.0};
  int tau_power = 0;
  EisensteinSpec spec;
};
SigmaCompanion sigma_companion(const EisensteinSpec& spec);

SidedSeries sided_series(const EisensteinSpec& spec, Rational cutoff = default_cutoff());
// Level-N G series of weight k with its expansion at zero:
// G^(k);N(-1/tau) = (-1)^k N^{-1} tau^k H^(k)_{(a,b)/N}(tau/N).
SidedSeries sided_level_series(int k, std::int64_t level, std::int64_t a, std::int64_t b,
                               Rational cutoff = default_cutoff());

}  // namespace mevreg
