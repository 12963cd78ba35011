#include "mevreg/eisenstein.hpp"

#include <cmath>
#include <numeric>

#include "mevreg/errors.hpp"

namespace mevreg {

EllipticParam EllipticParam::parse(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw DomainError("parameter '" + text + "' must be 'x1,x2'");
  return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
}

EllipticParam EllipticParam::torsion(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (n <= 0) throw DomainError("torsion level must be positive");
  return {Rational(a, n), Rational(b, n)};
}

std::string family_name(Family f) {
  switch (f) {
    case Family::E: return "E";
    case Family::G: return "G";
    case Family::H: return "H";
    case Family::LogSiegel: return "logSiegel";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "E") return Family::E;
  if (name == "G") return Family::G;
  if (name == "H") return Family::H;
  if (name == "logSiegel" || name == "log_siegel") return Family::LogSiegel;
  throw DomainError("unknown family '" + name + "'");
}

void EisensteinSpec::validate() const {
  if (family != Family::LogSiegel && weight < 1) throw DomainError("weight must be >= 1");
  if (family == Family::E && weight == 2 && param.is_zero()) {
    throw DomainError("E of weight 2 is not holomorphic at the origin");
  }
  if (family == Family::H && weight == 2 && param.x1.is_zero()) {
    throw DomainError("H of weight 2 needs a nonzero first coordinate");
  }
  if (family == Family::LogSiegel && param.is_zero()) throw DomainError("Siegel unit at the origin");
}

std::string EisensteinSpec::str() const {
  return family_name(family) + "^(" + std::to_string(weight) + ")_(" + param.str() + ")";
}

namespace {

double ipow(double base, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

// Positive reals congruent to r mod 1, in increasing order.
struct Progression {
  Rational start;
  explicit Progression(const Rational& r) : start(r.frac().is_zero() ? Rational(1) : r.frac()) {}
};

// (1 + e(t)) / (2 (1 - e(t))) for t != 0.
Complex half_cot_ratio(const Rational& t) {
  const Complex e = unit(t);
  return 0.5 * (1.0 + e) / (1.0 - e);
}

void check_weight(int k) {
  if (k < 1) throw DomainError("weight must be >= 1");
}

}  // namespace

TauQSeries e_series(int k, const EllipticParam& x, Rational cutoff) {
  check_weight(k);
  if (k == 2 && x.is_zero()) throw DomainError("E of weight 2 is not holomorphic at the origin");
  TauQSeries out(cutoff, static_cast<int>(x.x1.den()));
  out.add_term(0, 0, constant_term({Family::E, k, x}));
  const double sign_minus = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
  for (int branch = 0; branch < 2; ++branch) {
    const Rational n0 = Progression(branch == 0 ? x.x1 : -x.x1).start;
    const Rational x2 = branch == 0 ? x.x2 : -x.x2;
    const double sign = branch == 0 ? -1.0 : sign_minus;
    for (std::int64_t m = 1; n0 * m <= cutoff; ++m) {
      const Complex phase = unit(x2 * m);
      for (Rational n = n0; n * m <= cutoff; n += 1) {
        out.add_term(n * m, 0, sign * phase * ipow(n.to_double(), k - 1));
      }
    }
  }
  return out;
}

TauQSeries g_series(int k, const EllipticParam& x, Rational cutoff) {
  check_weight(k);
  TauQSeries out(cutoff, static_cast<int>(std::lcm(x.x1.den(), x.x2.den())));
  out.add_term(0, 0, constant_term({Family::G, k, x}));
  for (int branch = 0; branch < 2; ++branch) {
    const Rational m0 = Progression(branch == 0 ? x.x1 : -x.x1).start;
    const Rational n0 = Progression(branch == 0 ? x.x2 : -x.x2).start;
    const double sign = (branch == 0 || k % 2 == 0) ? 1.0 : -1.0;
    for (Rational m = m0; m * n0 <= cutoff; m += 1) {
      const double weight = sign * ipow(m.to_double(), k - 1);
      for (Rational n = n0; m * n <= cutoff; n += 1) out.add_term(m * n, 0, weight);
    }
  }
  return out;
}

Rational bernoulli_poly_rational(int k, const Rational& t) {
  static const Rational kNumbers[] = {1, Rational(-1, 2), Rational(1, 6), 0, Rational(-1, 30), 0, Rational(1, 42)};
  if (k < 0 || k > 6) throw DomainError("Bernoulli polynomial degree out of range");
  Rational sum = 0;
  Rational binom = 1;
  Rational power = 1;  // t^{k-j}, built from j = k downwards
  for (int j = k; j >= 0; --j) {
    sum += binom * kNumbers[j] * power;
    power *= t;
    binom = binom * j / (k - j + 1);  // C(k, j - 1)
  }
  return sum;
}

RationalQSeries g_series_rational(int k, const EllipticParam& x, Rational cutoff) {
  check_weight(k);
  RationalQSeries out;
  auto add = [&](const Rational& alpha, const Rational& c) {
    if (alpha > cutoff || c.is_zero()) return;
    Rational& slot = out[alpha];
    slot += c;
    if (slot.is_zero()) out.erase(alpha);
  };
  if (k == 1) {
    if (x.x1.is_zero() && !x.x2.is_zero()) add(0, -bernoulli_poly_rational(1, x.x2));
    if (!x.x1.is_zero() && x.x2.is_zero()) add(0, -bernoulli_poly_rational(1, x.x1));
  } else if (x.x2.is_zero()) {
    add(0, -bernoulli_poly_rational(k, x.x1) / k);
  }
  for (int branch = 0; branch < 2; ++branch) {
    const Rational m0 = Progression(branch == 0 ? x.x1 : -x.x1).start;
    const Rational n0 = Progression(branch == 0 ? x.x2 : -x.x2).start;
    const Rational sign = (branch == 0 || k % 2 == 0) ? 1 : -1;
    for (Rational m = m0; m * n0 <= cutoff; m += 1) {
      Rational weight = sign;
      for (int i = 1; i < k; ++i) weight *= m;
      for (Rational n = n0; m * n <= cutoff; n += 1) add(m * n, weight);
    }
  }
  return out;
}

TauQSeries gN_series(int k, std::int64_t level, std::int64_t a, std::int64_t b, Rational cutoff) {
  check_weight(k);
  if (level <= 0) throw DomainError("level must be positive");
  auto mod = [level](std::int64_t v) { return ((v % level) + level) % level; };
  TauQSeries out(cutoff, static_cast<int>(level));
  const std::int64_t a0 = mod(a);
  const std::int64_t b0 = mod(b);
  // Constant term.
  const double nd = static_cast<double>(level);
  if (k == 1) {
    if (a0 == 0 && b0 != 0) out.add_term(0, 0, -bernoulli_poly(1, static_cast<double>(b0) / nd));
    if (a0 != 0 && b0 == 0) out.add_term(0, 0, -bernoulli_poly(1, static_cast<double>(a0) / nd));
  } else if (b0 == 0) {
    out.add_term(0, 0, -ipow(nd, k - 1) * bernoulli_poly(k, static_cast<double>(a0) / nd) / k);
  }
  for (int branch = 0; branch < 2; ++branch) {
    std::int64_t m0 = branch == 0 ? a0 : mod(-a0);
    std::int64_t n0 = branch == 0 ? b0 : mod(-b0);
    if (m0 == 0) m0 = level;
    if (n0 == 0) n0 = level;
    const double sign = (branch == 0 || k % 2 == 0) ? 1.0 : -1.0;
    for (std::int64_t m = m0; Rational(m * n0, level) <= cutoff; m += level) {
      const double weight = sign * ipow(static_cast<double>(m), k - 1);
      for (std::int64_t n = n0; Rational(m * n, level) <= cutoff; n += level) {
        out.add_term(Rational(m * n, level), 0, weight);
      }
    }
  }
  return out;
}

TauQSeries h_series(int k, const EllipticParam& x, Rational cutoff) {
  check_weight(k);
  TauQSeries out(cutoff, 1);
  out.add_term(0, 0, constant_term({Family::H, k, x}));
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  for (std::int64_t m = 1; m <= cutoff; ++m) {
    for (std::int64_t n = 1; Rational(m * n) <= cutoff; ++n) {
      const Rational phase = x.x1 * m + x.x2 * n;
      const Complex c = (unit(phase) + sign * unit(-phase)) * ipow(static_cast<double>(n), k - 1);
      out.add_term(Rational(m * n), 0, c);
    }
  }
  return out;
}

TauQSeries log_siegel_series(const EllipticParam& x, Rational cutoff) {
  if (x.is_zero()) throw DomainError("Siegel unit at the origin");
  TauQSeries out(cutoff, static_cast<int>(x.x1.den()));
  out.add_term(0, 1, Complex(0.0, kPi * bernoulli_poly(2, x.x1.to_double())));
  if (x.x1.is_zero()) {
    const double modulus = std::log(std::abs(1.0 - unit(x.x2)));
    out.add_term(0, 0, Complex(modulus, kPi * (x.x2.to_double() - 0.5)));
  }
  for (int branch = 0; branch < 2; ++branch) {
    const Rational n0 = Progression(branch == 0 ? x.x1 : -x.x1).start;
    const Rational x2 = branch == 0 ? x.x2 : -x.x2;
    for (std::int64_t m = 1; n0 * m <= cutoff; ++m) {
      const Complex c = -unit(x2 * m) / static_cast<double>(m);
      for (Rational n = n0; n * m <= cutoff; n += 1) out.add_term(n * m, 0, c);
    }
  }
  return out;
}

TauQSeries eichler_series(int k, const EllipticParam& x, Rational cutoff) {
  const TauQSeries e = e_series(k, x, cutoff);
  TauQSeries out(cutoff, e.level_hint());
  for (const auto& [key, c] : e.terms()) {
    if (key.alpha.is_zero()) {
      out.add_term(0, 1, kTwoPiI * c);
    } else {
      out.add_term(key.alpha, 0, c / key.alpha.to_double());
    }
  }
  return out;
}

TauQSeries series_for(const EisensteinSpec& spec, Rational cutoff) {
  spec.validate();
  switch (spec.family) {
    case Family::E: return e_series(spec.weight, spec.param, cutoff);
    case Family::G: return g_series(spec.weight, spec.param, cutoff);
    case Family::H: return h_series(spec.weight, spec.param, cutoff);
    case Family::LogSiegel: return log_siegel_series(spec.param, cutoff);
  }
  throw DomainError("unknown family");
}

Complex constant_term(const EisensteinSpec& spec) {
  const int k = spec.weight;
  const EllipticParam& x = spec.param;
  switch (spec.family) {
    case Family::E:
      if (k == 1) {
        if (x.is_zero()) return 0.0;
        if (x.x1.is_zero()) return -half_cot_ratio(x.x2);
        return x.x1.to_double() - 0.5;
      }
      return bernoulli_poly(k, x.x1.to_double()) / k;
    case Family::G:
      if (k == 1) {
        if (x.x1.is_zero() && !x.x2.is_zero()) return -bernoulli_poly(1, x.x2.to_double());
        if (!x.x1.is_zero() && x.x2.is_zero()) return -bernoulli_poly(1, x.x1.to_double());
        return 0.0;
      }
      return x.x2.is_zero() ? Complex(-bernoulli_poly(k, x.x1.to_double()) / k) : Complex(0.0);
    case Family::H:
      if (k == 1) {
        Complex c = 0.0;
        if (!x.x2.is_zero()) c += half_cot_ratio(x.x2);
        if (!x.x1.is_zero()) c += half_cot_ratio(x.x1);
        return c;
      }
      return (k % 2 == 0 ? 1.0 : -1.0) * periodic_zeta(-x.x2, Complex(1.0 - k, 0.0));
    case Family::LogSiegel:
      return reg_value_at_infinity(log_siegel_series(x, Rational(0)));
  }
  return 0.0;
}

SigmaCompanion sigma_companion(const EisensteinSpec& spec) {
  spec.validate();
  const int k = spec.weight;
  switch (spec.family) {
    case Family::E: return {1.0, k, {Family::E, k, spec.param.sigma()}};
    case Family::G: {
      EisensteinSpec h{Family::H, k, spec.param};
      h.validate();
      return {(k % 2 == 0) ? 1.0 : -1.0, k, h};
    }
    case Family::H: return {1.0, k, {Family::G, k, spec.param}};
    case Family::LogSiegel: break;
  }
  throw DomainError("the Siegel logarithm has no sigma companion series");
}

SidedSeries sided_series(const EisensteinSpec& spec, Rational cutoff) {
  const SigmaCompanion comp = sigma_companion(spec);
  return SidedSeries{series_for(spec, cutoff), comp.sign * series_for(comp.spec, cutoff), comp.tau_power};
}

SidedSeries sided_level_series(int k, std::int64_t level, std::int64_t a, std::int64_t b, Rational cutoff) {
  const EllipticParam x = EllipticParam::torsion(a, b, level);
  if (k == 2 && x.x1.is_zero()) throw DomainError("H of weight 2 needs a nonzero first coordinate");
  TauQSeries sigma = rescale(h_series(k, x, cutoff * level), Rational(1, level));
  sigma *= ((k % 2 == 0) ? 1.0 : -1.0) / static_cast<double>(level);
  return SidedSeries{gN_series(k, level, a, b, cutoff), sigma, k};
}

}  // namespace mevreg
