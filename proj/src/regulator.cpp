#include "mevreg/regulator.hpp"

#include <array>
#include <cmath>
#include <future>
#include <numeric>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "mevreg/errors.hpp"
#include "mevreg/mellin.hpp"

namespace mevreg {

namespace {

double b1(const Rational& t) { return bernoulli_poly(1, t.frac().to_double()); }
double b2(const Rational& t) { return bernoulli_poly(2, t.frac().to_double()); }

SidedSeries g1(const Rational& u, const Rational& v) { return sided_series({Family::G, 1, {u, v}}); }

// G^(1)_{a1,b2} G^(1)_{b1,-a2} + G^(1)_{a1,-b2} G^(1)_{b1,a2}
SidedSeries lvalue_product(const EllipticParam& a, const EllipticParam& b) {
  return g1(a.x1, b.x2) * g1(b.x1, -a.x2) + g1(a.x1, -b.x2) * g1(b.x1, a.x2);
}

std::int64_t to_index(const Rational& r, int level) {
  const Rational scaled = r * level;
  if (!scaled.is_integer()) throw DomainError(r.str() + " is not N-torsion for N = " + std::to_string(level));
  return scaled.num();
}

int infer_level(const EllipticParam& a, const EllipticParam& b) {
  std::int64_t n = 1;
  for (const Rational& r : {a.x1, a.x2, b.x1, b.x2}) n = std::lcm(n, r.den());
  return static_cast<int>(n);
}

struct MevTerms {
  std::array<Complex, 6> triple;  // (a,b,b) (c,b,b) (b,a,a) (c,a,a) (c,b,a) (c,a,b)
  std::array<Complex, 3> pair;    // (a,b) (b,c) (c,a)
  std::array<Complex, 2> single;  // (a) (b)
  double bound = 0.0;
};

const std::array<const char*, 11> kTermNames = {"Lambda(a,b,b)", "Lambda(c,b,b)", "Lambda(b,a,a)", "Lambda(c,a,a)",
                                                "Lambda(c,b,a)", "Lambda(c,a,b)", "Lambda(a,b)",   "Lambda(b,c)",
                                                "Lambda(c,a)",   "Lambda(a)",     "Lambda(b)"};

MevTerms mev_terms(const EllipticParam& a, const EllipticParam& b, const MevOptions& options) {
  const EllipticParam c = -(a + b);
  using Word = std::vector<EllipticParam>;
  const std::array<Word, 6> triples = {Word{a, b, b}, Word{c, b, b}, Word{b, a, a},
                                       Word{c, a, a}, Word{c, b, a}, Word{c, a, b}};
  std::array<std::future<MevResult>, 6> jobs;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    jobs[i] = std::async(std::launch::async, [&, i] { return lambda_mev(triples[i], options); });
  }
  MevTerms t;
  const std::array<Word, 3> pairs = {Word{a, b}, Word{b, c}, Word{c, a}};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const MevResult r = lambda_mev(pairs[i], options);
    t.pair[i] = r.value;
    t.bound = std::max(t.bound, r.truncation_bound);
  }
  t.single = {lambda_single_closed(a), lambda_single_closed(b)};
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const MevResult r = jobs[i].get();
    t.triple[i] = r.value;
    t.bound = std::max(t.bound, r.truncation_bound);
  }
  return t;
}

double assemble(const MevTerms& t) {
  const auto& x = t.triple;
  const Complex total = x[0] - x[1] + x[2] - x[3] + x[4] + x[5] -
                        (t.single[1] - t.single[0]) * (t.pair[0] + t.pair[1] + t.pair[2]);
  return total.real();
}

}  // namespace

void check_regulator_domain(const EllipticParam& a, const EllipticParam& b) {
  const EllipticParam c = -(a + b);
  auto check = [](const EllipticParam& x, const char* name) {
    if (x.has_zero_coordinate()) {
      throw BoundaryError("coordinates of a, b, c nonzero", std::string(name) + " = (" + x.str() + ")");
    }
  };
  check(a, "a");
  check(b, "b");
  check(c, "c");
}

std::string component_label(const EllipticParam& a, const EllipticParam& b) {
  check_regulator_domain(a, b);
  const char s1 = (a.x1 + b.x1 > Rational(1)) ? '+' : '-';
  const char s2 = (a.x2 + b.x2 > Rational(1)) ? '+' : '-';
  return std::string("D") + s1 + s2;
}

std::vector<std::pair<EllipticParam, EllipticParam>> admissible_pairs(int level) {
  if (level < 2) throw DomainError("level must be at least 2");
  std::vector<std::pair<EllipticParam, EllipticParam>> out;
  for (int a1 = 1; a1 < level; ++a1) {
    for (int a2 = 1; a2 < level; ++a2) {
      for (int b1 = a1; b1 < level; ++b1) {
        for (int b2 = (b1 == a1 ? a2 + 1 : 1); b2 < level; ++b2) {
          if ((a1 + b1) % level == 0 || (a2 + b2) % level == 0) continue;
          out.emplace_back(EllipticParam::torsion(a1, a2, level), EllipticParam::torsion(b1, b2, level));
        }
      }
    }
  }
  return out;
}

std::vector<std::pair<EllipticParam, EllipticParam>> sample_pairs(int level, std::size_t count) {
  const auto all = admissible_pairs(level);
  if (count >= all.size()) return all;
  std::vector<std::pair<EllipticParam, EllipticParam>> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(all[i * all.size() / count]);
  return out;
}

double goncharov_mev(const EllipticParam& a, const EllipticParam& b, const MevOptions& options) {
  check_regulator_domain(a, b);
  return assemble(mev_terms(a, b, options));
}

double zeta3_term(const EllipticParam& a, const EllipticParam& b) {
  const double bracket = b2(a.x1) + b2(b.x1) + 4 * b1(a.x1) * b1(b.x1) - b2(a.x2) - b2(b.x2) - 4 * b1(a.x2) * b1(b.x2);
  return static_cast<double>(kZeta3) / 4 * bracket;
}

double goncharov_lvalue(const EllipticParam& a, const EllipticParam& b) {
  check_regulator_domain(a, b);
  const Complex m = mellin_numeric(lvalue_product(a, b), -1.0).value;
  return -1.5 * kPi * m.real() - zeta3_term(a, b);
}

double goncharov_lvalue_level(const EllipticParam& a, const EllipticParam& b, int level) {
  check_regulator_domain(a, b);
  const double l = l_deriv_weight2_at_minus1({a.x1, b.x2}, {b.x1, -a.x2}, level) +
                   l_deriv_weight2_at_minus1({a.x1, -b.x2}, {b.x1, a.x2}, level);
  return 3 * kPi * kPi / level * l - zeta3_term(a, b);
}

double beilinson(const EllipticParam& a, const EllipticParam& b, int level) {
  check_regulator_domain(a, b);
  const Complex m = mellin_numeric(lvalue_product(a, b), -1.0).value;
  return -9 * kPi / (static_cast<double>(level) * level) * m.real();
}

double beilinson_level(const EllipticParam& a, const EllipticParam& b, int level) {
  check_regulator_domain(a, b);
  const auto a1 = to_index(a.x1, level), a2 = to_index(a.x2, level);
  const auto b1i = to_index(b.x1, level), b2i = to_index(b.x2, level);
  auto g = [level](std::int64_t u, std::int64_t v) { return sided_level_series(1, level, u, v); };
  const SidedSeries f = g(a2, -b1i) * g(b2i, a1) + g(a2, b1i) * g(b2i, -a1);
  const double n3 = static_cast<double>(level) * level * level;
  return 9 * kPi / n3 * mellin_numeric(f, -1.0).value.real();
}

RegulatorDerivative dG_da2(const EllipticParam& a, const EllipticParam& b) {
  check_regulator_domain(a, b);
  RegulatorDerivative out;
  const Rational h(1, 4096);
  auto central = [&](const Rational& step) {
    const EllipticParam up{a.x1, a.x2 + step};
    const EllipticParam down{a.x1, a.x2 - step};
    return (goncharov_mev(up, b) - goncharov_mev(down, b)) / (2 * step.to_double());
  };
  out.finite_difference = (4 * central(h) - central(2 * h)) / 3;

  const EllipticParam c = -(a + b);
  auto form = [](int k, const EllipticParam& x) { return AdmissibleForm::from_function(sided_series({Family::E, k, x})); };
  const AdmissibleForm left = form(2, a) - form(2, b);
  const AdmissibleForm right = form(3, b) - Complex(0.5) * form(3, a) - Complex(0.5) * form(3, c);
  const Complex w = word_integral_zero_to_infinity(FormWord({left, right})).value;
  out.iterated = -8 * kPi * kPi * kPi * w.imag();

  auto g = [](int k, const Rational& u, const Rational& v) { return sided_series({Family::G, k, {u, v}}); };
  const SidedSeries prod = g(1, a.x1, b.x2) * g(2, b.x1, -a.x2) - g(1, a.x1, -b.x2) * g(2, b.x1, a.x2);
  const double m_prod = mellin_numeric(prod, 0.0).value.real();
  const double m_g3 = mellin_numeric(g(3, 0, a.x2), 0.0).value.real() + 2 * mellin_numeric(g(3, 0, b.x2), 0.0).value.real();
  out.closed_form = -3 * kPi * kPi * m_prod + kPi * kPi * m_g3;
  return out;
}

double k2_regulator(const EllipticParam& a, const EllipticParam& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("K2 regulator needs a, b nonzero");
  MevOptions options;
  options.allow_zero_coordinates = true;
  const std::vector<EllipticParam> ab = {a, b};
  const Complex lab = lambda_mev(ab, options).value;
  auto channel = [&](const EllipticParam& x, Sign s) {
    const std::vector<EllipticParam> p = {x};
    const std::vector<Sign> sg = {s};
    return lambda_signed(p, sg, options);
  };
  auto log_modulus_at_infinity = [](const EllipticParam& x) {
    return x.x1.is_zero() ? std::log(std::abs(1.0 - unit(x.x2))) : 0.0;
  };
  return lab.imag() - channel(a, Sign::Plus) * channel(b, Sign::Minus) +
         log_modulus_at_infinity(a) * channel(b, Sign::Minus) - log_modulus_at_infinity(b) * channel(a, Sign::Minus);
}

double k2_regulator_quadrature(const EllipticParam& a, const EllipticParam& b, double y_min, double y_max) {
  if (a.is_zero() || b.is_zero()) throw DomainError("K2 regulator needs a, b nonzero");
  if (!(y_min > 0.0 && y_min < 1.0 && y_max > 1.0)) throw DomainError("need 0 < y_min < 1 < y_max");
  const Rational cutoff(40);
  struct Side {
    TauQSeries log_a, log_b, e_a, e_b;
  };
  auto side = [&](const EllipticParam& x, const EllipticParam& y) {
    return Side{log_siegel_series(x, cutoff), log_siegel_series(y, cutoff), e_series(2, x, cutoff),
                e_series(2, y, cutoff)};
  };
  const Side upper = side(a, b);
  const Side lower = side(a.sigma(), b.sigma());
  // On tau = i y: dlog g = -2 pi E2(iy) dy; for y < 1 use E2_x(iy) = -E2_{x sigma}(i/y) / y^2
  // and |g_x(iy)| = |g_{x sigma}(i/y)|.
  auto eta = [&](double y) {
    const bool flip = y < 1.0;
    const Side& s = flip ? lower : upper;
    const double t = flip ? 1.0 / y : y;
    const double scale = flip ? -1.0 / (y * y) : 1.0;
    const double log_a = evaluate_at(s.log_a, t).value.real();
    const double log_b = evaluate_at(s.log_b, t).value.real();
    const double arg_a = -2 * kPi * scale * evaluate_at(s.e_a, t).value.imag();
    const double arg_b = -2 * kPi * scale * evaluate_at(s.e_b, t).value.imag();
    return log_a * arg_b - log_b * arg_a;
  };
  using boost::math::quadrature::gauss_kronrod;
  double total = 0.0;
  // Geometric panels keep the integrand's scale roughly constant.
  for (double lo = y_min; lo < y_max;) {
    const double hi = std::min(lo * 2.0, y_max);
    const double edge = (lo < 1.0 && hi > 1.0) ? 1.0 : hi;
    total += gauss_kronrod<double, 61>::integrate(eta, lo, edge, 12, 1e-13);
    lo = edge;
  }
  return total;
}

RegulatorReport regulator_report(const EllipticParam& a, const EllipticParam& b, int level, const MevOptions& options) {
  check_regulator_domain(a, b);
  RegulatorReport r;
  r.a = a;
  r.b = b;
  r.c = -(a + b);
  r.level = level > 0 ? level : infer_level(a, b);
  r.component = component_label(a, b);
  const MevTerms t = mev_terms(a, b, options);
  r.g_mev = assemble(t);
  r.g_lvalue = goncharov_lvalue(a, b);
  r.beilinson = beilinson_level(a, b, r.level);
  r.zeta3 = zeta3_term(a, b);
  r.residual_thm1 = std::abs(r.g_mev - r.g_lvalue);
  const double n2 = static_cast<double>(r.level) * r.level;
  r.residual_thm2 = std::abs(r.g_mev - (n2 / 6 * r.beilinson - r.zeta3));
  r.measured_ratio = (r.g_mev + r.zeta3) / r.beilinson;
  std::size_t k = 0;
  for (const Complex& v : t.triple) r.terms.push_back({kTermNames[k++], v});
  for (const Complex& v : t.pair) r.terms.push_back({kTermNames[k++], v});
  for (const Complex& v : t.single) r.terms.push_back({kTermNames[k++], v});
  r.cutoff = options.cutoff;
  r.truncation_bound = t.bound;
  return r;
}

}  // namespace mevreg
