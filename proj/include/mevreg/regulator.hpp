#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mevreg/eisenstein.hpp"
#include "mevreg/mev.hpp"

namespace mevreg {

// c = -a - b; all coordinates of a, b, c must be nonzero.
void check_regulator_domain(const EllipticParam& a, const EllipticParam& b);
// "D++", "D+-", "D-+" or "D--" from the signs of a1 + b1 - 1 and a2 + b2 - 1.
std::string component_label(const EllipticParam& a, const EllipticParam& b);

// All unordered pairs {a, b} of distinct N-torsion points for which a, b and
// a + b have nonzero coordinates, in lexicographic order.
std::vector<std::pair<EllipticParam, EllipticParam>> admissible_pairs(int level);
// count entries of admissible_pairs spread evenly over the list.
std::vector<std::pair<EllipticParam, EllipticParam>> sample_pairs(int level, std::size_t count);

// Goncharov regulator through multiple elliptic values.
double goncharov_mev(const EllipticParam& a, const EllipticParam& b, const MevOptions& options = {});
// The zeta(3) correction: G = (L-part) - zeta3_term.
double zeta3_term(const EllipticParam& a, const EllipticParam& b);
// Goncharov regulator through the Mellin transform of a product of G series at -1.
double goncharov_lvalue(const EllipticParam& a, const EllipticParam& b);
// The same via L'(., -1) of level-N series.
double goncharov_lvalue_level(const EllipticParam& a, const EllipticParam& b, int level);
// Beilinson regulator integral on the same path.
double beilinson(const EllipticParam& a, const EllipticParam& b, int level);
// Beilinson regulator from the level-N series directly.
double beilinson_level(const EllipticParam& a, const EllipticParam& b, int level);

struct RegulatorDerivative {
  double finite_difference = 0.0;  // Richardson central difference in a2
  double iterated = 0.0;           // iterated integrals of weights 2 and 3
  double closed_form = 0.0;        // Mellin transforms at s = 0
};
RegulatorDerivative dG_da2(const EllipticParam& a, const EllipticParam& b);

// Regulator of {g_a, g_b} in K2 integrated over (0, i infty).
double k2_regulator(const EllipticParam& a, const EllipticParam& b);

// Independent route: adaptive quadrature of eta(g_a, g_b) on y in [y_min, y_max],
// values for y < 1 taken through tau -> -1/tau.
double k2_regulator_quadrature(const EllipticParam& a, const EllipticParam& b, double y_min = 0.02,
                               double y_max = 50.0);

struct LambdaTerm {
  std::string word;
  Complex value;
};

struct RegulatorReport {
  EllipticParam a, b, c;
  int level = 1;
  std::string component;
  double g_mev = 0.0;
  double g_lvalue = 0.0;
  double beilinson = 0.0;
  double zeta3 = 0.0;
  double residual_thm1 = 0.0;
  double residual_thm2 = 0.0;
  double measured_ratio = 0.0;  // (g_mev + zeta3) / beilinson, expected N^2/6
  std::vector<LambdaTerm> terms;
  Rational cutoff = default_cutoff();
  double truncation_bound = 0.0;
};

RegulatorReport regulator_report(const EllipticParam& a, const EllipticParam& b, int level = 0,
                                 const MevOptions& options = {});

}  // namespace mevreg
