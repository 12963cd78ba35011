#pragma once

#include <string>
#include <vector>

#include "mevreg/eisenstein.hpp"
#include "mevreg/mev.hpp"

namespace mevreg {

struct ResidualReport {
  std::string identity;
  std::string instance;
  double residual = 0.0;
  double tolerance = 0.0;
  // Worst coefficient for series identities.
  SeriesKey worst{};
  bool coefficientwise = false;

  bool passed() const { return residual <= tolerance; }
};

inline constexpr double kSeriesTolerance = 1e-12;
inline constexpr double kLedgerTolerance = 1e-9;

// E1_z E2_y - E1_y E2_x - E1_z E2_x + E1_y E2_z = E3_x - E3_y / 2 - E3_z / 2 with z = -x - y.
ResidualReport check_bg_E(const EllipticParam& x, const EllipticParam& y, Rational cutoff = default_cutoff());
// Weight-3 relation among G1 G2 products in four free coordinates.
ResidualReport check_bg_G1(const Rational& x1, const Rational& y1, const Rational& u2, const Rational& v2,
                           Rational cutoff = default_cutoff());
// G1_u G2_{u1,-u2} - G1_{u1,-u2} G2_u = G3_{0,u2}.
ResidualReport check_bg_G2(const Rational& u1, const Rational& u2, Rational cutoff = default_cutoff());
// sum_{x2 mod N} e(-u x2 / N) E^(k)_{(x1/N, x2/N)} = -N^{2-k} G^(k);N_{x1,u}.
ResidualReport check_partial_fourier(int k, std::int64_t level, std::int64_t x1, std::int64_t u,
                                     Rational cutoff = default_cutoff());
// sum_{v^N = 1} D((1 - v)/(1 - u)) = (N/2) D(u) for u = e(j/N) != 1.
ResidualReport check_dilog_sum(std::int64_t j, std::int64_t level);
// D(v) + 2 D((1 - v)/(1 - u)) + D(u/v) - D(u) = 0 for roots of unity u != v, both != 1.
ResidualReport check_dilog_five_term(const Rational& u, const Rational& v);

// Shuffle-derived ledger for the decomposition of the regulator: signed
// triple values, the A2 and A3 closed forms and the final assembly.
std::vector<ResidualReport> check_shuffle_ledger(const EllipticParam& a, const EllipticParam& b,
                                                 const MevOptions& options = {});

// Lambda(u) Lambda(v) = sum over shuffles w of u and v of Lambda(w); |u| + |v| <= 3.
ResidualReport check_mev_shuffle(const std::vector<EllipticParam>& u, const std::vector<EllipticParam>& v,
                                 const MevOptions& options = {});
// Lambda(x_1 sigma, ..., x_n sigma) = (-1)^n Lambda(x_n, ..., x_1).
ResidualReport check_path_reversal(const std::vector<EllipticParam>& params, const MevOptions& options = {});

struct VerdictTable {
  std::vector<ResidualReport> rows;
  bool all_passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace mevreg
