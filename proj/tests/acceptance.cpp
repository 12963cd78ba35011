// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "mevreg/errors.hpp"
#include "mevreg/identities.hpp"
#include "mevreg/mellin.hpp"
#include "mevreg/mev.hpp"
#include "mevreg/regulator.hpp"
#include "oracles.hpp"

using namespace mevreg;

namespace {

struct Outcome {
  double worst = 0.0;
  int instances = 0;
  void add(double r) {
    worst = std::max(worst, std::isnan(r) ? INFINITY : r);
    ++instances;
  }
};

bool report(int id, const std::string& what, double tol, double time_limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  std::string error;
  try {
    o = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  // time_limit <= 0: no runtime bound for this criterion
  const bool ok = error.empty() && o.worst < tol && (time_limit <= 0 || secs < time_limit);
  const std::string limit = time_limit > 0 ? std::to_string(static_cast<int>(time_limit)) + "s" : "none";
  std::printf("%s %2d  %-46s n=%-3d max_residual=%.3e tol=%.0e time=%.2fs (limit %s)%s%s\n", ok ? "PASS" : "FAIL",
              id, what.c_str(), o.instances, o.worst, tol, secs, limit.c_str(), error.empty() ? "" : " error: ",
              error.c_str());
  std::fflush(stdout);
  return ok;
}

// Twelve regulator pairs, four per level.
std::vector<std::pair<EllipticParam, EllipticParam>> regulator_grid() {
  std::vector<std::pair<EllipticParam, EllipticParam>> out;
  for (int n : {5, 6, 7}) {
    for (const auto& p : sample_pairs(n, 4)) out.push_back(p);
  }
  return out;
}

int infer_level(const EllipticParam& a, const EllipticParam& b) {
  return static_cast<int>(
      std::lcm(std::lcm(a.x1.den(), a.x2.den()), std::lcm(b.x1.den(), b.x2.den())));
}

}  // namespace

int main() {
  bool all = true;
  std::mt19937 rng(20261017);

  all &= report(1, "single values vs closed form", 1e-10, 1.0, [&] {
    Outcome o;
    const std::vector<int> dens = {2, 3, 4, 5, 6, 7, 8, 12};
    std::uniform_int_distribution<int> kind(0, 2);
    for (int i = 0; i < 20; ++i) {
      EllipticParam x = oracle::random_point(rng, dens);
      // a third of the points get a vanishing first or second coordinate
      if (i % 3 == 1) x = {Rational(0), x.x2};
      if (i % 3 == 2) x = {x.x1, Rational(0)};
      const std::vector<EllipticParam> w = {x};
      o.add(std::abs(lambda_mev(w).value - lambda_single_closed(x)));
    }
    return o;
  });

  all &= report(2, "shuffle and path reversal, length <= 3", 1e-9, 30.0, [&] {
    Outcome o;
    const std::vector<int> dens = {5, 6, 7, 12};
    for (int i = 0; i < 25; ++i) {
      const EllipticParam x = oracle::random_point(rng, dens), y = oracle::random_point(rng, dens),
                          z = oracle::random_point(rng, dens);
      switch (i % 3) {
        case 0: o.add(check_mev_shuffle({x}, {y}).residual); break;
        case 1: o.add(check_mev_shuffle({x}, {y, z}).residual); break;
        default: o.add(check_mev_shuffle({x, y}, {z}).residual); break;
      }
    }
    for (int i = 0; i < 25; ++i) {
      std::vector<EllipticParam> w;
      for (int j = 0; j <= i % 3; ++j) w.push_back(oracle::random_point(rng, dens));
      o.add(check_path_reversal(w).residual);
    }
    return o;
  });

  all &= report(3, "K2 regulator vs quadrature of eta", 1e-7, 60.0, [&] {
    Outcome o;
    const char* pairs[][2] = {{"1/5,1/5", "2/5,3/5"}, {"1/7,3/7", "2/7,1/7"}, {"1/6,5/6", "1/3,1/4"},
                              {"0,1/3", "2/5,3/5"},   {"1/4,0", "1/3,2/3"},   {"5/12,1/6", "1/2,1/3"}};
    for (const auto& p : pairs) {
      const EllipticParam a = EllipticParam::parse(p[0]), b = EllipticParam::parse(p[1]);
      o.add(std::abs(k2_regulator(a, b) - k2_regulator_quadrature(a, b, 0.02, 50.0)));
    }
    return o;
  });

  all &= report(4, "weight-3 Eisenstein product relations", 1e-12, 20.0, [&] {
    Outcome o;
    const std::vector<int> dens = {5, 6, 7, 12};
    for (int i = 0; i < 10; ++i) {
      EllipticParam x = oracle::random_point(rng, dens), y = oracle::random_point(rng, dens);
      while ((x + y).has_zero_coordinate()) y = oracle::random_point(rng, dens);
      o.add(check_bg_E(x, y).residual);
    }
    for (int i = 0; i < 10; ++i) {
      Rational x1 = oracle::random_fraction(rng, dens), y1 = oracle::random_fraction(rng, dens);
      Rational u2 = oracle::random_fraction(rng, dens), v2 = oracle::random_fraction(rng, dens);
      while ((x1 + y1).frac().is_zero()) y1 = oracle::random_fraction(rng, dens);
      while ((u2 - v2).frac().is_zero()) v2 = oracle::random_fraction(rng, dens);
      o.add(check_bg_G1(x1, y1, u2, v2).residual);
    }
    for (int i = 0; i < 10; ++i) {
      o.add(check_bg_G2(oracle::random_fraction(rng, dens), oracle::random_fraction(rng, dens)).residual);
    }
    return o;
  });

  all &= report(5, "Im I: iterated integral vs Mellin route", 1e-8, 60.0, [&] {
    Outcome o;
    const std::vector<int> dens = {5, 6, 7};
    for (int i = 0; i < 10; ++i) {
      const EllipticParam u = oracle::random_point(rng, dens), v = oracle::random_point(rng, dens);
      const int ell = 2 + i % 2;
      o.add(std::abs(im_I_direct(u, v, ell) - im_I_rz(u, v, ell)));
    }
    return o;
  });

  all &= report(6, "length-drop derivative vs finite difference", 1e-6, 0.0, [&] {
    Outcome o;
    const Rational h(1, 4096);
    for (int i = 0; i < 2; ++i) {
      const std::vector<EllipticParam> w = {oracle::random_point(rng, {5, 7}), oracle::random_point(rng, {5, 7}),
                                            oracle::random_point(rng, {5, 7})};
      for (std::size_t p = 1; p <= 3; ++p) {
        auto shifted = [&](const Rational& d) {
          std::vector<EllipticParam> v = w;
          v[p - 1] = {v[p - 1].x1, v[p - 1].x2 + d};
          return lambda_mev(v).value;
        };
        // five-point central stencil at step h; the plain two-point quotient leaves O(h^2) ~ 1e-5
        const Complex fd =
            (8.0 * (shifted(h) - shifted(-h)) - (shifted(2 * h) - shifted(-2 * h))) / (12 * h.to_double());
        o.add(std::abs(fd - lambda_partial_x2(w, p)));
      }
    }
    return o;
  });

  const auto grid = regulator_grid();
  std::vector<double> g_mev(grid.size());

  all &= report(7, "Goncharov regulator: MEV vs L-value", 1e-7, 300.0, [&] {
    Outcome o;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& [a, b] = grid[i];
      g_mev[i] = goncharov_mev(a, b);
      o.add(std::abs(g_mev[i] - goncharov_lvalue(a, b)));
    }
    return o;
  });

  all &= report(8, "Goncharov vs Beilinson relation", 1e-7, 0.0, [&] {
    Outcome o;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& [a, b] = grid[i];
      const double n = infer_level(a, b);
      o.add(std::abs(g_mev[i] - (n * n / 6 * beilinson_level(a, b, static_cast<int>(n)) - zeta3_term(a, b))));
    }
    return o;
  });

  all &= report(9, "regulator symmetries", 1e-8, 0.0, [&] {
    Outcome o;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& [a, b] = grid[i];
      o.add(std::abs(g_mev[i] - goncharov_mev(b, a)));
      o.add(std::abs(g_mev[i] + goncharov_mev(a.sigma(), b.sigma())));
      if (!(a + a).has_zero_coordinate()) o.add(std::abs(goncharov_mev(a, a)));
    }
    return o;
  });

  all &= report(10, "M(G3_{0,x}, 0) vs zeta'(-2) B1", 1e-9, 0.0, [&] {
    Outcome o;
    for (const char* x : {"1/4", "1/3", "2/3", "1/5", "3/5", "1/6", "5/7", "11/12"}) {
      const Rational r = Rational::parse(x);
      const Complex m = mellin_eisenstein_closed({Family::G, 3, {Rational(0), r}}, 0.0).value;
      o.add(std::abs(m + 2 * static_cast<double>(kZetaPrimeMinus2) * bernoulli_poly(1, r.to_double())));
    }
    return o;
  });

  return all ? 0 : 1;
}
