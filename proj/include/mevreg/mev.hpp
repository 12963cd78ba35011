#pragma once

#include <span>
#include <string>
#include <vector>

#include "mevreg/eisenstein.hpp"
#include "mevreg/regint.hpp"

namespace mevreg {

enum class Sign { Plus, Minus };

struct MevResult {
  Complex value{0.0, 0.0};
  double truncation_bound = 0.0;
  std::string word;  // echo of the evaluated word
};

struct MevOptions {
  Rational cutoff = default_cutoff();
  double base_y = 1.0;
  // Lambda with a vanishing coordinate is only accepted for single letters
  // unless this is set.
  bool allow_zero_coordinates = false;
};

// dlog g_x = 2 pi i E^(2)_x dtau.
AdmissibleForm dlog_siegel_form(const EllipticParam& x, Rational cutoff = default_cutoff());
// Real (Plus) or imaginary (Minus) part of dlog g_x on the imaginary axis.
AdmissibleForm signed_form(const EllipticParam& x, Sign sign, Rational cutoff = default_cutoff());
// E^(k)_x tau^{m-1} dtau.
AdmissibleForm eisenstein_form(int k, const EllipticParam& x, int m, Rational cutoff = default_cutoff());
// Product E^(k1)_x E^(k2)_y dtau.
AdmissibleForm product_form(int k1, const EllipticParam& x, int k2, const EllipticParam& y,
                            Rational cutoff = default_cutoff());

// Closed form of the single value.
Complex lambda_single_closed(const EllipticParam& x);

MevResult lambda_mev(std::span<const EllipticParam> params, const MevOptions& options = {});
double lambda_signed(std::span<const EllipticParam> params, std::span<const Sign> signs,
                     const MevOptions& options = {});
// int_0^infty E^(k_1)_{x_1} tau^{m_1 - 1} ... with 1 <= m_j <= k_j - 1.
MevResult lambda_general(std::span<const int> weights, std::span<const EllipticParam> params,
                         std::span<const int> powers, const MevOptions& options = {});

// Closed single value of E^(k)_x tau^{m-1}: (-1)^{m+1} B_{k-m}(x1) B_m(x2) / ((k-m) m).
double lambda_general_single_closed(int k, const EllipticParam& x, int m);

// Derivative of Lambda(x_1..x_n) in the second coordinate of x_p (1-based),
// expressed through words of length n - 1.
Complex lambda_partial_x2(std::span<const EllipticParam> params, std::size_t p, const MevOptions& options = {});

std::string sign_string(std::span<const Sign> signs);
std::vector<Sign> parse_signs(const std::string& text);

}  // namespace mevreg
