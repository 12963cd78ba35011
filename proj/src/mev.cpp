#include "mevreg/mev.hpp"

#include <cmath>

#include "mevreg/errors.hpp"

namespace mevreg {

namespace {

std::string param_label(const EllipticParam& x) { return "(" + x.str() + ")"; }

void check_params(std::span<const EllipticParam> params, const MevOptions& options) {
  if (params.empty() || params.size() > kMaxWordLength) {
    throw DomainError("MEV length must be between 1 and " + std::to_string(kMaxWordLength));
  }
  for (const auto& x : params) {
    if (x.is_zero()) throw DomainError("MEV parameter at the origin");
    if (params.size() > 1 && x.has_zero_coordinate() && !options.allow_zero_coordinates) {
      throw BoundaryError("nonzero coordinates", "parameter (" + x.str() + ") of a multiple value");
    }
  }
}

WordValue integrate(std::vector<AdmissibleForm> letters, const MevOptions& options) {
  return word_integral_zero_to_infinity(FormWord(std::move(letters)), options.base_y);
}

}  // namespace

AdmissibleForm dlog_siegel_form(const EllipticParam& x, Rational cutoff) {
  if (x.is_zero()) throw DomainError("Siegel unit at the origin");
  SidedSeries e = sided_series({Family::E, 2, x}, cutoff);
  return AdmissibleForm::from_function(kTwoPiI * e, 0, "dlog g" + param_label(x));
}

AdmissibleForm signed_form(const EllipticParam& x, Sign sign, Rational cutoff) {
  const AdmissibleForm f = dlog_siegel_form(x, cutoff);
  return sign == Sign::Plus ? f.real_part() : f.imag_part();
}

AdmissibleForm eisenstein_form(int k, const EllipticParam& x, int m, Rational cutoff) {
  SidedSeries e = sided_series({Family::E, k, x}, cutoff);
  return AdmissibleForm::from_function(e, m - 1,
                                       "E" + std::to_string(k) + param_label(x) + " tau^" + std::to_string(m - 1));
}

AdmissibleForm product_form(int k1, const EllipticParam& x, int k2, const EllipticParam& y, Rational cutoff) {
  SidedSeries f = sided_series({Family::E, k1, x}, cutoff) * sided_series({Family::E, k2, y}, cutoff);
  return AdmissibleForm::from_function(
      f, 0, "E" + std::to_string(k1) + param_label(x) + " E" + std::to_string(k2) + param_label(y));
}

Complex lambda_single_closed(const EllipticParam& x) {
  if (x.is_zero()) throw DomainError("MEV parameter at the origin");
  if (x.x1.is_zero()) return std::log(std::abs(1.0 - unit(x.x2)));
  if (x.x2.is_zero()) return -std::log(std::abs(1.0 - unit(x.x1)));
  return kTwoPiI * (x.x1.to_double() - 0.5) * (x.x2.to_double() - 0.5);
}

MevResult lambda_mev(std::span<const EllipticParam> params, const MevOptions& options) {
  check_params(params, options);
  std::vector<AdmissibleForm> letters;
  std::string word = "Lambda(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    letters.push_back(dlog_siegel_form(params[i], options.cutoff));
    word += (i ? ";" : "") + params[i].str();
  }
  const WordValue v = integrate(std::move(letters), options);
  return {v.value, v.truncation_bound, word + ")"};
}

double lambda_signed(std::span<const EllipticParam> params, std::span<const Sign> signs, const MevOptions& options) {
  check_params(params, options);
  if (signs.size() != params.size()) throw DomainError("one sign per parameter is required");
  std::vector<AdmissibleForm> letters;
  for (std::size_t i = 0; i < params.size(); ++i) letters.push_back(signed_form(params[i], signs[i], options.cutoff));
  return integrate(std::move(letters), options).value.real();
}

MevResult lambda_general(std::span<const int> weights, std::span<const EllipticParam> params,
                         std::span<const int> powers, const MevOptions& options) {
  if (weights.size() != params.size() || powers.size() != params.size()) {
    throw DomainError("weights, parameters and powers must have equal length");
  }
  check_params(params, MevOptions{options.cutoff, options.base_y, true});
  std::vector<AdmissibleForm> letters;
  std::string word = "Lambda(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    const int k = weights[i];
    const int m = powers[i];
    if (k < 2 || m < 1 || m > k - 1) throw DomainError("need k >= 2 and 1 <= m <= k - 1");
    letters.push_back(eisenstein_form(k, params[i], m, options.cutoff));
    word += (i ? ";" : "") + std::string("E") + std::to_string(k) + "(" + params[i].str() + ")^" + std::to_string(m);
  }
  const WordValue v = integrate(std::move(letters), options);
  return {v.value, v.truncation_bound, word + ")"};
}

double lambda_general_single_closed(int k, const EllipticParam& x, int m) {
  if (k < 2 || m < 1 || m > k - 1) throw DomainError("need k >= 2 and 1 <= m <= k - 1");
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;
  return sign * bernoulli_poly(k - m, x.x1.to_double()) * bernoulli_poly(m, x.x2.to_double()) /
         static_cast<double>((k - m) * m);
}

Complex lambda_partial_x2(std::span<const EllipticParam> params, std::size_t p, const MevOptions& options) {
  check_params(params, options);
  const std::size_t n = params.size();
  if (p < 1 || p > n) throw DomainError("position out of range");
  const std::size_t i = p - 1;
  auto dlog = [&](std::size_t j) { return dlog_siegel_form(params[j], options.cutoff); };
  // The letter 2 pi i E^(2)_{x_p} is replaced by d(2 pi i E^(1)_{x_p}).
  auto merged = [&](std::size_t left, std::size_t right, bool weight_one_on_left) {
    const auto& a = params[left];
    const auto& b = params[right];
    AdmissibleForm f = weight_one_on_left ? product_form(1, a, 2, b, options.cutoff)
                                          : product_form(2, a, 1, b, options.cutoff);
    return kTwoPiI * kTwoPiI * f;
  };

  Complex first = 0.0;
  if (i + 1 < n) {
    std::vector<AdmissibleForm> letters;
    for (std::size_t j = 0; j < i; ++j) letters.push_back(dlog(j));
    letters.push_back(merged(i, i + 1, true));
    for (std::size_t j = i + 2; j < n; ++j) letters.push_back(dlog(j));
    first = integrate(std::move(letters), options).value;
  } else {
    const Complex a0 = kTwoPiI * constant_term({Family::E, 1, params[i]});
    if (n == 1) {
      first = a0;
    } else {
      std::vector<AdmissibleForm> letters;
      for (std::size_t j = 0; j + 1 < n; ++j) letters.push_back(dlog(j));
      first = a0 * integrate(std::move(letters), options).value;
    }
  }
  Complex second = 0.0;
  if (i > 0) {
    std::vector<AdmissibleForm> letters;
    for (std::size_t j = 0; j + 1 < i; ++j) letters.push_back(dlog(j));
    letters.push_back(merged(i - 1, i, false));
    for (std::size_t j = i + 1; j < n; ++j) letters.push_back(dlog(j));
    second = integrate(std::move(letters), options).value;
  }
  return first - second;
}

std::string sign_string(std::span<const Sign> signs) {
  std::string s;
  for (Sign x : signs) s += (x == Sign::Plus ? '+' : '-');
  return s;
}

std::vector<Sign> parse_signs(const std::string& text) {
  std::vector<Sign> out;
  for (char c : text) {
    if (c == '+') {
      out.push_back(Sign::Plus);
    } else if (c == '-') {
      out.push_back(Sign::Minus);
    } else {
      throw DomainError("sign string may only contain '+' and '-'");
    }
  }
  return out;
}

}  // namespace mevreg
