#include "mevreg/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "mevreg/errors.hpp"

namespace mevreg {

TauQSeries::TauQSeries(Rational cutoff, int level_hint) : cutoff_(cutoff), level_hint_(level_hint) {
  if (cutoff < Rational(0)) throw DomainError("negative series cutoff");
}

TauQSeries TauQSeries::constant(Complex c, Rational cutoff) {
  TauQSeries s(cutoff);
  s.add_term(Rational(0), 0, c);
  return s;
}

TauQSeries TauQSeries::monomial(Complex c, Rational alpha, int tau_power, Rational cutoff) {
  TauQSeries s(cutoff);
  s.add_term(alpha, tau_power, c);
  return s;
}

void TauQSeries::add_term(const Rational& alpha, int tau_power, Complex c) {
  if (alpha < Rational(0)) throw DomainError("negative q-exponent " + alpha.str());
  if (tau_power < 0) throw DomainError("negative tau power");
  if (alpha > cutoff_ || c == Complex(0.0, 0.0)) return;
  auto [it, inserted] = terms_.try_emplace(SeriesKey{alpha, tau_power}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
  }
}

Complex TauQSeries::coeff(const Rational& alpha, int tau_power) const {
  auto it = terms_.find(SeriesKey{alpha, tau_power});
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

int TauQSeries::max_tau_power() const {
  int m = 0;
  for (const auto& [key, c] : terms_) m = std::max(m, key.tau_power);
  return m;
}

TauQSeries& TauQSeries::operator+=(const TauQSeries& o) {
  if (o.cutoff_ < cutoff_) *this = truncate(*this, o.cutoff_);
  for (const auto& [key, c] : o.terms_) add_term(key.alpha, key.tau_power, c);
  level_hint_ = std::max(level_hint_, o.level_hint_);
  return *this;
}

TauQSeries& TauQSeries::operator-=(const TauQSeries& o) {
  if (o.cutoff_ < cutoff_) *this = truncate(*this, o.cutoff_);
  for (const auto& [key, c] : o.terms_) add_term(key.alpha, key.tau_power, -c);
  level_hint_ = std::max(level_hint_, o.level_hint_);
  return *this;
}

TauQSeries& TauQSeries::operator*=(Complex c) {
  if (c == Complex(0.0, 0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

TauQSeries operator*(const TauQSeries& a, const TauQSeries& b) {
  TauQSeries out(std::min(a.cutoff(), b.cutoff()), std::max(a.level_hint(), b.level_hint()));
  for (const auto& [ka, ca] : a.terms()) {
    if (ka.alpha > out.cutoff()) break;
    for (const auto& [kb, cb] : b.terms()) {
      Rational alpha = ka.alpha + kb.alpha;
      if (alpha > out.cutoff()) break;
      out.add_term(alpha, ka.tau_power + kb.tau_power, ca * cb);
    }
  }
  return out;
}

TauQSeries conj_axis(const TauQSeries& f) {
  TauQSeries out(f.cutoff(), f.level_hint());
  for (const auto& [key, c] : f.terms()) {
    out.add_term(key.alpha, key.tau_power, (key.tau_power % 2 == 0 ? 1.0 : -1.0) * std::conj(c));
  }
  return out;
}

TauQSeries derivative(const TauQSeries& f) {
  TauQSeries out(f.cutoff(), f.level_hint());
  for (const auto& [key, c] : f.terms()) {
    if (key.tau_power > 0) out.add_term(key.alpha, key.tau_power - 1, c * static_cast<double>(key.tau_power));
    if (!key.alpha.is_zero()) out.add_term(key.alpha, key.tau_power, c * kTwoPiI * key.alpha.to_double());
  }
  return out;
}

TauQSeries multiply_tau_power(const TauQSeries& f, int p) {
  TauQSeries out(f.cutoff(), f.level_hint());
  for (const auto& [key, c] : f.terms()) {
    if (key.tau_power + p < 0) throw DomainError("tau power would become negative");
    out.add_term(key.alpha, key.tau_power + p, c);
  }
  return out;
}

TauQSeries rescale(const TauQSeries& f, const Rational& lambda) {
  if (lambda <= Rational(0)) throw DomainError("rescale needs a positive factor");
  TauQSeries out(f.cutoff() * lambda, f.level_hint());
  const double l = lambda.to_double();
  for (const auto& [key, c] : f.terms()) {
    out.add_term(key.alpha * lambda, key.tau_power, c * std::pow(l, key.tau_power));
  }
  return out;
}

TauQSeries truncate(const TauQSeries& f, const Rational& cutoff) {
  TauQSeries out(cutoff, f.level_hint());
  for (const auto& [key, c] : f.terms()) {
    if (key.alpha > cutoff) break;
    out.add_term(key.alpha, key.tau_power, c);
  }
  return out;
}

Complex reg_value_at_infinity(const TauQSeries& f) { return f.coeff(Rational(0), 0); }

Precision precision_mode() {
  static const Precision mode = [] {
    const char* env = std::getenv("MEVREG_PRECISION");
    if (env != nullptr && std::string(env) == "extended") return Precision::Extended;
    return Precision::Double;
  }();
  return mode;
}

namespace {

template <typename Real>
std::complex<Real> sum_terms(const TauQSeries& f, Real y, Real& top_band) {
  using C = std::complex<Real>;
  C sum = 0;
  const Rational band_start = f.cutoff() - Rational(1);
  const Real two_pi = static_cast<Real>(2) * std::numbers::pi_v<Real>;
  static const C kPowersOfI[4] = {C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
  for (const auto& [key, c] : f.terms()) {
    const Real decay = std::exp(-two_pi * static_cast<Real>(key.alpha.to_long_double()) * y);
    const Real ym = std::pow(y, key.tau_power);
    const C term = C(static_cast<Real>(c.real()), static_cast<Real>(c.imag())) * kPowersOfI[key.tau_power % 4] *
                   (ym * decay);
    sum += term;
    if (key.alpha > band_start) top_band += std::abs(term);
  }
  return sum;
}

}  // namespace

Evaluation evaluate_at(const TauQSeries& f, double y) {
  if (y < 0.5) throw DomainError("evaluate_at needs y >= 0.5, got " + std::to_string(y));
  Evaluation out;
  const double r = std::exp(-2.0 * kPi * y);
  if (precision_mode() == Precision::Extended) {
    long double top = 0.0L;
    auto v = sum_terms<long double>(f, y, top);
    out.value = Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    out.tail_bound = static_cast<double>(top) * 2.0 * r / (1.0 - r);
  } else {
    double top = 0.0;
    out.value = sum_terms<double>(f, y, top);
    out.tail_bound = top * 2.0 * r / (1.0 - r);
  }
  return out;
}

Complex evaluate_at_tau(const TauQSeries& f, Complex tau) {
  if (!(tau.imag() > 0.0)) throw DomainError("evaluate_at_tau needs Im(tau) > 0");
  Complex sum = 0.0;
  for (const auto& [key, c] : f.terms()) {
    sum += c * std::pow(tau, key.tau_power) * std::exp(kTwoPiI * key.alpha.to_double() * tau);
  }
  return sum;
}

SeriesDifference max_coefficient_difference(const TauQSeries& a, const TauQSeries& b) {
  SeriesDifference out;
  const Rational cut = std::min(a.cutoff(), b.cutoff());
  auto consider = [&](const SeriesKey& key) {
    if (key.alpha > cut) return;
    double d = std::abs(a.coeff(key.alpha, key.tau_power) - b.coeff(key.alpha, key.tau_power));
    if (d > out.max_abs) {
      out.max_abs = d;
      out.worst = key;
    }
  };
  for (const auto& [key, c] : a.terms()) consider(key);
  for (const auto& [key, c] : b.terms()) consider(key);
  return out;
}

namespace {

// Brings two sigma sides to a common tau power, the smaller of the two.
void align_sigma(SidedSeries& a, const SidedSeries& b, TauQSeries& b_sigma) {
  const int p = std::min(a.sigma_tau_power, b.sigma_tau_power);
  if (a.sigma_tau_power > p) a.sigma = multiply_tau_power(a.sigma, a.sigma_tau_power - p);
  b_sigma = b.sigma_tau_power > p ? multiply_tau_power(b.sigma, b.sigma_tau_power - p) : b.sigma;
  a.sigma_tau_power = p;
}

}  // namespace

SidedSeries& SidedSeries::operator+=(const SidedSeries& o) {
  TauQSeries other;
  align_sigma(*this, o, other);
  inf += o.inf;
  sigma += other;
  return *this;
}

SidedSeries& SidedSeries::operator-=(const SidedSeries& o) {
  TauQSeries other;
  align_sigma(*this, o, other);
  inf -= o.inf;
  sigma -= other;
  return *this;
}

SidedSeries& SidedSeries::operator*=(Complex c) {
  inf *= c;
  sigma *= c;
  return *this;
}

SidedSeries operator*(const SidedSeries& a, const SidedSeries& b) {
  return SidedSeries{a.inf * b.inf, a.sigma * b.sigma, a.sigma_tau_power + b.sigma_tau_power};
}

SidedSeries conj_axis(const SidedSeries& f) {
  TauQSeries sigma = conj_axis(f.sigma);
  if (f.sigma_tau_power % 2 != 0) sigma *= -1.0;
  return SidedSeries{conj_axis(f.inf), sigma, f.sigma_tau_power};
}

}  // namespace mevreg
