#pragma once

#include <compare>
#include <map>

#include "mevreg/rational.hpp"
#include "mevreg/specfun.hpp"

namespace mevreg {

// Default truncation of q-exponents.
inline Rational default_cutoff() { return Rational(12); }

struct SeriesKey {
  Rational alpha;  // q-exponent
  int tau_power = 0;
  friend auto operator<=>(const SeriesKey&, const SeriesKey&) = default;
};

// Finite sum of c * tau^m * q^alpha with q = e(tau), alpha >= 0, m >= 0.
// Terms with alpha above the cutoff are dropped on insertion; exact zeros are
// never stored.
class TauQSeries {
 public:
  using Terms = std::map<SeriesKey, Complex>;

  TauQSeries() : cutoff_(default_cutoff()) {}
  explicit TauQSeries(Rational cutoff, int level_hint = 1);

  static TauQSeries constant(Complex c, Rational cutoff = default_cutoff());
  static TauQSeries monomial(Complex c, Rational alpha, int tau_power,
                             Rational cutoff = default_cutoff());

  void add_term(const Rational& alpha, int tau_power, Complex c);

  const Terms& terms() const { return terms_; }
  const Rational& cutoff() const { return cutoff_; }
  int level_hint() const { return level_hint_; }
  void set_level_hint(int n) { level_hint_ = n; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Complex coeff(const Rational& alpha, int tau_power) const;
  int max_tau_power() const;

  TauQSeries& operator+=(const TauQSeries& o);
  TauQSeries& operator-=(const TauQSeries& o);
  TauQSeries& operator*=(Complex c);

  friend TauQSeries operator+(TauQSeries a, const TauQSeries& b) { return a += b; }
  friend TauQSeries operator-(TauQSeries a, const TauQSeries& b) { return a -= b; }
  friend TauQSeries operator*(TauQSeries a, Complex c) { return a *= c; }
  friend TauQSeries operator*(Complex c, TauQSeries a) { return a *= c; }
  friend TauQSeries operator*(const TauQSeries& a, const TauQSeries& b);

 private:
  Terms terms_;
  Rational cutoff_;
  int level_hint_ = 1;
};

// c_{alpha,m} -> (-1)^m conj(c): the series whose values on the imaginary
// axis are the complex conjugates of the original.
TauQSeries conj_axis(const TauQSeries& f);
TauQSeries derivative(const TauQSeries& f);
TauQSeries multiply_tau_power(const TauQSeries& f, int p);
// f(lambda tau) for rational lambda > 0.
TauQSeries rescale(const TauQSeries& f, const Rational& lambda);
TauQSeries truncate(const TauQSeries& f, const Rational& cutoff);

Complex reg_value_at_infinity(const TauQSeries& f);

struct Evaluation {
  Complex value{0.0, 0.0};
  double tail_bound = 0.0;  // estimate of the dropped terms beyond the cutoff
};

// Value at tau = i y. Requires y >= 0.5.
Evaluation evaluate_at(const TauQSeries& f, double y);
// Value at an arbitrary point of the upper half plane, no tail estimate.
Complex evaluate_at_tau(const TauQSeries& f, Complex tau);

struct SeriesDifference {
  double max_abs = 0.0;
  SeriesKey worst{};
};
SeriesDifference max_coefficient_difference(const TauQSeries& a, const TauQSeries& b);

// A function f given by its expansion at infinity together with its
// expansion at zero: f(-1/tau) = tau^p * sigma(tau).
struct SidedSeries {
  TauQSeries inf;
  TauQSeries sigma;
  int sigma_tau_power = 0;

  SidedSeries& operator+=(const SidedSeries& o);
  SidedSeries& operator-=(const SidedSeries& o);
  SidedSeries& operator*=(Complex c);
  friend SidedSeries operator+(SidedSeries a, const SidedSeries& b) { return a += b; }
  friend SidedSeries operator-(SidedSeries a, const SidedSeries& b) { return a -= b; }
  friend SidedSeries operator*(SidedSeries a, Complex c) { return a *= c; }
  friend SidedSeries operator*(Complex c, SidedSeries a) { return a *= c; }
  friend SidedSeries operator*(const SidedSeries& a, const SidedSeries& b);
};

SidedSeries conj_axis(const SidedSeries& f);

// Precision mode, read once from MEVREG_PRECISION ("double" or "extended").
enum class Precision { Double, Extended };
Precision precision_mode();

}  // namespace mevreg
