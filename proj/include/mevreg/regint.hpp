#pragma once

#include <string>
#include <vector>

#include "mevreg/series.hpp"

namespace mevreg {

// Which part of a holomorphic form on the imaginary axis is integrated.
enum class Channel { Holomorphic, Real, Imag };

// omega = f(tau) dtau given by its expansion at infinity (inf_side) and the
// expansion of its pull-back under tau -> -1/tau (zero_side).
struct AdmissibleForm {
  TauQSeries inf_side;
  TauQSeries zero_side;
  Channel channel = Channel::Holomorphic;
  std::string label;

  // omega = f(tau) tau^m dtau. Throws DomainError when the pull-back would
  // carry a negative power of tau.
  static AdmissibleForm from_function(const SidedSeries& f, int tau_power = 0, std::string label = {});

  // Real or imaginary part on the imaginary axis.
  AdmissibleForm real_part() const;
  AdmissibleForm imag_part() const;

  AdmissibleForm& operator+=(const AdmissibleForm& o);
  AdmissibleForm& operator-=(const AdmissibleForm& o);
  AdmissibleForm& operator*=(Complex c);
  friend AdmissibleForm operator+(AdmissibleForm a, const AdmissibleForm& b) { return a += b; }
  friend AdmissibleForm operator-(AdmissibleForm a, const AdmissibleForm& b) { return a -= b; }
  friend AdmissibleForm operator*(Complex c, AdmissibleForm a) { return a *= c; }
};

inline constexpr std::size_t kMaxWordLength = 4;

class FormWord {
 public:
  FormWord() = default;
  explicit FormWord(std::vector<AdmissibleForm> letters);

  const std::vector<AdmissibleForm>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  std::string label() const;

 private:
  std::vector<AdmissibleForm> letters_;
};

// The primitive of omega whose regularised value at infinity is zero.
TauQSeries antiderivative_to_infinity(const TauQSeries& omega);

// int_tau^infty omega_1 ... omega_n as a series in tau.
TauQSeries word_integral_to_infinity(const FormWord& word);

struct WordValue {
  Complex value{0.0, 0.0};
  double truncation_bound = 0.0;
};

inline constexpr double kTruncationBudget = 1e-11;

// Regularised int_0^infty omega_1 ... omega_n, split at tau0 = i * base_y.
// Throws PrecisionError when the truncation estimate exceeds the budget.
WordValue word_integral_zero_to_infinity(const FormWord& word, double base_y = 1.0);

// All interleavings of two words (with multiplicity).
std::vector<FormWord> shuffle_expand(const FormWord& a, const FormWord& b);

}  // namespace mevreg
