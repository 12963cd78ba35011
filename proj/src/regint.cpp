#include "mevreg/regint.hpp"

#include <cmath>
#include <functional>

#include "mevreg/errors.hpp"

namespace mevreg {

AdmissibleForm AdmissibleForm::from_function(const SidedSeries& f, int tau_power, std::string label) {
  const int zero_power = f.sigma_tau_power - tau_power - 2;
  if (tau_power < 0 || zero_power < 0) {
    throw DomainError("form is not admissible: pull-back carries tau^" + std::to_string(zero_power));
  }
  AdmissibleForm out;
  out.inf_side = multiply_tau_power(f.inf, tau_power);
  out.zero_side = multiply_tau_power(f.sigma, zero_power);
  if (tau_power % 2 != 0) out.zero_side *= -1.0;
  out.label = std::move(label);
  return out;
}

namespace {

// On the axis dtau = i dy, so conj(f dtau) = -conj_axis(f) dtau.
TauQSeries real_coefficient(const TauQSeries& f) { return 0.5 * (f - conj_axis(f)); }
TauQSeries imag_coefficient(const TauQSeries& f) { return Complex(0.0, -0.5) * (f + conj_axis(f)); }

}  // namespace

AdmissibleForm AdmissibleForm::real_part() const {
  return {real_coefficient(inf_side), real_coefficient(zero_side), Channel::Real, "Re " + label};
}

AdmissibleForm AdmissibleForm::imag_part() const {
  return {imag_coefficient(inf_side), imag_coefficient(zero_side), Channel::Imag, "Im " + label};
}

AdmissibleForm& AdmissibleForm::operator+=(const AdmissibleForm& o) {
  inf_side += o.inf_side;
  zero_side += o.zero_side;
  if (channel != o.channel) channel = Channel::Holomorphic;
  label = "(" + label + " + " + o.label + ")";
  return *this;
}

AdmissibleForm& AdmissibleForm::operator-=(const AdmissibleForm& o) {
  inf_side -= o.inf_side;
  zero_side -= o.zero_side;
  if (channel != o.channel) channel = Channel::Holomorphic;
  label = "(" + label + " - " + o.label + ")";
  return *this;
}

AdmissibleForm& AdmissibleForm::operator*=(Complex c) {
  inf_side *= c;
  zero_side *= c;
  if (c.imag() != 0.0) channel = Channel::Holomorphic;
  return *this;
}

FormWord::FormWord(std::vector<AdmissibleForm> letters) : letters_(std::move(letters)) {
  if (letters_.empty() || letters_.size() > kMaxWordLength) {
    throw DomainError("word length must be between 1 and " + std::to_string(kMaxWordLength));
  }
}

std::string FormWord::label() const {
  std::string s;
  for (const auto& l : letters_) {
    if (!s.empty()) s += " | ";
    s += l.label;
  }
  return s;
}

TauQSeries antiderivative_to_infinity(const TauQSeries& omega) {
  TauQSeries out(omega.cutoff(), omega.level_hint());
  for (const auto& [key, c] : omega.terms()) {
    const int m = key.tau_power;
    if (key.alpha.is_zero()) {
      out.add_term(0, m + 1, c / static_cast<double>(m + 1));
      continue;
    }
    // int tau^m e^{k tau} = e^{k tau} sum_j (-1)^j m!/(m-j)! tau^{m-j} / k^{j+1}
    const Complex k = kTwoPiI * key.alpha.to_double();
    Complex falling = 1.0;
    Complex kpow = k;
    for (int j = 0; j <= m; ++j) {
      out.add_term(key.alpha, m - j, c * falling / kpow);
      falling *= -static_cast<double>(m - j);
      kpow *= k;
    }
  }
  return out;
}

namespace {

// Right fold: result[k] = int_tau^infty letters[k] ... letters[n-1], result[n] = 1.
std::vector<TauQSeries> suffix_integrals(const std::vector<const TauQSeries*>& letters, const Rational& cutoff) {
  const std::size_t n = letters.size();
  std::vector<TauQSeries> out(n + 1);
  out[n] = TauQSeries::constant(1.0, cutoff);
  for (std::size_t k = n; k-- > 0;) {
    out[k] = antiderivative_to_infinity(*letters[k] * out[k + 1]) * Complex(-1.0, 0.0);
  }
  return out;
}

Rational word_cutoff(const FormWord& word) {
  Rational c = word.letters().front().inf_side.cutoff();
  for (const auto& l : word.letters()) c = std::min({c, l.inf_side.cutoff(), l.zero_side.cutoff()});
  return c;
}

}  // namespace

TauQSeries word_integral_to_infinity(const FormWord& word) {
  std::vector<const TauQSeries*> letters;
  for (const auto& l : word.letters()) letters.push_back(&l.inf_side);
  return suffix_integrals(letters, word_cutoff(word)).front();
}

WordValue word_integral_zero_to_infinity(const FormWord& word, double base_y) {
  const std::size_t n = word.size();
  const Rational cutoff = word_cutoff(word);
  std::vector<const TauQSeries*> inf_letters;
  std::vector<const TauQSeries*> zero_letters;  // pulled back, reversed
  for (const auto& l : word.letters()) inf_letters.push_back(&l.inf_side);
  for (std::size_t k = n; k-- > 0;) zero_letters.push_back(&word.letters()[k].zero_side);

  const auto inf = suffix_integrals(inf_letters, cutoff);
  const auto zero = suffix_integrals(zero_letters, cutoff);

  // int_0^infty = sum_k int_0^{tau0} w_1..w_k * int_{tau0}^infty w_{k+1}..w_n with
  // int_0^{tau0} w_1..w_k = (-1)^k int_{-1/tau0}^infty w_k^s .. w_1^s.
  WordValue out;
  for (std::size_t k = 0; k <= n; ++k) {
    const Evaluation right = evaluate_at(inf[k], base_y);
    const Evaluation left = k == 0 ? Evaluation{1.0, 0.0} : evaluate_at(zero[n - k], 1.0 / base_y);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    out.value += sign * left.value * right.value;
    out.truncation_bound += std::abs(left.value) * right.tail_bound + std::abs(right.value) * left.tail_bound +
                            left.tail_bound * right.tail_bound;
  }
  if (out.truncation_bound > kTruncationBudget) {
    throw PrecisionError("truncation bound " + std::to_string(out.truncation_bound) +
                         " exceeds budget; raise the cutoff");
  }
  return out;
}

std::vector<FormWord> shuffle_expand(const FormWord& a, const FormWord& b) {
  if (a.size() + b.size() > kMaxWordLength) throw DomainError("shuffle result longer than the maximal word");
  std::vector<FormWord> out;
  std::vector<AdmissibleForm> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == a.size() && j == b.size()) {
      out.emplace_back(current);
      return;
    }
    if (i < a.size()) {
      current.push_back(a.letters()[i]);
      rec(i + 1, j);
      current.pop_back();
    }
    if (j < b.size()) {
      current.push_back(b.letters()[j]);
      rec(i, j + 1);
      current.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace mevreg
