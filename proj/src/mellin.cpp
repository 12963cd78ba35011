#include "mevreg/mellin.hpp"

#include <cmath>
#include <functional>

#include "mevreg/errors.hpp"

namespace mevreg {

namespace {

constexpr double kStep = 1e-3;

const Complex kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

Complex ipow(int m) { return kPowersOfI[((m % 4) + 4) % 4]; }

bool is_integer_point(Complex s) { return s.imag() == 0.0 && s.real() == std::round(s.real()); }

// Resolve a singular point of a meromorphic function from values at s +- h, s +- 2h.
MellinResult laurent_by_richardson(const std::function<Complex(Complex)>& fn, Complex s, bool constant_term_mode,
                                   const std::string& what) {
  auto parts = [&](double h) {
    const Complex plus = fn(s + h);
    const Complex minus = fn(s - h);
    return std::pair{0.5 * (plus + minus), 0.5 * h * (plus - minus)};
  };
  const auto [even1, odd1] = parts(kStep);
  const auto [even2, odd2] = parts(2 * kStep);
  const Complex constant = (4.0 * even1 - even2) / 3.0;
  const Complex residue = (4.0 * odd1 - odd2) / 3.0;
  MellinResult out;
  out.value = constant;
  if (std::abs(residue) <= 1e-6 * std::max(1.0, std::abs(constant))) return out;
  if (!constant_term_mode) throw PoleError(what + " has a pole at s = " + std::to_string(s.real()));
  out.is_constant_term_of_laurent = true;
  out.pole_residue = residue;
  return out;
}

Complex two_pi_pow(Complex s) { return std::exp(-s * std::log(2 * kPi)); }

Complex closed_e(int k, const EllipticParam& x, Complex s) {
  const Complex shifted = s - static_cast<double>(k - 1);
  const double sign = (k % 2 == 1) ? 1.0 : -1.0;  // (-1)^{k+1}
  return two_pi_pow(s) * gamma(s) *
         (-hurwitz_zeta(x.x1, shifted) * periodic_zeta(x.x2, s) +
          sign * hurwitz_zeta(-x.x1, shifted) * periodic_zeta(-x.x2, s));
}

Complex closed_g(int k, const EllipticParam& x, Complex s) {
  const Complex shifted = s - static_cast<double>(k - 1);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return two_pi_pow(s) * gamma(s) *
         (hurwitz_zeta(x.x1, shifted) * hurwitz_zeta(x.x2, s) +
          sign * hurwitz_zeta(-x.x1, shifted) * hurwitz_zeta(-x.x2, s));
}

// int_y0^infty y^{w-1} e^{-beta y} dy
Complex tail_integral(Complex w, double beta, double y0) {
  const IncompleteGamma g = upper_incomplete_gamma(w, beta * y0);
  return std::exp(-w * std::log(beta)) * g.value;
}

}  // namespace

MellinResult mellin_eisenstein_closed(const EisensteinSpec& spec, Complex s, bool constant_term_mode) {
  spec.validate();
  std::function<Complex(Complex)> fn;
  const int k = spec.weight;
  const EllipticParam x = spec.param;
  switch (spec.family) {
    case Family::E: fn = [=](Complex t) { return closed_e(k, x, t); }; break;
    case Family::G: fn = [=](Complex t) { return closed_g(k, x, t); }; break;
    case Family::H: {
      // H(iy) = (i/y)^k G(i/y), hence M(H, s) = i^k M(G, k - s).
      const Complex ik = ipow(k);
      fn = [=](Complex t) { return ik * closed_g(k, x, static_cast<double>(k) - t); };
      break;
    }
    case Family::LogSiegel: throw DomainError("no closed Mellin transform for the Siegel logarithm");
  }
  if (!is_integer_point(s)) return {fn(s), false, std::nullopt};
  try {
    const Complex v = fn(s);
    if (std::isfinite(v.real()) && std::isfinite(v.imag())) return {v, false, std::nullopt};
  } catch (const PoleError&) {
  }
  return laurent_by_richardson(fn, s, constant_term_mode, "M(" + spec.str() + ")");
}

MellinResult mellin_numeric(const SidedSeries& f, Complex s, bool constant_term_mode, double split) {
  if (!(split > 0.0)) throw DomainError("split point must be positive");
  MellinResult out;
  Complex residue = 0.0;
  bool pole = false;
  auto add = [&](const TauQSeries& series, int extra_power, double sign_s, double y0) {
    for (const auto& [key, c] : series.terms()) {
      const int m = key.tau_power + extra_power;
      const Complex coeff = c * ipow(m);
      const Complex w = static_cast<double>(m) + sign_s * s;
      if (key.alpha.is_zero()) {
        if (std::abs(w) < 1e-14) {
          pole = true;
          // -y0^w / w = -1/w - log y0 + O(w), with w = sign_s (s - s0).
          residue += -sign_s * coeff;
          out.value += -std::log(y0) * coeff;
        } else {
          out.value += -coeff * std::exp(w * std::log(y0)) / w;
        }
        continue;
      }
      out.value += coeff * tail_integral(w, 2 * kPi * key.alpha.to_double(), y0);
    }
  };
  add(f.inf, 0, 1.0, split);
  add(f.sigma, f.sigma_tau_power, -1.0, 1.0 / split);
  if (pole && std::abs(residue) > 0.0) {
    if (!constant_term_mode) throw PoleError("Mellin transform has a pole at s = " + std::to_string(s.real()));
    out.is_constant_term_of_laurent = true;
    out.pole_residue = residue;
  }
  return out;
}

MellinResult mellin_numeric(const AdmissibleForm& omega, Complex s, bool constant_term_mode) {
  // The pull-back coefficient is f(-1/tau) tau^{-2}.
  return mellin_numeric(SidedSeries{omega.inf_side, omega.zero_side, 2}, s, constant_term_mode);
}

double l_deriv_weight2_at_minus1(const EllipticParam& x, const EllipticParam& y, int level) {
  if (level <= 0) throw DomainError("level must be positive");
  auto index = [level](const Rational& r) {
    const Rational scaled = r * level;
    if (!scaled.is_integer()) throw DomainError(r.str() + " is not N-torsion for N = " + std::to_string(level));
    return scaled.num();
  };
  const SidedSeries f = sided_level_series(1, level, index(x.x1), index(x.x2)) *
                        sided_level_series(1, level, index(y.x1), index(y.x2));
  // M(f, s) = (2 pi)^{-s} Gamma(s) L(f, s) and L(f, -1) = 0, so M(f, -1) = -2 pi L'(f, -1).
  return (-mellin_numeric(f, -1.0).value / (2 * kPi)).real();
}

namespace {

void check_rz(const EllipticParam& u, const EllipticParam& v, int ell) {
  if (ell < 2) throw DomainError("need l >= 2");
  if (u.has_zero_coordinate() || v.has_zero_coordinate()) {
    throw BoundaryError("nonzero coordinates", "u = (" + u.str() + "), v = (" + v.str() + ")");
  }
}

}  // namespace

double im_I_direct(const EllipticParam& u, const EllipticParam& v, int ell) {
  check_rz(u, v, ell);
  const FormWord word({AdmissibleForm::from_function(sided_series({Family::E, 2, u})),
                       AdmissibleForm::from_function(sided_series({Family::E, ell, v}))});
  // int E_u(iy) Etilde_v(iy) dy = -2 pi int_0^infty omega_u omega_v.
  return (-2 * kPi * word_integral_zero_to_infinity(word).value).imag();
}

double im_I_rz(const EllipticParam& u, const EllipticParam& v, int ell) {
  check_rz(u, v, ell);
  auto g = [](int k, const Rational& a, const Rational& b) { return sided_series({Family::G, k, {a, b}}); };
  const SidedSeries f = g(1, u.x1, v.x2) * g(ell - 1, v.x1, -u.x2) - g(1, u.x1, -v.x2) * g(ell - 1, v.x1, u.x2);
  return (-0.5 * mellin_numeric(f, 0.0).value).real();
}

}  // namespace mevreg
