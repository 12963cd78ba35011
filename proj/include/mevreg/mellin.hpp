#pragma once

#include <optional>

#include "mevreg/eisenstein.hpp"
#include "mevreg/regint.hpp"

namespace mevreg {

// M(f, s) = int_0^infty f(iy) y^{s-1} dy, continued meromorphically.
struct MellinResult {
  Complex value{0.0, 0.0};
  bool is_constant_term_of_laurent = false;
  std::optional<Complex> pole_residue;
};

// Closed form through Hurwitz and periodic zeta values. At a pole the
// constant term is returned only when constant_term_mode is set; removable
// singularities are resolved by symmetric Richardson extrapolation.
MellinResult mellin_eisenstein_closed(const EisensteinSpec& spec, Complex s, bool constant_term_mode = false);

// Termwise incomplete-Gamma evaluation from both expansions, split at y = split.
MellinResult mellin_numeric(const SidedSeries& f, Complex s, bool constant_term_mode = false, double split = 1.0);
// Mellin transform of the coefficient f of omega = f dtau.
MellinResult mellin_numeric(const AdmissibleForm& omega, Complex s, bool constant_term_mode = false);

// L'(G^(1);N G^(1);N, -1) with L(f, s) = sum a_n (n/N)^{-s}; x and y are N-torsion
// points given as fractions, i.e. already divided by N.
double l_deriv_weight2_at_minus1(const EllipticParam& x, const EllipticParam& y, int level);

// Im int_0^infty E^(2)_u(iy) Etilde^(l)_v(iy) dy, from the iterated integral.
double im_I_direct(const EllipticParam& u, const EllipticParam& v, int ell);
// The same quantity from the Mellin transform of a product of G series.
double im_I_rz(const EllipticParam& u, const EllipticParam& v, int ell);

}  // namespace mevreg
