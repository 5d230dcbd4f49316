#pragma once

#include <complex>

// Special-function kernels for oscillatory endpoint integrals:
// complex error function, incomplete Airy/Gairy pairs, and the cubic
// normal-form catastrophe integral in both direct-quadrature and
// Airy-form evaluations.

namespace rpl {

using Complex = std::complex<double>;

// erf(z) for complex z. Maclaurin series for |z| <= 3, otherwise
// 1 - exp(-z^2) w(iz) with the Faddeeva function from a midpoint-rule
// sum plus pole correction. Supported for |Im z| <= |Re z| + 25 or so;
// deep in the erfi growth region (|Im z|^2 - |Re z|^2 > 700) the result
// overflows and a std::domain_error is thrown.
Complex erf_complex(Complex z);

// erf(z1, z2) = erf(z2) - erf(z1), the two-limit form used by the
// finite-window stationary-phase amplitudes.
Complex erf_two_limit(Complex z1, Complex z2);

struct AiryGairy {
  double ai;
  double gi;
};

// Incomplete Airy and Gairy integrals over a finite window:
//   ai = (1/pi) int_{z1}^{z2} cos(t^3/3 + x t) dt
//   gi = (1/pi) int_{z1}^{z2} sin(t^3/3 + x t) dt
// Evaluated by phase-chopped Gauss-Kronrod panels; deterministic,
// absolute accuracy ~1e-12 for |z| up to a few tens.
AiryGairy airy_gairy_incomplete(double x, double z1, double z2);

// Complete Ai(x) and Scorer Gi(x) (the z2 -> infinity limits of the
// half-line versions). Ai from boost; Gi = Bi - Hi with Hi by
// tanh-sinh quadrature of its monotone integral representation.
AiryGairy airy_gairy_complete(double x);

// Cubic normal-form phase kappa*(eps*xi^2 + a*xi^3) over [xi1, xi2].
// make() normalizes a > 0 by the mirror substitution xi -> -xi (which
// leaves the integral invariant) and precomputes the Airy-form data.
struct CatastropheParams {
  double kappa;
  double eps;
  double a;         // > 0 after normalization
  double xi1, xi2;  // window, possibly mirrored
  bool mirrored;
  double w;        // kappa^{2/3} eps^2 / (3a)^{4/3}
  double lambda;   // (3 a kappa)^{-1/3}
  double upsilon;  // -eps / (3a), the inflection point
  int sigma;       // sign of eps (+1 for eps == 0)
  double z1, z2;   // mapped window (xi - upsilon)/lambda

  static CatastropheParams make(double kappa, double eps, double a,
                                double xi1, double xi2);
};

// a_star * exp(i kappa phi_star) * int_{xi1}^{xi2} exp(i kappa (eps xi^2 + a xi^3)) dxi
// by direct phase-chopped quadrature. Independent of the Airy path.
Complex catastrophe_direct(double a_star, double phi_star, double kappa,
                           double eps, double a, double xi1, double xi2);

// Same integral through the Airy normal form:
//   pi*Lambda * exp(2 i sigma w^{3/2} / 3) * [Ai + i Gi](-w; z1, z2)
Complex catastrophe_airy_form(double a_star, double phi_star,
                              const CatastropheParams& p);

}  // namespace rpl
