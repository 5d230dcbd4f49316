#pragma once

#include <optional>

// Classical mechanics of the spherical power-law potential V(r) = r^alpha
// in units hbar = m = 1: turning points, action integrals, periodic-orbit
// families (diameter, circle, polygon-type resonances), and the action
// phase of closed-orbit families used for cubic normal-form expansions.
//
// Scaling: all orbit data is computed at E = 1 and mapped to other
// energies through the scaled energy es = E^(1/2 + 1/alpha), under which
// L(E) = L(1) es, S(E) = tau * es, K(E) = K(1)/es,
// T(E) = T(1) es^((alpha-2)/(alpha+2)).

namespace rpl {

double scaled_energy(double alpha, double E);
double energy_from_scaled(double alpha, double es);
double denergy_dscaled(double alpha, double es);

// Squared radial momentum 2(E - r^alpha) - L^2/r^2.
double pr2(double alpha, double E, double L, double r);

struct Turning {
  double r1, r2;
};
// Inner and outer turning points; throws if no classical motion.
Turning turning_points(double alpha, double E, double L);

// I_r = (1/pi) int_{r1}^{r2} p_r dr
double radial_action(double alpha, double E, double L);
// Angle swept over one radial period, Theta = 2 int (L/r^2)/p_r dr.
double angle_advance(double alpha, double E, double L);
// One full radial libration, T_r = 2 int dr/p_r.
double radial_period(double alpha, double E, double L);
// d^2 I_r / dL^2 by Richardson finite differences, positive.
double action_curvature(double alpha, double E, double L);

struct CircleOrbit {
  double alpha, E;
  double r;            // orbit radius
  double L;            // angular momentum (= max L at this energy)
  double omega;        // angular frequency L/r^2
  double omega_ratio;  // radial/angular frequency ratio sqrt(alpha+2)
  double T;            // primitive period 2 pi / omega
  double K;            // d^2 I_r/dL^2 limit, signed convention (negative)
  double tau;          // scaled primitive action 2 pi L(E=1)
};
CircleOrbit circle_orbit(double alpha, double E);

// 4 sin^2(pi M sqrt(alpha+2)); zero exactly at resonant alpha.
double stability_factor(double alpha, int M);
// Resonance threshold where the (n_r, n_theta) polygon orbit detaches
// from the circle: alpha = (n_r/n_theta)^2 - 2.
double alpha_bif(int n_r, int n_theta);

enum class PoFamily { Polygon, Circle, Diameter };

// One periodic orbit (the M-th repetition of a primitive). Orbit data at
// E = 1; tau and maslov include the repetition count, T does not.
struct PoData {
  PoFamily family;
  int M;
  int n_r, n_theta;  // windings of the primitive (circle: resonant label)
  double alpha;
  double L;        // angular momentum at E = 1
  double I_r;      // radial action at E = 1
  double tau;      // scaled action of the full orbit, M * primitive
  double T;        // primitive period at E = 1
  double K;        // d^2 I_r/dL^2: positive for Polygon/Diameter forms,
                   // signed (negative) circle convention
  int maslov;
  double phase_d;  // extra phase offset in the density contribution
};

// Polygon-type resonance P(n_r, n_theta): n_r radial periods per n_theta
// revolutions. Exists only for alpha > alpha_bif(n_r, n_theta).
std::optional<PoData> find_polygon(double alpha, int n_r, int n_theta, int M);
PoData find_diameter(double alpha, int M);
PoData find_circle_po(double alpha, int M);

// Action phase Phi(r) of the closed-orbit family that starts and ends at
// radius r after M n_theta revolutions with M n_r - 1 or M n_r inner
// reflections (side chosen by the sign of M n_theta sqrt(alpha+2) - M n_r).
// Phi(r_C) = 2 pi M n_theta L_C; Phi'(r) = -2 p_r(r). Units E = 1.
double closed_orbit_phase(double alpha, int M, int n_r, int n_theta, double r);

struct PhaseDerivs {
  double d2, d3;  // d^2 Phi/dr^2 and d^3 Phi/dr^3 at r = r_C
};
// One-sided Richardson stencils on the existing-family side.
PhaseDerivs closed_orbit_phase_derivs(double alpha, int M, int n_r,
                                      int n_theta);

// Dimensionless cubic coefficient a = r_C^3 Phi'''(r_C) / (6 L_C) of the
// normal form in xi = r/r_C - 1; vanishes linearly at the bifurcation.
double cubic_coefficient(double alpha, int M, int n_r, int n_theta);

}  // namespace rpl
