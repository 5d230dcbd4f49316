#pragma once

#include <string>
#include <vector>

#include "rpl/classical.h"
#include "rpl/specfun.h"

// Semiclassical level-density contributions of the periodic-orbit families.
// Three evaluation methods:
//   Sspm  - isolated-orbit stationary phase (diverges at bifurcations),
//   Ispm2 - quadratic endpoint-corrected phase-space windows (finite
//           through bifurcations),
//   Ispm3 - cubic normal form for the circle term, bridging the circle
//           and the newborn polygon near a bifurcation.
//
// Amplitudes are complex; the density contribution of one orbit is
//   dg = Re[A exp(i(es*tau - pi*maslov/2 - phase_d))] * dE/des,
// expressed in the scaled energy es. Square-root branches are principal,
// oriented so each windowed amplitude reduces to its isolated-orbit
// asymptotic form away from bifurcations (convention note in the README).

namespace rpl {

enum class CircleEndpointMode { Full, ReducedAtBifurcation };
enum class TraceMethod { Sspm, Ispm2, Ispm3 };

Complex amp_polygon_ispm2(const PoData& po, double es);
Complex amp_polygon_sspm(const PoData& po, double es);

// Circle amplitudes. Below kStabilityEps the window form is numerically
// degenerate and amp_circle_ispm2 switches to the algebraic limit.
constexpr double kStabilityEps = 1e-9;
Complex amp_circle_ispm2(const PoData& po, double es, CircleEndpointMode mode);
Complex amp_circle_bif_limit(const PoData& po, double es,
                             CircleEndpointMode mode);
Complex amp_circle_sspm(const PoData& po, double es);

// Cubic-window circle amplitude; a_cubic is the dimensionless third
// derivative coefficient from cubic_coefficient(). Throws for |a_cubic|
// below kCubicMin where the normal form degenerates.
constexpr double kCubicMin = 1e-6;
// Below kCubicBifSwitch the trace evaluation treats the resonance as an
// exact bifurcation and falls back to the quadratic limit form.
constexpr double kCubicBifSwitch = 0.05;
Complex amp_circle_ispm3(const PoData& po, double es, double a_cubic,
                         CircleEndpointMode mode);

Complex amp_diameter(const PoData& po, double es);

// Re[A exp(i(es*tau - pi*maslov/2 - phase_d))] * dE/des
double dg_po(const PoData& po, Complex amp, double es);

struct TraceConfig {
  double alpha = 6.0;
  std::vector<PoData> orbits;
  TraceMethod method = TraceMethod::Ispm2;
  CircleEndpointMode endpoint_mode = CircleEndpointMode::Full;
  double gamma = 0.0;  // Gaussian averaging width in es; 0 = none
};

struct TraceTerm {
  PoData po;
  Complex amp;
  double dg;       // damped density contribution at the requested es
  bool reduced;    // circle evaluated through the bifurcation limit
  double a_cubic;  // cubic coefficient used (Ispm3 circle terms only)
};

// Per-orbit contributions at scaled energy es, Gaussian damping included.
std::vector<TraceTerm> trace_terms(const TraceConfig& cfg, double es);
// Sum of the damped contributions.
double delta_g_scl(const TraceConfig& cfg, double es);

// Orbit-set construction. Accepts the presets "1P1D1C", "5P2D2C",
// "FULLPDC" or a semicolon list of clauses:
//   D:M<=2   C:M<=3   P:max_tau=20   P(3,1):M<=2
// The 1P1D1C preset takes the shortest existing polygon (or the newborn
// one when alpha sits at a bifurcation point).
std::vector<PoData> build_po_set(double alpha, const std::string& spec);

std::string po_label(const PoData& po);  // e.g. "P(3,1)x2", "Cx1", "Dx1"

}  // namespace rpl
