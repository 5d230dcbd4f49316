#include "rpl/classical.h"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rpl {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

boost::math::quadrature::tanh_sinh<double>& quad() {
  static thread_local boost::math::quadrature::tanh_sinh<double> ts;
  return ts;
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              int iters) {
  double flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Radius of the effective-potential minimum.
double rbar(double alpha, double L) {
  return std::pow(L * L / alpha, 1.0 / (alpha + 2.0));
}

double circle_L_unit(double alpha) {
  // L of the circular orbit at E = 1
  return std::sqrt(2.0 * alpha / (alpha + 2.0)) *
         std::pow(2.0 / (alpha + 2.0), 1.0 / alpha);
}

}  // namespace

double scaled_energy(double alpha, double E) {
  return std::pow(E, 0.5 + 1.0 / alpha);
}

double energy_from_scaled(double alpha, double es) {
  return std::pow(es, 2.0 * alpha / (alpha + 2.0));
}

double denergy_dscaled(double alpha, double es) {
  return 2.0 * alpha / (alpha + 2.0) *
         std::pow(es, (alpha - 2.0) / (alpha + 2.0));
}

double pr2(double alpha, double E, double L, double r) {
  double cf = L == 0.0 ? 0.0 : L * L / (r * r);
  return 2.0 * (E - std::pow(r, alpha)) - cf;
}

namespace {

// Difference quotient (pr2(r) - pr2(r0)) / (r - r0) in a cancellation-free
// form; exact at r == r0. Turning-point factors divide out analytically.
double pr2_slope(double alpha, double L, double r0, double r) {
  double x = (r - r0) / r0;
  double phi = x == 0.0 ? alpha : std::expm1(alpha * std::log1p(x)) / x;
  double grow = -2.0 * std::pow(r0, alpha - 1.0) * phi;
  if (L == 0.0) return grow;
  return grow + L * L * (r + r0) / (r0 * r0 * r * r);
}

// Residual h in pr2 = (r - r1)(r2 - r) h(r), smooth and positive across
// the well. Inner half leans on the slope at r1, outer half on r2, so the
// divided factor is never the nearby root.
struct WellFactor {
  double alpha, L, r1, r2, mid;
  WellFactor(double alpha_, double L_, const Turning& tp)
      : alpha(alpha_), L(L_), r1(tp.r1), r2(tp.r2), mid(0.5 * (tp.r1 + tp.r2)) {}
  double operator()(double r) const {
    if (r <= mid) return pr2_slope(alpha, L, r1, r) / (r2 - r);
    return -pr2_slope(alpha, L, r2, r) / (r - r1);
  }
};

}  // namespace

Turning turning_points(double alpha, double E, double L) {
  double rmax0 = std::pow(E, 1.0 / alpha);
  if (L == 0.0) return {0.0, rmax0};
  double rb = rbar(alpha, L);
  if (pr2(alpha, E, L, rb) <= 0.0)
    throw std::domain_error("turning_points: no classical motion at this L");
  double lo = rb;
  while (pr2(alpha, E, L, lo) > 0.0) lo *= 0.5;
  double hi = rmax0 * 1.0000001 + 0.1;
  auto f = [&](double r) { return pr2(alpha, E, L, r); };
  double r1 = bisect(f, lo, rb, 100);
  double r2 = bisect(f, rb, hi, 100);
  return {r1, r2};
}

double radial_action(double alpha, double E, double L) {
  Turning tp = turning_points(alpha, E, L);
  if (L == 0.0) {
    // single turning point at r2; pr2 = (r2 - r) g(r) with analytic g
    double r2 = tp.r2;
    auto f = [&](double u) {
      double r = r2 * (1.0 - u * u);
      double g = -pr2_slope(alpha, 0.0, r2, r);
      return u * u * std::sqrt(g);
    };
    return 2.0 * std::pow(r2, 1.5) / kPi *
           quad().integrate(f, 0.0, 1.0, 1e-13);
  }
  double d = tp.r2 - tp.r1;
  WellFactor h(alpha, L, tp);
  auto f = [&](double t) {
    double s = std::sin(t), c = std::cos(t);
    double r = tp.r1 + d * s * s;
    return s * s * c * c * std::sqrt(h(r));
  };
  return 2.0 * d * d / kPi * quad().integrate(f, 0.0, kPi / 2.0, 1e-13);
}

double angle_advance(double alpha, double E, double L) {
  if (L == 0.0) return kPi;
  Turning tp = turning_points(alpha, E, L);
  double d = tp.r2 - tp.r1;
  WellFactor h(alpha, L, tp);
  auto f = [&](double t) {
    double s = std::sin(t);
    double r = tp.r1 + d * s * s;
    return L / (r * r * std::sqrt(h(r)));
  };
  return 4.0 * quad().integrate(f, 0.0, kPi / 2.0, 1e-13);
}

double radial_period(double alpha, double E, double L) {
  Turning tp = turning_points(alpha, E, L);
  if (L == 0.0) {
    double r2 = tp.r2;
    auto f = [&](double u) {
      double r = r2 * (1.0 - u * u);
      return 1.0 / std::sqrt(-pr2_slope(alpha, 0.0, r2, r));
    };
    return 4.0 * std::sqrt(r2) * quad().integrate(f, 0.0, 1.0, 1e-13);
  }
  double d = tp.r2 - tp.r1;
  WellFactor h(alpha, L, tp);
  auto f = [&](double t) {
    double s = std::sin(t);
    double r = tp.r1 + d * s * s;
    return 1.0 / std::sqrt(h(r));
  };
  return 4.0 * quad().integrate(f, 0.0, kPi / 2.0, 1e-13);
}

double action_curvature(double alpha, double E, double L) {
  CircleOrbit c = circle_orbit(alpha, E);
  double h = 1e-3 * c.L;
  if (L + 2.0 * h > c.L) h = 0.45 * (c.L - L);
  if (L - 2.0 * h < 0.0) h = 0.45 * L;
  if (h < 1e-8 * c.L) return std::fabs(c.K);
  auto d2 = [&](double hh) {
    return (radial_action(alpha, E, L + hh) - 2.0 * radial_action(alpha, E, L) +
            radial_action(alpha, E, L - hh)) /
           (hh * hh);
  };
  return (4.0 * d2(0.5 * h) - d2(h)) / 3.0;
}

CircleOrbit circle_orbit(double alpha, double E) {
  CircleOrbit c{};
  c.alpha = alpha;
  c.E = E;
  c.r = std::pow(2.0 * E / (alpha + 2.0), 1.0 / alpha);
  double p = std::sqrt(2.0 * E * alpha / (alpha + 2.0));
  c.L = p * c.r;
  c.omega = c.L / (c.r * c.r);
  c.omega_ratio = std::sqrt(alpha + 2.0);
  c.T = 2.0 * kPi / c.omega;
  c.K = -(alpha + 1.0) * (alpha - 2.0) /
        (12.0 * std::pow(alpha + 2.0, 1.5) * c.L);
  c.tau = 2.0 * kPi * circle_L_unit(alpha);
  return c;
}

double stability_factor(double alpha, int M) {
  double s = std::sin(kPi * M * std::sqrt(alpha + 2.0));
  return 4.0 * s * s;
}

double alpha_bif(int n_r, int n_theta) {
  // single division keeps the rational value correctly rounded
  return static_cast<double>(n_r * n_r - 2 * n_theta * n_theta) /
         (n_theta * n_theta);
}

std::optional<PoData> find_polygon(double alpha, int n_r, int n_theta, int M) {
  if (n_r <= 2 * n_theta) return std::nullopt;
  if (std::fabs(alpha - alpha_bif(n_r, n_theta)) <= 1e-9) {
    // Newborn orbit, still degenerate with the circle
    CircleOrbit c = circle_orbit(alpha, 1.0);
    PoData po{};
    po.family = PoFamily::Polygon;
    po.M = M;
    po.n_r = n_r;
    po.n_theta = n_theta;
    po.alpha = alpha;
    po.L = c.L;
    po.I_r = 0.0;
    po.tau = 2.0 * kPi * M * n_theta * c.L;
    po.T = n_r * c.T / c.omega_ratio;
    po.K = std::fabs(c.K);
    po.maslov = M * (3 * n_r + 4 * n_theta);
    po.phase_d = -kPi / 2.0;
    return po;
  }
  double target = 2.0 * kPi * n_theta / n_r;
  double Lc = circle_L_unit(alpha);
  double hi = Lc * (1.0 - 1e-13);
  if (angle_advance(alpha, 1.0, hi) - target >= 0.0) return std::nullopt;
  auto g = [&](double L) { return angle_advance(alpha, 1.0, L) - target; };
  double Ls = bisect(g, 1e-9 * Lc, hi, 80);
  PoData po{};
  po.family = PoFamily::Polygon;
  po.M = M;
  po.n_r = n_r;
  po.n_theta = n_theta;
  po.alpha = alpha;
  po.L = Ls;
  po.I_r = radial_action(alpha, 1.0, Ls);
  po.tau = 2.0 * kPi * M * (n_r * po.I_r + n_theta * Ls);
  po.T = n_r * radial_period(alpha, 1.0, Ls);
  po.K = action_curvature(alpha, 1.0, Ls);
  po.maslov = M * (3 * n_r + 4 * n_theta);
  po.phase_d = -kPi / 2.0;
  return po;
}

PoData find_diameter(double alpha, int M) {
  PoData po{};
  po.family = PoFamily::Diameter;
  po.M = M;
  po.n_r = 2;
  po.n_theta = 1;
  po.alpha = alpha;
  po.L = 0.0;
  po.I_r = radial_action(alpha, 1.0, 0.0);
  po.tau = 4.0 * kPi * M * po.I_r;
  po.T = 2.0 * radial_period(alpha, 1.0, 0.0);
  // Libration-edge curvature in closed form
  po.K = boost::math::tgamma(1.0 - 1.0 / alpha) /
         (boost::math::tgamma(0.5 - 1.0 / alpha) * std::sqrt(2.0 * kPi));
  po.maslov = 2 * M;
  po.phase_d = -kPi / 2.0;
  return po;
}

PoData find_circle_po(double alpha, int M) {
  CircleOrbit c = circle_orbit(alpha, 1.0);
  PoData po{};
  po.family = PoFamily::Circle;
  po.M = M;
  po.n_r = static_cast<int>(std::lround(M * std::sqrt(alpha + 2.0)));
  po.n_theta = M;
  po.alpha = alpha;
  po.L = c.L;
  po.I_r = 0.0;
  po.tau = M * c.tau;
  po.T = c.T;
  po.K = c.K;
  po.maslov = 2 * M;
  po.phase_d = kPi / 2.0;
  return po;
}

namespace {

// Action and swept angle from r out to the turning point r_max(L), E = 1.
struct Partials {
  double action, angle;
};

Partials partials_to_rmax(double alpha, double L, double r) {
  Turning tp = turning_points(alpha, 1.0, L);
  double dd = tp.r2 - r;
  if (dd <= 0.0) return {0.0, 0.0};
  WellFactor h(alpha, L, tp);
  double rm1 = r - tp.r1;
  auto fa = [&](double u) {
    double rho = tp.r2 - dd * u * u;
    double dr1 = rm1 + dd * (1.0 - u * u);
    return u * u * std::sqrt(dr1 * h(rho));
  };
  auto fs = [&](double u) {
    double rho = tp.r2 - dd * u * u;
    double dr1 = rm1 + dd * (1.0 - u * u);
    return L / (rho * rho * std::sqrt(dr1 * h(rho)));
  };
  Partials p;
  p.action = 2.0 * std::pow(dd, 1.5) * quad().integrate(fa, 0.0, 1.0, 1e-13);
  p.angle = 2.0 * std::sqrt(dd) * quad().integrate(fs, 0.0, 1.0, 1e-13);
  return p;
}

// Angular momentum of the closed-orbit family member launched at r.
double closed_orbit_L(double alpha, int M, int n_r, int n_theta, double r,
                      int j) {
  double lmax = r * std::sqrt(std::max(2.0 * (1.0 - std::pow(r, alpha)), 0.0));
  double target = 2.0 * kPi * M * n_theta;
  auto g = [&](double L) {
    return 2.0 * partials_to_rmax(alpha, L, r).angle +
           j * angle_advance(alpha, 1.0, L) - target;
  };
  const double fracs[] = {1e-13, 1e-10, 1e-8, 1e-6, 1e-5, 1e-4, 1e-3, 3e-3,
                          1e-2,  3e-2,  0.1,  0.2,  0.4,  0.6,  0.8,  0.9,
                          0.97,  0.99};
  double Lprev = lmax * (1.0 - fracs[0]);
  double gprev = g(Lprev);
  for (size_t i = 1; i < sizeof(fracs) / sizeof(fracs[0]); ++i) {
    double L = lmax * (1.0 - fracs[i]);
    double gv = g(L);
    if ((gv > 0.0) != (gprev > 0.0)) return bisect(g, L, Lprev, 70);
    Lprev = L;
    gprev = gv;
  }
  throw std::runtime_error("closed_orbit_L: no closure root found");
}

}  // namespace

double closed_orbit_phase(double alpha, int M, int n_r, int n_theta,
                          double r) {
  // A repeated label is the repeated traversal of the primitive orbit, so
  // only coprime labels reach the closure equation.
  int g = std::gcd(n_r, n_theta);
  int rep = M * g;
  n_r /= g;
  n_theta /= g;
  double dnu = n_theta * std::sqrt(alpha + 2.0) - n_r;
  int j = dnu <= 0.0 ? n_r - 1 : n_r;
  double L = closed_orbit_L(alpha, 1, n_r, n_theta, r, j);
  double A = partials_to_rmax(alpha, L, r).action;
  return rep * (2.0 * A + 2.0 * kPi * j * radial_action(alpha, 1.0, L) +
                2.0 * kPi * n_theta * L);
}

PhaseDerivs closed_orbit_phase_derivs(double alpha, int M, int n_r,
                                      int n_theta) {
  CircleOrbit c = circle_orbit(alpha, 1.0);
  double dnu = M * n_theta * std::sqrt(alpha + 2.0) - M * n_r;
  double s = dnu <= 0.0 ? -1.0 : 1.0;
  // the family spans a radial window that shrinks like sqrt(detuning), so
  // keep the whole stencil inside it
  double dnu_prim = dnu / (M * std::gcd(n_r, n_theta));
  double shrink =
      std::sqrt(std::max(std::fabs(dnu_prim), 1e-7) / 1e-3);
  double h = 0.002 * c.r * std::min(1.0, shrink);
  double f0 = 2.0 * kPi * M * n_theta * c.L;
  auto phi = [&](double k) {
    return closed_orbit_phase(alpha, M, n_r, n_theta, c.r + s * k * h);
  };
  double f05 = phi(0.5), f1 = phi(1.0), f15 = phi(1.5), f2 = phi(2.0),
         f3 = phi(3.0), f4 = phi(4.0);
  auto stencil = [&](double g1, double g2, double g3, double g4, double hh,
                     PhaseDerivs& out) {
    out.d2 = (2.0 * f0 - 5.0 * g1 + 4.0 * g2 - g3) / (hh * hh);
    out.d3 = s * (-5.0 * f0 + 18.0 * g1 - 24.0 * g2 + 14.0 * g3 - 3.0 * g4) /
             (2.0 * hh * hh * hh);
  };
  PhaseDerivs full, half, out;
  stencil(f1, f2, f3, f4, h, full);
  stencil(f05, f1, f15, f2, 0.5 * h, half);
  out.d2 = (4.0 * half.d2 - full.d2) / 3.0;
  out.d3 = (4.0 * half.d3 - full.d3) / 3.0;
  return out;
}

double cubic_coefficient(double alpha, int M, int n_r, int n_theta) {
  CircleOrbit c = circle_orbit(alpha, 1.0);
  PhaseDerivs d = closed_orbit_phase_derivs(alpha, M, n_r, n_theta);
  return c.r * c.r * c.r * d.d3 / (6.0 * c.L);
}

}  // namespace rpl
