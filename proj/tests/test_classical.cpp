#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rpl/classical.h"

using namespace rpl;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("scaled-energy mapping") {
  CHECK(scaled_energy(2.0, 3.7) == doctest::Approx(3.7).epsilon(1e-15));
  for (double alpha : {4.0, 6.0, 7.0, 8.0}) {
    for (double E : {0.5, 1.0, 9.0}) {
      double es = scaled_energy(alpha, E);
      CHECK(energy_from_scaled(alpha, es) ==
            doctest::Approx(E).epsilon(1e-13));
    }
    double es = 40.0, h = 1e-6;
    double fd = (energy_from_scaled(alpha, es + h) -
                 energy_from_scaled(alpha, es - h)) /
                (2.0 * h);
    CHECK(denergy_dscaled(alpha, es) == doctest::Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("turning points of the quadratic well") {
  // alpha = 2, E = 1, L = 0.2: 2 - 2 r^2 - L^2/r^2 = 0 in closed form
  Turning tp = turning_points(2.0, 1.0, 0.2);
  double disc = std::sqrt(1.0 - 2.0 * 0.04);
  CHECK(tp.r1 == doctest::Approx(std::sqrt((1.0 - disc) / 2.0)).epsilon(1e-12));
  CHECK(tp.r2 == doctest::Approx(std::sqrt((1.0 + disc) / 2.0)).epsilon(1e-12));
  CHECK_THROWS_AS((void)turning_points(2.0, 1.0, 1.5), std::domain_error);
  Turning lib = turning_points(6.0, 1.0, 0.0);
  CHECK(lib.r1 == 0.0);
  CHECK(lib.r2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("radial integrals against quadrature values") {
  // quadratic well in closed form: I_r = (E - omega L)/(2 omega)
  CHECK(radial_action(2.0, 1.0, 0.2) ==
        doctest::Approx(0.25355339059327376).epsilon(1e-11));

  double Lc6 = circle_orbit(6.0, 1.0).L;
  CHECK(radial_action(6.0, 1.0, 0.5 * Lc6) ==
        doctest::Approx(0.18673285600190998).epsilon(1e-11));
  CHECK(angle_advance(6.0, 1.0, 0.5 * Lc6) ==
        doctest::Approx(2.6342202480413834).epsilon(1e-11));
  CHECK(action_curvature(6.0, 1.0, 0.5 * Lc6) ==
        doctest::Approx(0.159097557826).epsilon(1e-6));

  CHECK(radial_action(6.0, 1.0, 0.0) ==
        doctest::Approx(0.40997883835100933).epsilon(1e-11));
  CHECK(radial_period(6.0, 1.0, 0.0) ==
        doctest::Approx(1.717315342254411).epsilon(1e-11));
  CHECK(angle_advance(6.0, 1.0, 0.0) == kPi);
}

TEST_CASE("circular-orbit data") {
  struct Row {
    double alpha, r, L, Kmag;
  };
  const Row rows[] = {
      {6.0, 0.79370052598409974, 0.97208064861983282, 0.1060814646083618},
      {7.0, 0.80664774971624981, 1.0060665037501279, 0.12271235516068746},
      {8.0, 0.8177654339579425, 1.0344005452252407, 0.13757001131180833},
  };
  for (const Row& w : rows) {
    CircleOrbit c = circle_orbit(w.alpha, 1.0);
    CHECK(c.r == doctest::Approx(w.r).epsilon(1e-14));
    CHECK(c.L == doctest::Approx(w.L).epsilon(1e-14));
    CHECK(c.K < 0.0);
    CHECK(std::fabs(c.K) == doctest::Approx(w.Kmag).epsilon(1e-12));
    CHECK(c.omega == doctest::Approx(c.L / (c.r * c.r)).epsilon(1e-15));
    CHECK(c.omega_ratio == doctest::Approx(std::sqrt(w.alpha + 2.0)));
    CHECK(c.tau == doctest::Approx(2.0 * kPi * w.L).epsilon(1e-13));
  }
  // quadratic well is degenerate: curvature limit vanishes
  CHECK(std::fabs(circle_orbit(2.0, 1.0).K) < 1e-15);

  // limits of the L-resolved integrals at the circular orbit
  CircleOrbit c6 = circle_orbit(6.0, 1.0);
  double Ln = c6.L * (1.0 - 1e-10);
  CHECK(angle_advance(6.0, 1.0, Ln) ==
        doctest::Approx(2.0 * kPi / std::sqrt(8.0)).epsilon(1e-4));
  CHECK(radial_period(6.0, 1.0, Ln) ==
        doctest::Approx(c6.T / std::sqrt(8.0)).epsilon(1e-4));
  CHECK(action_curvature(6.0, 1.0, c6.L * (1.0 - 1e-9)) ==
        doctest::Approx(std::fabs(c6.K)).epsilon(1e-15));
}

TEST_CASE("stability factor and resonance thresholds") {
  CHECK(stability_factor(2.0, 1) < 1e-12);
  CHECK(stability_factor(2.0, 3) < 1e-12);
  CHECK(stability_factor(7.0, 1) < 1e-12);  // sqrt(9) = 3 resonant
  CHECK(stability_factor(6.0, 1) ==
        doctest::Approx(4.0 * std::pow(std::sin(kPi * std::sqrt(8.0)), 2))
            .epsilon(1e-14));
  CHECK(alpha_bif(3, 1) == 7.0);
  CHECK(alpha_bif(4, 1) == 14.0);
  CHECK(alpha_bif(5, 2) == 4.25);
  CHECK(alpha_bif(6, 2) == 7.0);
  CHECK(alpha_bif(7, 3) == doctest::Approx(31.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("polygon-type orbit at alpha = 8") {
  auto po = find_polygon(8.0, 3, 1, 1);
  REQUIRE(po.has_value());
  CHECK(po->L == doctest::Approx(0.91791797120166259).epsilon(1e-9));
  CHECK(po->I_r == doctest::Approx(0.037810588715838424).epsilon(1e-10));
  CHECK(po->tau == doctest::Approx(6.4801615162758799).epsilon(1e-10));
  CHECK(po->T == doctest::Approx(3.0 * 1.3500336492225).epsilon(1e-9));
  CHECK(po->K == doctest::Approx(0.155824788854).epsilon(1e-5));
  CHECK(po->maslov == 13);
  CHECK(po->phase_d == doctest::Approx(-kPi / 2.0));
  auto po2 = find_polygon(8.0, 3, 1, 2);
  REQUIRE(po2.has_value());
  CHECK(po2->tau == doctest::Approx(2.0 * po->tau).epsilon(1e-12));
  CHECK(po2->T == doctest::Approx(po->T).epsilon(1e-12));
  CHECK(po2->maslov == 26);
}

TEST_CASE("polygon-type orbit existence window") {
  CHECK_FALSE(find_polygon(6.0, 3, 1, 1).has_value());   // below threshold
  CHECK_FALSE(find_polygon(8.0, 2, 1, 1).has_value());   // not a resonance
  CHECK_FALSE(find_polygon(8.0, 4, 2, 1).has_value());
  auto near = find_polygon(7.0 + 1e-6, 3, 1, 1);
  REQUIRE(near.has_value());
  double Lc = circle_orbit(7.0 + 1e-6, 1.0).L;
  CHECK(std::fabs(near->L - Lc) < 1e-6);
  CHECK(near->I_r < 1e-7);
}

TEST_CASE("newborn polygon at the threshold is the degenerate circle") {
  auto po = find_polygon(7.0, 3, 1, 1);
  REQUIRE(po.has_value());
  CircleOrbit c = circle_orbit(7.0, 1.0);
  CHECK(po->L == doctest::Approx(c.L).epsilon(1e-14));
  CHECK(po->I_r == 0.0);
  CHECK(po->tau == doctest::Approx(2.0 * kPi * c.L).epsilon(1e-13));
  CHECK(po->T == doctest::Approx(3.0 * c.T / 3.0).epsilon(1e-13));
  CHECK(po->K == doctest::Approx(std::fabs(c.K)).epsilon(1e-13));
  CHECK(po->maslov == 13);
}

TEST_CASE("diameter orbit data") {
  struct Row {
    double alpha, K;
  };
  const Row rows[] = {{4.0, 0.13483815029709484},
                      {6.0, 0.16809675398104445},
                      {8.0, 0.18338751288597782}};
  for (const Row& w : rows) {
    PoData po = find_diameter(w.alpha, 1);
    CHECK(po.K == doctest::Approx(w.K).epsilon(1e-13));
    CHECK(po.K > 0.0);
    CHECK(po.maslov == 2);
    CHECK(po.phase_d == doctest::Approx(-kPi / 2.0));
  }
  PoData d6 = find_diameter(6.0, 1);
  CHECK(d6.tau == doctest::Approx(5.1519460267632331).epsilon(1e-11));
  CHECK(d6.T == doctest::Approx(2.0 * 1.717315342254411).epsilon(1e-11));
  CHECK(d6.L == 0.0);
  PoData d62 = find_diameter(6.0, 2);
  CHECK(d62.tau == doctest::Approx(2.0 * d6.tau).epsilon(1e-14));
  CHECK(d62.maslov == 4);
}

TEST_CASE("circle periodic-orbit record") {
  PoData c1 = find_circle_po(6.0, 1);
  CHECK(c1.n_r == 3);
  CHECK(c1.n_theta == 1);
  CHECK(c1.tau ==
        doctest::Approx(2.0 * kPi * 0.97208064861983282).epsilon(1e-13));
  CHECK(c1.maslov == 2);
  CHECK(c1.phase_d == doctest::Approx(kPi / 2.0));
  CHECK(c1.K < 0.0);
  PoData c2 = find_circle_po(6.0, 2);
  CHECK(c2.n_r == 6);
  CHECK(c2.n_theta == 2);
  CHECK(c2.tau == doctest::Approx(2.0 * c1.tau).epsilon(1e-14));
  CHECK(c2.maslov == 4);
  PoData c7 = find_circle_po(7.0, 1);
  CHECK(c7.tau == doctest::Approx(6.3213022744083397).epsilon(1e-12));
}

TEST_CASE("closed-orbit phase anchors to the circle action") {
  // the family degenerates onto the circle, so probe the one-sided limit
  for (double alpha : {7.2, 6.8}) {
    CircleOrbit c = circle_orbit(alpha, 1.0);
    double s = std::sqrt(alpha + 2.0) - 3.0 <= 0.0 ? -1.0 : 1.0;
    double h = 1e-4 * c.r;
    double anchor = 2.0 * kPi * c.L;
    double f1 = closed_orbit_phase(alpha, 1, 3, 1, c.r + s * h);
    double f2 = closed_orbit_phase(alpha, 1, 3, 1, c.r + s * 0.5 * h);
    CHECK(std::fabs(f1 - anchor) < 2e-8);
    CHECK((f1 - anchor) / (f2 - anchor) == doctest::Approx(4.0).epsilon(0.05));
  }
}

TEST_CASE("closed-orbit phase curvature against quadrature value") {
  // raw one-sided stencil at h = 0.002 r_C, alpha = 7.2
  double alpha = 7.2;
  CircleOrbit c = circle_orbit(alpha, 1.0);
  double h = 0.002 * c.r;
  double f0 = 2.0 * kPi * c.L;
  auto phi = [&](double k) {
    return closed_orbit_phase(alpha, 1, 3, 1, c.r + k * h);
  };
  double d2 = (2.0 * f0 - 5.0 * phi(1.0) + 4.0 * phi(2.0) - phi(3.0)) / (h * h);
  CHECK(d2 == doctest::Approx(-0.984007441610395).epsilon(1e-5));
}

TEST_CASE("phase curvature follows the resonance-detuning law") {
  // Phi''(r_C) = -2 omega_r tan(pi dnu), dnu = n_theta sqrt(alpha+2) - n_r
  for (double alpha : {7.2, 6.8, 7.05}) {
    CircleOrbit c = circle_orbit(alpha, 1.0);
    double dnu = std::sqrt(alpha + 2.0) - 3.0;
    double omega_r = std::sqrt(alpha + 2.0) * c.omega;
    double law = -2.0 * omega_r * std::tan(kPi * dnu);
    PhaseDerivs d = closed_orbit_phase_derivs(alpha, 1, 3, 1);
    CHECK(d.d2 == doctest::Approx(law).epsilon(1.5e-2));
  }
}

TEST_CASE("cubic coefficient of the orbit cluster") {
  CHECK(cubic_coefficient(7.2, 1, 3, 1) ==
        doctest::Approx(-0.874962).epsilon(1e-3));
  CHECK(cubic_coefficient(6.8, 1, 3, 1) ==
        doctest::Approx(0.823439).epsilon(1e-3));
  CHECK(cubic_coefficient(7.05, 1, 3, 1) ==
        doctest::Approx(-0.211012).epsilon(1e-3));
  // vanishes linearly in the detuning across the resonance
  CHECK(cubic_coefficient(7.01, 1, 3, 1) ==
        doctest::Approx(-0.0417).epsilon(3e-2));
}

TEST_CASE("orbit cluster phase is stationary on the newborn orbit") {
  // the cluster member through the turning radii of the newborn orbit is
  // that orbit itself, so the phase there equals its scaled action
  for (double alpha : {7.2, 8.0}) {
    PoData p = *find_polygon(alpha, 3, 1, 1);
    Turning tp = turning_points(alpha, 1.0, p.L);
    double f = closed_orbit_phase(alpha, 1, 3, 1, tp.r2 * (1.0 - 1e-6));
    CHECK(f == doctest::Approx(p.tau).epsilon(1e-9));
  }
}
