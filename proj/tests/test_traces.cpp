#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "rpl/traces.h"

using namespace rpl;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool has_label(const std::vector<PoData>& set, const std::string& label) {
  for (const PoData& po : set)
    if (po_label(po) == label) return true;
  return false;
}

}  // namespace

TEST_CASE("windowed polygon amplitude reaches the isolated form") {
  auto po = find_polygon(8.0, 3, 1, 1);
  REQUIRE(po.has_value());
  double es = 1e6;
  Complex a2 = amp_polygon_ispm2(*po, es);
  Complex a1 = amp_polygon_sspm(*po, es);
  CHECK(std::abs(a2 / a1 - 1.0) < 1e-2);
  // isolated form is a pure e^{i pi/4} ray
  CHECK(std::arg(a1) == doctest::Approx(kPi / 4.0).epsilon(1e-12));
}

TEST_CASE("newborn polygon window is half the isolated one") {
  auto po = find_polygon(7.0, 3, 1, 1);
  REQUIRE(po.has_value());
  double es = 1e6;
  Complex a2 = amp_polygon_ispm2(*po, es);
  Complex a1 = amp_polygon_sspm(*po, es);
  CHECK(std::isfinite(std::abs(a2)));
  CHECK(std::abs(a2 / a1 - 0.5) < 1e-2);
}

TEST_CASE("windowed circle amplitude reaches the isolated form") {
  PoData po = find_circle_po(6.0, 1);
  double es = 1e6;
  Complex a2 = amp_circle_ispm2(po, es, CircleEndpointMode::Full);
  Complex a1 = amp_circle_sspm(po, es);
  CHECK(a1.imag() == 0.0);
  CHECK(a1.real() > 0.0);
  CHECK(std::abs(a2 / a1 - 1.0) < 2e-2);
}

TEST_CASE("circle window degenerates smoothly at a resonance") {
  // just above the resonance the full form and its algebraic limit agree
  PoData po = find_circle_po(7.0 + 1e-3, 1);
  double es = 20.0;
  Complex full = amp_circle_ispm2(po, es, CircleEndpointMode::Full);
  Complex lim = amp_circle_bif_limit(po, es, CircleEndpointMode::Full);
  CHECK(std::abs(full - lim) < 1e-6 * std::abs(lim));

  // at the resonance the window form switches to the limit internally
  PoData pores = find_circle_po(7.0, 1);
  Complex at = amp_circle_ispm2(pores, es, CircleEndpointMode::Full);
  Complex atlim = amp_circle_bif_limit(pores, es, CircleEndpointMode::Full);
  CHECK(at == atlim);
  CHECK(std::isfinite(std::abs(at)));
  CHECK(std::abs(at) > 0.0);

  // isolated-orbit form blows up there (1/sqrt(F) with F at rounding
  // level), while the window form above stays of order one
  CHECK(std::abs(amp_circle_sspm(pores, es)) > 1e10);

  // reduced endpoint convention sends the circle weight to zero
  CHECK(std::abs(amp_circle_ispm2(pores, es,
                                  CircleEndpointMode::ReducedAtBifurcation)) ==
        0.0);
}

TEST_CASE("circle amplitude is continuous through the resonance band") {
  double es = 20.0;
  double prev = -1.0;
  for (int i = 0; i <= 100; ++i) {
    double alpha = 6.9 + 0.002 * i;
    PoData po = find_circle_po(alpha, 1);
    double mag =
        std::abs(amp_circle_ispm2(po, es, CircleEndpointMode::Full));
    CHECK(std::isfinite(mag));
    if (prev > 0.0) {
      CHECK(mag < 4.0 * prev);
      CHECK(mag > prev / 4.0);
    }
    prev = mag;
  }
}

TEST_CASE("cubic-window circle amplitude matches the quadratic window as the "
          "cubic term vanishes") {
  PoData po = find_circle_po(6.0, 1);
  double es = 10.0;
  Complex quad = amp_circle_ispm2(po, es, CircleEndpointMode::Full);
  for (double a : {1e-3, -1e-3}) {
    Complex cub = amp_circle_ispm3(po, es, a, CircleEndpointMode::Full);
    CHECK(std::abs(cub - quad) < 5e-3 * std::abs(quad));
  }
  CHECK_THROWS_AS(
      (void)amp_circle_ispm3(po, es, 1e-7, CircleEndpointMode::Full),
      std::domain_error);
}

TEST_CASE("diameter contribution in closed form") {
  PoData d1 = find_diameter(6.0, 1);
  double es = 10.0;
  Complex a = amp_diameter(d1, es);
  double Tr = 0.5 * d1.T * std::pow(es, -4.0 / 8.0);
  double omega_r = 2.0 * kPi / Tr;
  CHECK(a.real() == doctest::Approx(0.0));
  CHECK(a.imag() ==
        doctest::Approx(-1.0 / (kPi * (d1.K / es) * omega_r)).epsilon(1e-13));
  // density term collapses to a cosine
  double dg = dg_po(d1, a, es);
  double expected = std::cos(es * d1.tau - kPi) /
                    (kPi * (d1.K / es) * omega_r) *
                    denergy_dscaled(6.0, es);
  CHECK(dg == doctest::Approx(expected).epsilon(1e-12));
  // repetitions scale the amplitude down
  PoData d2 = find_diameter(6.0, 2);
  Complex a2 = amp_diameter(d2, es);
  CHECK(std::abs(a2 - a / 2.0) < 1e-15 * std::abs(a));
}

TEST_CASE("density phase assembly") {
  PoData po{};
  po.family = PoFamily::Polygon;
  po.alpha = 6.0;
  po.tau = 2.0;
  po.maslov = 3;
  po.phase_d = -kPi / 2.0;
  double es = 5.0;
  double dg = dg_po(po, {1.0, 0.0}, es);
  CHECK(dg == doctest::Approx(-std::cos(2.0 * es) *
                              denergy_dscaled(6.0, es))
                  .epsilon(1e-13));
}

TEST_CASE("trace terms dispatch and damping") {
  TraceConfig cfg;
  cfg.alpha = 8.0;
  cfg.orbits = build_po_set(8.0, "1P1D1C");
  cfg.method = TraceMethod::Ispm2;
  cfg.gamma = 0.6;
  double es = 30.0;
  auto terms = trace_terms(cfg, es);
  REQUIRE(terms.size() == 3);
  double sum = 0.0;
  for (const auto& t : terms) {
    double damp = std::exp(-0.25 * t.po.tau * t.po.tau * 0.36);
    CHECK(t.dg == doctest::Approx(dg_po(t.po, t.amp, es) * damp)
                      .epsilon(1e-12));
    sum += t.dg;
  }
  CHECK(delta_g_scl(cfg, es) == doctest::Approx(sum).epsilon(1e-12));
}

TEST_CASE("cubic-window trace bridges the resonance") {
  TraceConfig cfg;
  cfg.alpha = 8.0;
  cfg.orbits = {find_circle_po(8.0, 1)};
  cfg.method = TraceMethod::Ispm3;
  auto terms = trace_terms(cfg, 25.0);
  REQUIRE(terms.size() == 1);
  CHECK_FALSE(terms[0].reduced);
  CHECK(terms[0].a_cubic < -0.5);
  CHECK(std::isfinite(terms[0].dg));

  // at the resonance the cubic coefficient vanishes and the evaluation
  // falls back to the algebraic limit
  TraceConfig cfg7;
  cfg7.alpha = 7.0;
  cfg7.orbits = {find_circle_po(7.0, 1)};
  cfg7.method = TraceMethod::Ispm3;
  auto t7 = trace_terms(cfg7, 25.0);
  REQUIRE(t7.size() == 1);
  CHECK(t7[0].reduced);
  CHECK(std::fabs(t7[0].a_cubic) < kCubicBifSwitch);
  CHECK(std::isfinite(t7[0].dg));

  // repeated circles carry their own resonance labels
  TraceConfig cfgm;
  cfgm.alpha = 6.0;
  cfgm.orbits = {find_circle_po(6.0, 1), find_circle_po(6.0, 2)};
  cfgm.method = TraceMethod::Ispm3;
  auto tm = trace_terms(cfgm, 15.0);
  REQUIRE(tm.size() == 2);
  for (const auto& t : tm) CHECK(std::isfinite(t.dg));
}

TEST_CASE("orbit-set presets") {
  auto set6 = build_po_set(6.0, "1P1D1C");
  REQUIRE(set6.size() == 3);
  CHECK(has_label(set6, "Dx1"));
  CHECK(has_label(set6, "Cx1"));
  int npoly = 0;
  for (const auto& po : set6)
    if (po.family == PoFamily::Polygon) ++npoly;
  CHECK(npoly == 1);
  for (size_t i = 1; i < set6.size(); ++i)
    CHECK(set6[i - 1].tau <= set6[i].tau);

  // at the resonance the newborn orbit is the shortest polygon
  auto set7 = build_po_set(7.0, "1P1D1C");
  CHECK(has_label(set7, "P(3,1)x1"));

  auto big = build_po_set(6.0, "FULLPDC");
  CHECK(has_label(big, "Dx3"));
  CHECK(has_label(big, "Cx3"));
  for (const auto& po : big) CHECK(po.tau <= 20.0 + 1e-12);
  for (size_t i = 1; i < big.size(); ++i)
    CHECK(big[i - 1].tau <= big[i].tau);
}

TEST_CASE("orbit-set clause grammar") {
  auto set = build_po_set(8.0, "D:M<=2;C:M<=3;P(3,1):M<=2");
  CHECK(set.size() == 7);
  CHECK(has_label(set, "Dx2"));
  CHECK(has_label(set, "Cx3"));
  CHECK(has_label(set, "P(3,1)x2"));

  auto dedup = build_po_set(8.0, "C:M<=1;C:M<=2");
  CHECK(dedup.size() == 2);

  auto taus = build_po_set(8.0, "P:max_tau=14");
  CHECK(has_label(taus, "P(3,1)x1"));
  CHECK(has_label(taus, "P(3,1)x2"));
  for (const auto& po : taus) {
    CHECK(po.family == PoFamily::Polygon);
    CHECK(po.tau <= 14.0 + 1e-12);
  }

  // absent polygons are silently skipped
  auto none = build_po_set(6.0, "P(3,1):M<=2");
  CHECK(none.empty());

  CHECK_THROWS_AS((void)build_po_set(6.0, "Q:M<=1"), std::invalid_argument);
  CHECK_THROWS_AS((void)build_po_set(6.0, "C:bogus=3"), std::invalid_argument);
}

TEST_CASE("orbit labels") {
  CHECK(po_label(find_diameter(6.0, 1)) == "Dx1");
  CHECK(po_label(find_circle_po(6.0, 2)) == "Cx2");
  auto po = find_polygon(8.0, 3, 1, 2);
  REQUIRE(po.has_value());
  CHECK(po_label(*po) == "P(3,1)x2");
}

TEST_CASE("windowed amplitudes against frozen implementation values") {
  // regression anchors frozen from this implementation
  PoData c6 = find_circle_po(6.0, 1);
  double r10 = std::abs(amp_circle_ispm2(c6, 10.0, CircleEndpointMode::Full) /
                            amp_circle_sspm(c6, 10.0) -
                        1.0);
  double r80 = std::abs(amp_circle_ispm2(c6, 80.0, CircleEndpointMode::Full) /
                            amp_circle_sspm(c6, 80.0) -
                        1.0);
  CHECK(r10 == doctest::Approx(0.605446639359151).epsilon(1e-6));
  CHECK(r80 == doctest::Approx(0.35445506255628).epsilon(1e-6));

  auto p8 = find_polygon(8.0, 3, 1, 1);
  REQUIRE(p8.has_value());
  double rp40 = std::abs(amp_polygon_ispm2(*p8, 40.0) /
                             amp_polygon_sspm(*p8, 40.0) -
                         1.0);
  CHECK(rp40 == doctest::Approx(0.269973114469521).epsilon(1e-6));

  double c3mag = std::abs(amp_circle_ispm3(
      find_circle_po(8.0, 1), 40.0, cubic_coefficient(8.0, 1, 3, 1),
      CircleEndpointMode::Full));
  CHECK(c3mag == doctest::Approx(2.51065957486571).epsilon(1e-6));
}
