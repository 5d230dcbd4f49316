#include "rpl/traces.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace rpl {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const Complex kI{0.0, 1.0};

// T(E) = tau * d(scaled)/dE, so the E = 1 period carries es^{(2-alpha)/(alpha+2)}
double period_scale(double alpha, double es) {
  return std::pow(es, (2.0 - alpha) / (alpha + 2.0));
}

// Radial window edges of the circle term in xi = r/r_C - 1; the outer
// classical boundary r_max/r_C is energy independent.
void circle_window(double alpha, CircleEndpointMode mode, double& xi_lo,
                   double& xi_hi) {
  if (mode == CircleEndpointMode::ReducedAtBifurcation) {
    xi_lo = 0.0;
    xi_hi = 0.0;
    return;
  }
  xi_lo = -1.0;
  xi_hi = std::pow((alpha + 2.0) / 2.0, 1.0 / alpha) - 1.0;
}

Complex circle_winp(const CircleOrbit& c, int M) {
  double X = (c.alpha + 2.0) * M * c.K;
  return erf_complex(c.L * std::sqrt(-kI * kPi * X));
}

double cubic_cache(double alpha, int M, int n_r, int n_theta) {
  static std::map<std::tuple<double, int, int, int>, double> cache;
  auto key = std::make_tuple(alpha, M, n_r, n_theta);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  double a;
  try {
    a = cubic_coefficient(alpha, M, n_r, n_theta);
  } catch (const std::exception&) {
    // at the resonance the orbit cluster degenerates and the closure
    // equation loses its root
    a = std::numeric_limits<double>::quiet_NaN();
  }
  cache[key] = a;
  return a;
}

}  // namespace

Complex amp_polygon_ispm2(const PoData& po, double es) {
  double Mnr = static_cast<double>(po.M) * po.n_r;
  double K = po.K / es;
  double LP = po.L * es;
  double TP = po.T * period_scale(po.alpha, es);
  double Lc = circle_orbit(po.alpha, energy_from_scaled(po.alpha, es)).L;
  Complex zf = std::sqrt(-kI * kPi * Mnr * K);
  Complex win = erf_two_limit(-zf * LP, zf * (Lc - LP));
  return LP * TP / (kPi * std::sqrt(Mnr * K)) * win *
         std::exp(kI * kPi / 4.0);
}

Complex amp_polygon_sspm(const PoData& po, double es) {
  double Mnr = static_cast<double>(po.M) * po.n_r;
  double K = po.K / es;
  double LP = po.L * es;
  double TP = po.T * period_scale(po.alpha, es);
  return 2.0 * LP * TP / (kPi * std::sqrt(Mnr * K)) *
         std::exp(kI * kPi / 4.0);
}

Complex amp_circle_ispm2(const PoData& po, double es, CircleEndpointMode mode) {
  double F = stability_factor(po.alpha, po.M);
  if (F < kStabilityEps) return amp_circle_bif_limit(po, es, mode);
  CircleOrbit c = circle_orbit(po.alpha, energy_from_scaled(po.alpha, es));
  double X = (po.alpha + 2.0) * po.M * c.K;
  double xi_lo, xi_hi;
  circle_window(po.alpha, mode, xi_lo, xi_hi);
  Complex xr = std::sqrt(-kI * F / (4.0 * kPi * X));
  Complex winr = erf_two_limit(xi_lo * xr, xi_hi * xr);
  return c.L * c.T / (kPi * std::sqrt(F)) * circle_winp(c, po.M) * winr;
}

Complex amp_circle_bif_limit(const PoData& po, double es,
                             CircleEndpointMode mode) {
  CircleOrbit c = circle_orbit(po.alpha, energy_from_scaled(po.alpha, es));
  double X = (po.alpha + 2.0) * po.M * c.K;
  double xi_lo, xi_hi;
  circle_window(po.alpha, mode, xi_lo, xi_hi);
  Complex slope = std::sqrt(-kI / (4.0 * kPi * X));
  return c.L * c.T / kPi * circle_winp(c, po.M) * (2.0 / std::sqrt(kPi)) *
         slope * (xi_hi - xi_lo);
}

Complex amp_circle_sspm(const PoData& po, double es) {
  double F = stability_factor(po.alpha, po.M);
  CircleOrbit c = circle_orbit(po.alpha, energy_from_scaled(po.alpha, es));
  return 2.0 * c.L * c.T / (kPi * std::sqrt(F));
}

Complex amp_circle_ispm3(const PoData& po, double es, double a_cubic,
                         CircleEndpointMode mode) {
  if (std::fabs(a_cubic) < kCubicMin)
    throw std::domain_error("amp_circle_ispm3: degenerate cubic coefficient");
  CircleOrbit c = circle_orbit(po.alpha, energy_from_scaled(po.alpha, es));
  double F = stability_factor(po.alpha, po.M);
  double X = (po.alpha + 2.0) * po.M * c.K;
  double eps = F / (4.0 * kPi * X * c.L);
  double xi_lo, xi_hi;
  circle_window(po.alpha, mode, xi_lo, xi_hi);
  if (xi_hi <= xi_lo) return 0.0;
  CatastropheParams cp =
      CatastropheParams::make(c.L, eps, a_cubic, xi_lo, xi_hi);
  Complex cat = catastrophe_airy_form(1.0, 0.0, cp);
  return 2.0 * c.L / (kPi * c.omega) * circle_winp(c, po.M) * cat *
         std::sqrt(-kI / X);
}

Complex amp_diameter(const PoData& po, double es) {
  double Kd = po.K / es;
  double Tr = 0.5 * po.T * period_scale(po.alpha, es);
  double omega_r = 2.0 * kPi / Tr;
  return -kI / (kPi * po.M * Kd * omega_r);
}

double dg_po(const PoData& po, Complex amp, double es) {
  double phase = es * po.tau - 0.5 * kPi * po.maslov - po.phase_d;
  return (amp * std::exp(kI * phase)).real() *
         denergy_dscaled(po.alpha, es);
}

std::vector<TraceTerm> trace_terms(const TraceConfig& cfg, double es) {
  std::vector<TraceTerm> terms;
  terms.reserve(cfg.orbits.size());
  for (const PoData& po : cfg.orbits) {
    TraceTerm t{};
    t.po = po;
    t.a_cubic = std::numeric_limits<double>::quiet_NaN();
    switch (po.family) {
      case PoFamily::Polygon:
        t.amp = cfg.method == TraceMethod::Sspm ? amp_polygon_sspm(po, es)
                                                : amp_polygon_ispm2(po, es);
        break;
      case PoFamily::Diameter:
        t.amp = amp_diameter(po, es);
        break;
      case PoFamily::Circle: {
        if (cfg.method == TraceMethod::Sspm) {
          t.amp = amp_circle_sspm(po, es);
        } else if (cfg.method == TraceMethod::Ispm2) {
          t.amp = amp_circle_ispm2(po, es, cfg.endpoint_mode);
          t.reduced = stability_factor(po.alpha, po.M) < kStabilityEps;
        } else {
          // the circle label (n_r, n_theta) already carries the repetition
          double a = cubic_cache(po.alpha, 1, po.n_r, po.n_theta);
          t.a_cubic = std::isfinite(a) ? a : 0.0;
          if (!std::isfinite(a) || std::fabs(a) < kCubicBifSwitch) {
            t.amp = amp_circle_bif_limit(po, es, cfg.endpoint_mode);
            t.reduced = true;
          } else {
            t.amp = amp_circle_ispm3(po, es, a, cfg.endpoint_mode);
          }
        }
        break;
      }
    }
    double damp = cfg.gamma > 0.0
                      ? std::exp(-0.25 * po.tau * po.tau * cfg.gamma * cfg.gamma)
                      : 1.0;
    t.dg = dg_po(po, t.amp, es) * damp;
    terms.push_back(t);
  }
  return terms;
}

double delta_g_scl(const TraceConfig& cfg, double es) {
  auto terms = trace_terms(cfg, es);
  return std::accumulate(terms.begin(), terms.end(), 0.0,
                         [](double s, const TraceTerm& t) { return s + t.dg; });
}

namespace {

struct PoKey {
  int family, n_r, n_theta, M;
  bool operator<(const PoKey& o) const {
    return std::tie(family, n_r, n_theta, M) <
           std::tie(o.family, o.n_r, o.n_theta, o.M);
  }
};

void add_orbit(std::map<PoKey, PoData>& set, const PoData& po) {
  set[{static_cast<int>(po.family), po.n_r, po.n_theta, po.M}] = po;
}

// All primitive (n_r, n_theta) pairs that can exist for reasonable alpha.
std::vector<std::pair<int, int>> primitive_pairs() {
  std::vector<std::pair<int, int>> out;
  for (int nt = 1; nt <= 3; ++nt)
    for (int nr = 2 * nt + 1; nr <= 14; ++nr)
      if (std::gcd(nr, nt) == 1) out.emplace_back(nr, nt);
  return out;
}

void add_polygons_by_tau(std::map<PoKey, PoData>& set, double alpha,
                         double max_tau) {
  for (auto [nr, nt] : primitive_pairs()) {
    auto prim = find_polygon(alpha, nr, nt, 1);
    if (!prim || prim->tau > max_tau) continue;
    for (int M = 1; M * prim->tau <= max_tau; ++M) {
      auto po = find_polygon(alpha, nr, nt, M);
      if (po) add_orbit(set, *po);
    }
  }
}

std::optional<PoData> shortest_polygon(double alpha) {
  std::optional<PoData> best;
  for (auto [nr, nt] : primitive_pairs()) {
    auto po = find_polygon(alpha, nr, nt, 1);
    if (po && (!best || po->tau < best->tau)) best = po;
  }
  return best;
}

void parse_clause(std::map<PoKey, PoData>& set, double alpha,
                  const std::string& clause) {
  auto colon = clause.find(':');
  std::string head = clause.substr(0, colon);
  std::string cons = colon == std::string::npos ? "" : clause.substr(colon + 1);
  int m_max = 1;
  double max_tau = -1.0;
  if (cons.rfind("M<=", 0) == 0) {
    m_max = std::stoi(cons.substr(3));
  } else if (cons.rfind("max_tau=", 0) == 0) {
    max_tau = std::stod(cons.substr(8));
  } else if (!cons.empty()) {
    throw std::invalid_argument("orbit set: bad constraint '" + cons + "'");
  }
  char fam = head.empty() ? '?' : head[0];
  if (fam == 'D' || fam == 'C') {
    PoData base = fam == 'D' ? find_diameter(alpha, 1) : find_circle_po(alpha, 1);
    if (max_tau > 0.0) m_max = std::max(1, static_cast<int>(max_tau / base.tau));
    for (int M = 1; M <= m_max; ++M)
      add_orbit(set, fam == 'D' ? find_diameter(alpha, M)
                                : find_circle_po(alpha, M));
  } else if (fam == 'P') {
    auto paren = head.find('(');
    if (paren != std::string::npos) {
      int nr = 0, nt = 0;
      if (std::sscanf(head.c_str() + paren, "(%d,%d)", &nr, &nt) != 2)
        throw std::invalid_argument("orbit set: bad polygon label '" + head +
                                    "'");
      auto prim = find_polygon(alpha, nr, nt, 1);
      if (!prim) return;
      if (max_tau > 0.0)
        m_max = std::max(1, static_cast<int>(max_tau / prim->tau));
      for (int M = 1; M <= m_max; ++M) {
        auto po = find_polygon(alpha, nr, nt, M);
        if (po) add_orbit(set, *po);
      }
    } else {
      if (max_tau <= 0.0) max_tau = 20.0;
      add_polygons_by_tau(set, alpha, max_tau);
    }
  } else {
    throw std::invalid_argument("orbit set: unknown family '" + head + "'");
  }
}

}  // namespace

std::vector<PoData> build_po_set(double alpha, const std::string& spec) {
  std::map<PoKey, PoData> set;
  std::string s = spec;
  std::transform(s.begin(), s.end(), s.begin(), ::toupper);
  if (s == "1P1D1C") {
    add_orbit(set, find_diameter(alpha, 1));
    add_orbit(set, find_circle_po(alpha, 1));
    if (auto p = shortest_polygon(alpha)) add_orbit(set, *p);
  } else if (s == "5P2D2C") {
    for (int M = 1; M <= 2; ++M) {
      add_orbit(set, find_diameter(alpha, M));
      add_orbit(set, find_circle_po(alpha, M));
    }
    std::vector<PoData> polys;
    for (auto [nr, nt] : primitive_pairs()) {
      auto prim = find_polygon(alpha, nr, nt, 1);
      if (!prim) continue;
      for (int M = 1; M <= 4; ++M)
        if (auto po = find_polygon(alpha, nr, nt, M)) polys.push_back(*po);
    }
    std::sort(polys.begin(), polys.end(),
              [](const PoData& a, const PoData& b) { return a.tau < b.tau; });
    for (size_t i = 0; i < polys.size() && i < 5; ++i)
      add_orbit(set, polys[i]);
  } else if (s == "FULLPDC") {
    const double max_tau = 20.0;
    PoData d1 = find_diameter(alpha, 1);
    for (int M = 1; M * d1.tau <= max_tau; ++M)
      add_orbit(set, find_diameter(alpha, M));
    PoData c1 = find_circle_po(alpha, 1);
    for (int M = 1; M * c1.tau <= max_tau; ++M)
      add_orbit(set, find_circle_po(alpha, M));
    add_polygons_by_tau(set, alpha, max_tau);
  } else {
    std::stringstream ss(spec);
    std::string clause;
    while (std::getline(ss, clause, ';')) {
      clause.erase(std::remove_if(clause.begin(), clause.end(), ::isspace),
                   clause.end());
      if (!clause.empty()) parse_clause(set, alpha, clause);
    }
  }
  std::vector<PoData> out;
  out.reserve(set.size());
  for (auto& [k, po] : set) out.push_back(po);
  std::sort(out.begin(), out.end(),
            [](const PoData& a, const PoData& b) { return a.tau < b.tau; });
  return out;
}

std::string po_label(const PoData& po) {
  std::ostringstream os;
  switch (po.family) {
    case PoFamily::Polygon:
      os << "P(" << po.n_r << "," << po.n_theta << ")";
      break;
    case PoFamily::Circle:
      os << "C";
      break;
    case PoFamily::Diameter:
      os << "D";
      break;
  }
  os << "x" << po.M;
  return os.str();
}

}  // namespace rpl
