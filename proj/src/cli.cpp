#include "rpl/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rpl/classical.h"
#include "rpl/quantum.h"
#include "rpl/specfun.h"
#include "rpl/traces.h"

namespace rpl {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct Cell {
  enum Kind { Num, Str, Empty } kind = Empty;
  double num = 0.0;
  std::string str;
  Cell() = default;
  Cell(double v) : kind(Num), num(v) {}
  Cell(const std::string& s) : kind(Str), str(s) {}
};

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_meta(const std::string& k, const std::string& v) {
    meta.emplace_back(k, v);
  }
  void add_meta(const std::string& k, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    meta.emplace_back(k, buf);
  }
};

std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// FNV-1a over the canonical config text; stable across platforms.
std::string config_digest(const Table& t) {
  uint64_t h = 1469598103934665603ull;
  for (const auto& [k, v] : t.meta) {
    for (const std::string* s : {&k, &v})
      for (char c : *s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
      }
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void write_csv(const Table& t, std::ostream& os) {
  os << "# rpltrace " << kCliVersion << "\n";
  for (const auto& [k, v] : t.meta) os << "# " << k << ": " << v << "\n";
  os << "# digest: " << config_digest(t) << "\n";
  for (size_t i = 0; i < t.columns.size(); ++i)
    os << csv_field(t.columns[i]) << (i + 1 < t.columns.size() ? "," : "");
  os << "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      const Cell& c = row[i];
      if (c.kind == Cell::Num)
        os << fmt_num(c.num);
      else if (c.kind == Cell::Str)
        os << csv_field(c.str);
      os << (i + 1 < row.size() ? "," : "");
    }
    os << "\n";
  }
}

void write_json(const Table& t, std::ostream& os) {
  nlohmann::json j;
  j["version"] = kCliVersion;
  nlohmann::json m = nlohmann::json::object();
  for (const auto& [k, v] : t.meta) m[k] = v;
  m["digest"] = config_digest(t);
  j["meta"] = m;
  j["columns"] = t.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const Cell& c : row) {
      if (c.kind == Cell::Num)
        r.push_back(c.num);
      else if (c.kind == Cell::Str)
        r.push_back(c.str);
      else
        r.push_back(nullptr);
    }
    rows.push_back(r);
  }
  j["rows"] = rows;
  os << j.dump(1) << "\n";
}

void emit(const Table& t, const std::string& output, const std::string& fmt) {
  std::ostringstream buf;
  if (fmt == "json")
    write_json(t, buf);
  else
    write_csv(t, buf);
  if (output.empty() || output == "-") {
    std::cout << buf.str();
  } else {
    std::ofstream f(output);
    if (!f) throw std::runtime_error("cannot open output file: " + output);
    f << buf.str();
  }
}

std::vector<double> grid(double lo, double hi, double step) {
  if (step <= 0.0) throw std::runtime_error("grid step must be positive");
  std::vector<double> g;
  int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
  for (int i = 0; i <= n; ++i) g.push_back(lo + i * step);
  return g;
}

const char* family_name(PoFamily f) {
  switch (f) {
    case PoFamily::Polygon: return "polygon";
    case PoFamily::Circle: return "circle";
    default: return "diameter";
  }
}

TraceMethod parse_method(const std::string& s) {
  if (s == "sspm") return TraceMethod::Sspm;
  if (s == "ispm3") return TraceMethod::Ispm3;
  return TraceMethod::Ispm2;
}

// ---- subcommand implementations -----------------------------------------

Table cmd_po_table(double alpha, const std::string& po_set) {
  Table t;
  t.add_meta("command", "po-table");
  t.add_meta("alpha", alpha);
  t.add_meta("po_set", po_set);
  t.columns = {"label", "family", "M",   "n_r",    "n_theta", "L",
               "I_r",   "tau",    "T",   "K",      "maslov",  "stability_F"};
  for (const PoData& po : build_po_set(alpha, po_set)) {
    std::vector<Cell> row{po_label(po),
                          std::string(family_name(po.family)),
                          Cell(double(po.M)),
                          Cell(double(po.n_r)),
                          Cell(double(po.n_theta)),
                          Cell(po.L),
                          Cell(po.I_r),
                          Cell(po.tau),
                          Cell(po.T),
                          Cell(po.K),
                          Cell(double(po.maslov)),
                          Cell()};
    if (po.family == PoFamily::Circle)
      row.back() = Cell(stability_factor(alpha, po.M));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cmd_bif_diagram(double a_lo, double a_hi, double step,
                      const std::string& pairs_spec) {
  Table t;
  t.add_meta("command", "bif-diagram");
  t.add_meta("alpha_min", a_lo);
  t.add_meta("alpha_max", a_hi);
  t.add_meta("alpha_step", step);
  t.add_meta("pairs", pairs_spec);
  std::vector<std::pair<int, int>> pairs;
  std::stringstream ss(pairs_spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    int nr, nt;
    if (std::sscanf(item.c_str(), "%d,%d", &nr, &nt) != 2)
      throw std::runtime_error("bad pair spec: " + item);
    pairs.emplace_back(nr, nt);
  }
  t.columns = {"alpha"};
  for (auto [nr, nt] : pairs) {
    std::ostringstream os;
    os << "L_ratio_P(" << nr << "," << nt << ")";
    t.columns.push_back(os.str());
    std::ostringstream key;
    key << "alpha_bif(" << nr << "," << nt << ")";
    t.add_meta(key.str(), alpha_bif(nr, nt));
  }
  for (double a : grid(a_lo, a_hi, step)) {
    std::vector<Cell> row{Cell(a)};
    double Lc = circle_orbit(a, 1.0).L;
    for (auto [nr, nt] : pairs) {
      auto po = find_polygon(a, nr, nt, 1);
      row.push_back(po ? Cell(po->L / Lc) : Cell());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cmd_trace(double alpha, double gamma, double e_lo, double e_hi,
                double e_step, const std::string& po_set,
                const std::string& method, const std::string& endpoint,
                bool terms) {
  Table t;
  t.add_meta("command", "trace");
  t.add_meta("alpha", alpha);
  t.add_meta("gamma", gamma);
  t.add_meta("eps_min", e_lo);
  t.add_meta("eps_max", e_hi);
  t.add_meta("eps_step", e_step);
  t.add_meta("po_set", po_set);
  t.add_meta("method", method);
  t.add_meta("endpoint_mode", endpoint);
  TraceConfig cfg;
  cfg.alpha = alpha;
  cfg.gamma = gamma;
  cfg.method = parse_method(method);
  cfg.endpoint_mode = endpoint == "reduced"
                          ? CircleEndpointMode::ReducedAtBifurcation
                          : CircleEndpointMode::Full;
  cfg.orbits = build_po_set(alpha, po_set);
  std::ostringstream orbits;
  for (const auto& po : cfg.orbits) orbits << po_label(po) << " ";
  t.add_meta("orbits", orbits.str());
  t.columns = {"eps", "dg"};
  if (terms)
    for (const auto& po : cfg.orbits)
      t.columns.push_back("dg[" + po_label(po) + "]");
  bool reduced_seen = false;
  for (double es : grid(e_lo, e_hi, e_step)) {
    auto tt = trace_terms(cfg, es);
    double total = 0.0;
    for (const auto& term : tt) {
      total += term.dg;
      reduced_seen = reduced_seen || term.reduced;
    }
    std::vector<Cell> row{Cell(es), Cell(total)};
    if (terms)
      for (const auto& term : tt) row.push_back(Cell(term.dg));
    t.rows.push_back(std::move(row));
  }
  t.add_meta("bifurcation_limit_used", reduced_seen ? "yes" : "no");
  return t;
}

std::vector<EnergyLevel> cached_spectrum(double alpha, double eps_max,
                                         double h, double r_box) {
  static std::map<std::string, std::vector<EnergyLevel>> cache;
  std::ostringstream key;
  key << alpha << "|" << eps_max << "|" << h << "|" << r_box;
  auto it = cache.find(key.str());
  if (it != cache.end()) return it->second;
  SpectrumConfig cfg;
  cfg.alpha = alpha;
  cfg.eps_max = eps_max;
  cfg.h = h;
  cfg.r_box = r_box;
  auto levels = solve_spectrum(cfg);
  cache[key.str()] = levels;
  return levels;
}

Table cmd_spectrum(double alpha, double eps_max, double h, double r_box) {
  Table t;
  t.add_meta("command", "spectrum");
  t.add_meta("alpha", alpha);
  t.add_meta("eps_max", eps_max);
  if (h > 0.0) t.add_meta("h", h);
  if (r_box > 0.0) t.add_meta("r_box", r_box);
  auto levels = cached_spectrum(alpha, eps_max, h, r_box);
  t.add_meta("level_count", double(levels.size()));
  t.columns = {"index", "n", "l", "deg", "E", "eps"};
  int idx = 0;
  for (const auto& lv : levels)
    t.rows.push_back({Cell(double(idx++)), Cell(double(lv.n)),
                      Cell(double(lv.l)), Cell(double(lv.deg)), Cell(lv.E),
                      Cell(lv.eps)});
  return t;
}

Table cmd_fourier(double alpha, double tau_lo, double tau_hi, double tau_step,
                  double eps_max, double gamma_cut) {
  Table t;
  t.add_meta("command", "fourier");
  t.add_meta("alpha", alpha);
  t.add_meta("tau_min", tau_lo);
  t.add_meta("tau_max", tau_hi);
  t.add_meta("tau_step", tau_step);
  t.add_meta("eps_max", eps_max);
  if (gamma_cut <= 0.0) gamma_cut = eps_max / 2.0;
  t.add_meta("gamma_cut", gamma_cut);
  auto levels = cached_spectrum(alpha, eps_max, 0.0, 0.0);
  t.columns = {"tau", "abs_F", "re_F", "im_F"};
  for (double tau : grid(tau_lo, tau_hi, tau_step)) {
    auto F = fourier_amplitude(levels, tau, gamma_cut);
    t.rows.push_back({Cell(tau), Cell(std::abs(F)), Cell(F.real()),
                      Cell(F.imag())});
  }
  return t;
}

Table cmd_compare(double alpha, double gamma, double gamma_tilde, double e_lo,
                  double e_hi, double e_step, const std::string& po_set,
                  const std::string& method) {
  Table t;
  t.add_meta("command", "compare");
  t.add_meta("alpha", alpha);
  t.add_meta("gamma", gamma);
  t.add_meta("gamma_tilde", gamma_tilde);
  t.add_meta("eps_min", e_lo);
  t.add_meta("eps_max", e_hi);
  t.add_meta("eps_step", e_step);
  t.add_meta("po_set", po_set);
  t.add_meta("method", method);
  double eps_ceiling = std::max(56.0, e_hi + 16.0);
  auto levels = cached_spectrum(alpha, eps_ceiling, 0.0, 0.0);
  TraceConfig cfg;
  cfg.alpha = alpha;
  cfg.gamma = gamma;
  cfg.method = parse_method(method);
  cfg.orbits = build_po_set(alpha, po_set);
  std::ostringstream orbits;
  for (const auto& po : cfg.orbits) orbits << po_label(po) << " ";
  t.add_meta("orbits", orbits.str());
  t.columns = {"eps", "dg_qm", "dg_scl", "diff"};
  double sum_qm = 0.0, sum_diff = 0.0;
  size_t count = 0;
  for (double es : grid(e_lo, e_hi, e_step)) {
    double qm = delta_g_qm(levels, gamma, gamma_tilde, es);
    double scl = delta_g_scl(cfg, es);
    t.rows.push_back({Cell(es), Cell(qm), Cell(scl), Cell(qm - scl)});
    sum_qm += qm * qm / (es * es);
    sum_diff += (qm - scl) * (qm - scl) / (es * es);
    ++count;
  }
  if (count > 0) {
    double rms_qm = std::sqrt(sum_qm / count);
    double rms_diff = std::sqrt(sum_diff / count);
    t.add_meta("rms_qm_over_eps", rms_qm);
    t.add_meta("rms_diff_over_eps", rms_diff);
    t.add_meta("rms_ratio", rms_qm > 0.0 ? rms_diff / rms_qm : 0.0);
  }
  return t;
}

Table cmd_catastrophe_demo(double kappa, double a, double eps, double xi_lo,
                           double xi_hi) {
  Table t;
  t.add_meta("command", "catastrophe-demo");
  t.add_meta("kappa", kappa);
  t.add_meta("a", a);
  t.add_meta("eps", eps);
  t.add_meta("xi_min", xi_lo);
  t.add_meta("xi_max", xi_hi);
  t.columns = {"eps_sign", "w",       "re_direct", "im_direct",
               "re_airy",  "im_airy", "rel_diff"};
  for (int sign : {+1, -1}) {
    double e = sign * std::fabs(eps);
    CatastropheParams p = CatastropheParams::make(kappa, e, a, xi_lo, xi_hi);
    Complex direct = catastrophe_direct(1.0, 0.0, kappa, e, a, xi_lo, xi_hi);
    Complex airy = catastrophe_airy_form(1.0, 0.0, p);
    t.rows.push_back({Cell(double(sign)), Cell(p.w), Cell(direct.real()),
                      Cell(direct.imag()), Cell(airy.real()),
                      Cell(airy.imag()),
                      Cell(std::abs(airy - direct) / std::abs(direct))});
  }
  // Phase of the window integral on either side of the fold. The isolated
  // stationary-point forms carry exp(+-i pi/4), a difference of pi/2
  // exactly. Windows run from the inflection point so that only one
  // stationary point contributes, and the first endpoint term of the
  // boundary series is removed; the residual deviation is reported.
  auto phase_side = [&](double e) {
    double ups = -e / (3.0 * a);
    double lo = e > 0.0 ? ups : -1.0;
    double hi = e > 0.0 ? 1.0 : ups;
    Complex total = catastrophe_direct(1.0, 0.0, kappa, e, a, lo, hi);
    auto phi = [&](double xi) { return e * xi * xi + a * xi * xi * xi; };
    auto dphi = [&](double xi) { return 2.0 * e * xi + 3.0 * a * xi * xi; };
    auto bterm = [&](double xi) {
      return std::exp(Complex(0.0, kappa * phi(xi))) /
             (Complex(0.0, kappa) * dphi(xi));
    };
    return total - bterm(hi) + bterm(lo);
  };
  Complex d_plus = phase_side(std::fabs(eps));
  Complex d_minus = phase_side(-std::fabs(eps));
  t.add_meta("asymptotic_phase_diff", kPi / 2.0);
  double finite_diff = std::arg(d_plus * std::conj(d_minus));
  t.add_meta("finite_w_phase_diff", finite_diff);
  t.add_meta("finite_w_correction", finite_diff - kPi / 2.0);
  // Oscillatory Airy/Scorer asymptotics quality at w = 25
  {
    double w = 25.0;
    AiryGairy exact = airy_gairy_complete(-w);
    double zeta = 2.0 / 3.0 * std::pow(w, 1.5);
    double env = 1.0 / (std::sqrt(kPi) * std::pow(w, 0.25));
    double ai_as = env * std::sin(zeta + kPi / 4.0);
    double gi_as = env * std::cos(zeta + kPi / 4.0) - 1.0 / (kPi * w);
    t.add_meta("aigi_w25_ai_relerr",
               std::fabs((ai_as - exact.ai) / exact.ai));
    t.add_meta("aigi_w25_gi_relerr",
               std::fabs((gi_as - exact.gi) / exact.gi));
  }
  return t;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"periodic-orbit level densities for V(r) = r^alpha"};
  app.require_subcommand(1);

  std::string output, format = "csv";
  app.add_option("-o,--output", output, "output file (default stdout)");
  app.add_option("-f,--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  double alpha = 6.0, gamma = 0.6, gamma_tilde = 2.5;
  double e_lo = 10.0, e_hi = 40.0, e_step = 0.05;
  std::string po_set = "1P1D1C", method = "ispm2", endpoint = "full";

  auto* po_table = app.add_subcommand("po-table", "periodic-orbit data");
  po_table->add_option("--alpha", alpha, "potential power")->required();
  po_table->add_option("--po-set", po_set, "orbit selection");

  auto* bif = app.add_subcommand("bif-diagram", "polygon branches vs alpha");
  double a_lo = 4.0, a_hi = 10.0, a_step = 0.05;
  std::string pairs = "3,1;4,1;5,2;7,3;8,3";
  bif->add_option("--alpha-min", a_lo, "scan start");
  bif->add_option("--alpha-max", a_hi, "scan end");
  bif->add_option("--alpha-step", a_step, "scan step");
  bif->add_option("--pairs", pairs, "n_r,n_theta pairs, ';' separated");

  auto* trace = app.add_subcommand("trace", "semiclassical density");
  bool with_terms = false;
  trace->add_option("--alpha", alpha, "potential power")->required();
  trace->add_option("--gamma", gamma, "averaging width");
  trace->add_option("--eps-min", e_lo, "scaled energy start");
  trace->add_option("--eps-max", e_hi, "scaled energy end");
  trace->add_option("--eps-step", e_step, "scaled energy step");
  trace->add_option("--po-set", po_set, "orbit selection");
  trace->add_option("--method", method, "sspm, ispm2 or ispm3")
      ->check(CLI::IsMember({"sspm", "ispm2", "ispm3"}));
  trace->add_option("--endpoint", endpoint, "full or reduced")
      ->check(CLI::IsMember({"full", "reduced"}));
  trace->add_flag("--terms", with_terms, "emit per-orbit columns");

  auto* spectrum = app.add_subcommand("spectrum", "quantum eigenvalues");
  double eps_max = 56.0, h = 0.0, r_box = 0.0;
  spectrum->add_option("--alpha", alpha, "potential power")->required();
  spectrum->add_option("--eps-max", eps_max, "scaled energy ceiling");
  spectrum->add_option("--grid-h", h, "grid step override");
  spectrum->add_option("--r-box", r_box, "box radius override");

  auto* fourier = app.add_subcommand("fourier", "quantum density transform");
  double tau_lo = 0.0, tau_hi = 20.0, tau_step = 0.01, gamma_cut = 0.0;
  fourier->add_option("--alpha", alpha, "potential power")->required();
  fourier->add_option("--tau-min", tau_lo, "transform variable start");
  fourier->add_option("--tau-max", tau_hi, "transform variable end");
  fourier->add_option("--tau-step", tau_step, "transform variable step");
  fourier->add_option("--eps-max", eps_max, "scaled energy ceiling");
  fourier->add_option("--gamma-cut", gamma_cut,
                      "Gaussian cutoff (default eps-max/2)");

  auto* compare = app.add_subcommand("compare", "quantum vs semiclassical");
  compare->add_option("--alpha", alpha, "potential power")->required();
  compare->add_option("--gamma", gamma, "oscillating-part width");
  compare->add_option("--gamma-tilde", gamma_tilde, "average width");
  compare->add_option("--eps-min", e_lo, "scaled energy start");
  compare->add_option("--eps-max", e_hi, "scaled energy end");
  compare->add_option("--eps-step", e_step, "scaled energy step");
  compare->add_option("--po-set", po_set, "orbit selection");
  compare->add_option("--method", method, "sspm, ispm2 or ispm3")
      ->check(CLI::IsMember({"sspm", "ispm2", "ispm3"}));

  auto* demo = app.add_subcommand("catastrophe-demo",
                                  "cubic endpoint integral check");
  double kappa = 1e4, a_cubic = 1.0 / 6.0, eps_n = 0.05;
  double xi_lo = 0.0, xi_hi = 1.0;
  demo->add_option("--kappa", kappa, "large phase parameter");
  demo->add_option("--a", a_cubic, "cubic coefficient");
  demo->add_option("--eps", eps_n, "quadratic coefficient magnitude");
  demo->add_option("--xi-min", xi_lo, "window start");
  demo->add_option("--xi-max", xi_hi, "window end");

  // app-level -o / -f may also follow the subcommand name
  for (CLI::App* sc : {po_table, bif, trace, spectrum, fourier, compare, demo})
    sc->fallthrough();

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    Table t;
    if (*po_table)
      t = cmd_po_table(alpha, po_set);
    else if (*bif)
      t = cmd_bif_diagram(a_lo, a_hi, a_step, pairs);
    else if (*trace)
      t = cmd_trace(alpha, gamma, e_lo, e_hi, e_step, po_set, method,
                    endpoint, with_terms);
    else if (*spectrum)
      t = cmd_spectrum(alpha, eps_max, h, r_box);
    else if (*fourier)
      t = cmd_fourier(alpha, tau_lo, tau_hi, tau_step, eps_max, gamma_cut);
    else if (*compare)
      t = cmd_compare(alpha, gamma, gamma_tilde, e_lo, e_hi, e_step, po_set,
                      method);
    else
      t = cmd_catastrophe_demo(kappa, a_cubic, eps_n, xi_lo, xi_hi);
    emit(t, output, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace rpl
