#include "rpl/quantum.h"

#include "rpl/classical.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace rpl {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double v_eff(double alpha, double lq2, double r) {
  if (lq2 == 0.0) return std::pow(r, alpha);
  return std::pow(r, alpha) + 0.5 * lq2 / (r * r);
}

// Bottom of the effective potential for angular momentum term lq2 = l(l+1).
double v_eff_min(double alpha, double lq2) {
  if (lq2 == 0.0) return 0.0;
  double rb = std::pow(lq2 / alpha, 1.0 / (alpha + 2.0));
  return v_eff(alpha, lq2, rb);
}

// Numerov sweep of u'' = f u on r_k = k h, k = 1..N, with u(0) = 0 and a
// forbidden-region start for high l; returns the node count of u.
int numerov_nodes(double alpha, int l, double E, double h, int N) {
  double lq2 = static_cast<double>(l) * (l + 1);
  auto f = [&](int k) {
    if (k == 0) return 0.0;  // r = 0 seed, weight multiplies u(0) = 0
    double r = k * h;
    return 2.0 * (v_eff(alpha, lq2, r) - E);
  };
  // h^2 f beyond this flips the sign of the three-term denominator and
  // manufactures nodes, so the sweep starts past the centrifugal wall and
  // stops inside the outer wall; deep-wall tails hold no nodes
  const double cap = 10.8;
  int k0 = 1;
  if (l > 0)
    while (k0 < N - 2 && h * h * f(k0) > cap) ++k0;
  double um = 0.0, u = 1e-250;
  double tm = h * h * f(k0 - 1) / 12.0, t = h * h * f(k0) / 12.0;
  int nodes = 0;
  bool allowed = false;
  for (int k = k0; k < N; ++k) {
    double fp = f(k + 1);
    if (fp < 0.0) allowed = true;
    if (allowed && h * h * fp > cap) break;
    double tp = h * h * fp / 12.0;
    double up = ((2.0 + 10.0 * t) * u - (1.0 - tm) * um) / (1.0 - tp);
    if ((up > 0.0 && u < 0.0) || (up < 0.0 && u > 0.0)) ++nodes;
    um = u;
    u = up;
    tm = t;
    t = tp;
    if (std::fabs(u) > 1e250) {
      um /= 1e250;
      u /= 1e250;
    }
  }
  return nodes;
}

double solve_level(double alpha, int l, int n, double E_lo, double E_hi,
                   double h, int N) {
  for (int i = 0; i < 52; ++i) {
    double mid = 0.5 * (E_lo + E_hi);
    if (numerov_nodes(alpha, l, mid, h, N) <= n)
      E_lo = mid;
    else
      E_hi = mid;
  }
  return 0.5 * (E_lo + E_hi);
}

}  // namespace

std::vector<EnergyLevel> solve_spectrum(const SpectrumConfig& cfg) {
  double E_max = energy_from_scaled(cfg.alpha, cfg.eps_max);
  double r_box = cfg.r_box > 0.0
                     ? cfg.r_box
                     : 1.5 * std::pow(cfg.eps_max, 2.0 / (cfg.alpha + 2.0)) +
                           2.0;
  double h = cfg.h > 0.0 ? cfg.h : 0.06 / std::sqrt(2.0 * E_max);
  h = std::clamp(h, 5e-4, 0.01);
  int N = static_cast<int>(std::ceil(r_box / h));

  std::vector<EnergyLevel> levels;
  for (int l = 0;; ++l) {
    double lq2 = static_cast<double>(l) * (l + 1);
    double E_floor = v_eff_min(cfg.alpha, lq2);
    if (E_floor >= E_max) break;
    int n_states = numerov_nodes(cfg.alpha, l, E_max, h, N);
    for (int n = 0; n < n_states; ++n) {
      double E = solve_level(cfg.alpha, l, n, E_floor, E_max, h, N);
      double eps = scaled_energy(cfg.alpha, E);
      if (eps <= cfg.eps_max)
        levels.push_back({n, l, E, eps, 2 * l + 1});
    }
  }
  std::sort(levels.begin(), levels.end(),
            [](const EnergyLevel& a, const EnergyLevel& b) {
              return a.eps < b.eps;
            });
  return levels;
}

std::vector<double> fd_eigenvalues(double alpha, int l, int count,
                                   double r_box, int grid_points) {
  // Second-order central differences give a symmetric tridiagonal matrix;
  // eigenvalues below E by Sturm sequence, then bisection per index.
  int N = grid_points;
  double h = r_box / (N + 1);
  double lq2 = static_cast<double>(l) * (l + 1);
  std::vector<double> diag(N);
  double off = -0.5 / (h * h);
  for (int k = 0; k < N; ++k) {
    double r = (k + 1) * h;
    diag[k] = 1.0 / (h * h) + v_eff(alpha, lq2, r);
  }
  auto count_below = [&](double E) {
    int c = 0;
    double d = diag[0] - E;
    if (d < 0.0) ++c;
    for (int k = 1; k < N; ++k) {
      if (std::fabs(d) < 1e-300) d = d < 0.0 ? -1e-300 : 1e-300;
      d = (diag[k] - E) - off * off / d;
      if (d < 0.0) ++c;
    }
    return c;
  };
  std::vector<double> out;
  double lo0 = 0.0, hi0 = v_eff_min(alpha, lq2) + 10.0;
  for (int n = 0; n < count; ++n) {
    while (count_below(hi0) < n + 1) hi0 *= 2.0;
    double lo = lo0, hi = hi0;
    for (int i = 0; i < 80; ++i) {
      double mid = 0.5 * (lo + hi);
      if (count_below(mid) <= n)
        lo = mid;
      else
        hi = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

double smoothed_density(const std::vector<EnergyLevel>& levels, double gamma,
                        double eps) {
  double sum = 0.0;
  double norm = 1.0 / (gamma * std::sqrt(kPi));
  for (const auto& lv : levels) {
    double x = (eps - lv.eps) / gamma;
    if (std::fabs(x) > 8.0) continue;
    sum += lv.deg * norm * std::exp(-x * x);
  }
  return sum;
}

double strutinsky_average(const std::vector<EnergyLevel>& levels,
                          double gamma_tilde, double eps) {
  // 6th-order curvature correction: L_3^(1/2)(x^2) weight
  double sum = 0.0;
  double norm = 1.0 / (gamma_tilde * std::sqrt(kPi));
  for (const auto& lv : levels) {
    double x = (eps - lv.eps) / gamma_tilde;
    if (std::fabs(x) > 8.0) continue;
    double y = x * x;
    double poly =
        35.0 / 16.0 - 35.0 / 8.0 * y + 7.0 / 4.0 * y * y - y * y * y / 6.0;
    sum += lv.deg * norm * std::exp(-y) * poly;
  }
  return sum;
}

double plateau_diagnostic(const std::vector<EnergyLevel>& levels,
                          double eps_lo, double eps_hi) {
  const double g_lo = 2.0, g_hi = 3.0, dg = 0.1;
  double max_slope = 0.0, max_val = 0.0;
  for (double eps = eps_lo; eps <= eps_hi + 1e-9; eps += 1.0) {
    double prev = strutinsky_average(levels, g_lo, eps);
    max_val = std::max(max_val, std::fabs(prev));
    for (double g = g_lo + dg; g <= g_hi + 1e-9; g += dg) {
      double cur = strutinsky_average(levels, g, eps);
      max_slope = std::max(max_slope, std::fabs(cur - prev) / dg);
      max_val = std::max(max_val, std::fabs(cur));
      prev = cur;
    }
  }
  if (max_val == 0.0) return 0.0;
  return max_slope / max_val;
}

double delta_g_qm(const std::vector<EnergyLevel>& levels, double gamma,
                  double gamma_tilde, double eps) {
  return smoothed_density(levels, gamma, eps) -
         strutinsky_average(levels, gamma_tilde, eps);
}

std::complex<double> fourier_amplitude(const std::vector<EnergyLevel>& levels,
                                       double tau, double gamma_cut) {
  std::complex<double> sum = 0.0;
  for (const auto& lv : levels) {
    double cut = lv.eps / gamma_cut;
    sum += static_cast<double>(lv.deg) *
           std::exp(std::complex<double>(-cut * cut, lv.eps * tau));
  }
  return sum;
}

}  // namespace rpl
