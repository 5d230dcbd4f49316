#include "rpl/specfun.h"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/airy.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rpl {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

Complex erf_maclaurin(Complex z) {
  // erf(z) = (2/sqrt(pi)) sum_n (-1)^n z^(2n+1) / (n! (2n+1))
  Complex z2 = z * z;
  Complex term = z;  // z^(2n+1) (-1)^n / n!
  Complex sum = z;
  for (int n = 1; n <= 80; ++n) {
    term *= -z2 / static_cast<double>(n);
    Complex add = term / static_cast<double>(2 * n + 1);
    sum += add;
    if (std::abs(add) < 1e-18 * (std::abs(sum) + 1e-30) && n > 6) break;
  }
  return sum * (2.0 / std::sqrt(kPi));
}

// Faddeeva w(zeta) for Im(zeta) > 0: midpoint-rule sum over exp(-t^2)/(zeta-t).
// The residual beyond the pole correction is O(exp(-(pi/h)^2)) ~ 7e-18.
Complex faddeeva_mid(Complex zeta) {
  const double h = 0.5;
  const int N = 26;
  Complex s = 0.0;
  Complex zeta2 = zeta * zeta;
  for (int k = 0; k < N; ++k) {
    double t = (k + 0.5) * h;
    double g = std::exp(-t * t);
    s += g * (2.0 * zeta) / (zeta2 - t * t);
  }
  return s * Complex(0.0, h / kPi);
}

Complex erf_large(Complex z) {
  // erf(z) = 1 - exp(-z^2) w(iz) - 2/(1 + exp(2 pi z / h)), Re z > 0
  const double h = 0.5;
  double x = z.real(), y = z.imag();
  if (y * y - x * x > 700.0)
    throw std::domain_error("erf_complex: |Im z| too large, result overflows");
  Complex w = faddeeva_mid(Complex(-y, x));
  Complex result = 1.0 - std::exp(-z * z) * w;
  Complex pole_arg = 2.0 * kPi / h * z;
  if (pole_arg.real() < 700.0) result -= 2.0 / (1.0 + std::exp(pole_arg));
  return result;
}

// int_a^b exp(i phi(t)) dt for phi monotone on [a, b]: recursive bisection
// until each panel spans at most a few cycles, then Gauss-Kronrod.
Complex osc_segment(const std::function<double(double)>& phi, double a,
                    double b, int depth) {
  if (b <= a) return 0.0;
  double swing = std::abs(phi(b) - phi(a));
  if (swing > 6.0 * kPi && depth < 52) {
    double m = 0.5 * (a + b);
    return osc_segment(phi, a, m, depth + 1) +
           osc_segment(phi, m, b, depth + 1);
  }
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  double re = GK::integrate([&](double t) { return std::cos(phi(t)); }, a, b,
                            4, 1e-12);
  double im = GK::integrate([&](double t) { return std::sin(phi(t)); }, a, b,
                            4, 1e-12);
  return Complex(re, im);
}

// Splits [a, b] at the interior critical points of phi so each segment is
// monotone in phase, then sums the panel quadratures.
Complex osc_integral(const std::function<double(double)>& phi,
                     const std::vector<double>& critical, double a, double b) {
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  std::vector<double> pts{a, b};
  for (double c : critical)
    if (c > a && c < b) pts.push_back(c);
  std::sort(pts.begin(), pts.end());
  Complex total = 0.0;
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    total += osc_segment(phi, pts[i], pts[i + 1], 0);
  return sign * total;
}

}  // namespace

Complex erf_complex(Complex z) {
  if (z.real() < 0.0) return -erf_complex(-z);
  if (std::abs(z) <= 3.0) return erf_maclaurin(z);
  if (z.real() == 0.0)
    throw std::domain_error("erf_complex: large purely imaginary argument");
  return erf_large(z);
}

Complex erf_two_limit(Complex z1, Complex z2) {
  return erf_complex(z2) - erf_complex(z1);
}

AiryGairy airy_gairy_incomplete(double x, double z1, double z2) {
  auto phi = std::function<double(double)>(
      [x](double t) { return t * t * t / 3.0 + x * t; });
  std::vector<double> critical;
  if (x < 0.0) {
    double s = std::sqrt(-x);
    critical = {-s, s};
  }
  Complex val = osc_integral(phi, critical, z1, z2) / kPi;
  return {val.real(), val.imag()};
}

AiryGairy airy_gairy_complete(double x) {
  double ai = boost::math::airy_ai(x);
  double bi = boost::math::airy_bi(x);
  // Hi(x) = (1/pi) int_0^inf exp(x t - t^3/3) dt, monotone integrand
  boost::math::quadrature::tanh_sinh<double> ts;
  double hi = ts.integrate(
                  [x](double t) {
                    double e = x * t - t * t * t / 3.0;
                    return e < -745.0 ? 0.0 : std::exp(e);
                  },
                  0.0, 60.0, 1e-13) /
              kPi;
  return {ai, bi - hi};
}

CatastropheParams CatastropheParams::make(double kappa, double eps, double a,
                                          double xi1, double xi2) {
  if (a == 0.0)
    throw std::invalid_argument("CatastropheParams: cubic coefficient is 0");
  if (kappa <= 0.0)
    throw std::invalid_argument("CatastropheParams: kappa must be positive");
  CatastropheParams p{};
  p.kappa = kappa;
  p.mirrored = a < 0.0;
  if (p.mirrored) {
    // xi -> -xi leaves the integral invariant and flips the cubic sign
    p.a = -a;
    p.xi1 = -xi2;
    p.xi2 = -xi1;
  } else {
    p.a = a;
    p.xi1 = xi1;
    p.xi2 = xi2;
  }
  p.eps = eps;
  p.sigma = eps < 0.0 ? -1 : 1;
  double a3 = 3.0 * p.a;
  p.lambda = std::pow(a3 * kappa, -1.0 / 3.0);
  p.upsilon = -eps / a3;
  p.w = std::cbrt(kappa * kappa) * eps * eps / std::pow(a3, 4.0 / 3.0);
  p.z1 = (p.xi1 - p.upsilon) / p.lambda;
  p.z2 = (p.xi2 - p.upsilon) / p.lambda;
  return p;
}

Complex catastrophe_direct(double a_star, double phi_star, double kappa,
                           double eps, double a, double xi1, double xi2) {
  auto phi = std::function<double(double)>([kappa, eps, a](double t) {
    return kappa * (eps * t * t + a * t * t * t);
  });
  std::vector<double> critical{0.0};
  if (a != 0.0) critical.push_back(-2.0 * eps / (3.0 * a));
  Complex window = osc_integral(phi, critical, xi1, xi2);
  return a_star * std::exp(Complex(0.0, kappa * phi_star)) * window;
}

Complex catastrophe_airy_form(double a_star, double phi_star,
                              const CatastropheParams& p) {
  AiryGairy ag = airy_gairy_incomplete(-p.w, p.z1, p.z2);
  double cubic_phase = 2.0 * p.sigma * std::pow(p.w, 1.5) / 3.0;
  Complex window = kPi * p.lambda *
                   std::exp(Complex(0.0, cubic_phase)) *
                   Complex(ag.ai, ag.gi);
  return a_star * std::exp(Complex(0.0, p.kappa * phi_star)) * window;
}

}  // namespace rpl
