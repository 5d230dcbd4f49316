#pragma once

#include <complex>
#include <vector>

// Quantum spectra of the spherical power-law potential by Numerov
// shooting on the radial equation, plus the smoothed/averaged level
// densities and Fourier analysis used to compare against the
// semiclassical trace formulas. Densities are expressed in the scaled
// energy es = E^(1/2 + 1/alpha); degeneracy 2l+1 (spinless).

namespace rpl {

struct EnergyLevel {
  int n, l;    // radial node count and angular momentum
  double E;    // eigenvalue
  double eps;  // scaled energy
  int deg;     // 2l+1
};

struct SpectrumConfig {
  double alpha = 6.0;
  double eps_max = 56.0;  // keep levels with eps <= eps_max
  double r_box = 0.0;     // Dirichlet box radius; 0 = choose from eps_max
  double h = 0.0;         // radial grid step; 0 = choose from eps_max
};

// All levels with scaled energy up to cfg.eps_max, sorted by eps.
std::vector<EnergyLevel> solve_spectrum(const SpectrumConfig& cfg);

// Same spectrum through a second-order finite-difference matrix
// diagonalization (single l channel, lowest few states). Slow; used to
// cross-check the shooting method.
std::vector<double> fd_eigenvalues(double alpha, int l, int count,
                                   double r_box, int grid_points);

// Gaussian-smoothed level density at width gamma.
double smoothed_density(const std::vector<EnergyLevel>& levels, double gamma,
                        double eps);

// Curvature-corrected (order 6) wide-Gaussian average density.
double strutinsky_average(const std::vector<EnergyLevel>& levels,
                          double gamma_tilde, double eps);

// Max |d(average)/d(gamma_tilde)| over gamma_tilde in [2,3] and eps in
// [eps_lo, eps_hi], divided by the max average on the same grid. Small
// values mean the average sits on a plateau.
double plateau_diagnostic(const std::vector<EnergyLevel>& levels,
                          double eps_lo, double eps_hi);

// Oscillating density part: smoothed(gamma) - average(gamma_tilde).
double delta_g_qm(const std::vector<EnergyLevel>& levels, double gamma,
                  double gamma_tilde, double eps);

// sum_i deg_i exp(i eps_i tau) exp(-(eps_i/gamma_cut)^2)
std::complex<double> fourier_amplitude(const std::vector<EnergyLevel>& levels,
                                       double tau, double gamma_cut);

}  // namespace rpl
