#pragma once

// Independent reference implementations the tests compare the library
// against. Everything here is deliberately slow and simple.

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "oft/eigenbasis.hpp"
#include "oft/grid.hpp"

namespace oracle {

using oft::Complex;

/// Recursive adaptive Simpson; tol is absolute.
Complex adaptive_simpson(const std::function<Complex(double)>& f, double a, double b, double tol);

/// sqrt(-i/pi) * int_ta^tb e^{i tau} tau^{-1/2} ell(tau) d tau where ell is
/// the line through (ta, fa), (tb, fb). Uses the tau = s^2 substitution when
/// the panel starts at zero, so the endpoint singularity never enters.
Complex halforder_panel_integral(double ta, double tb, Complex fa, Complex fb);

/// int_0^x e^{i t^2} dt by segmented adaptive quadrature; good to ~1e-13 for
/// 0 <= x <= 25.
Complex fresnel_brute(double x);

/// One backward-Euler step of the 1D paraxial march as a dense linear solve:
/// interior rows discretize (1 - dt (i (beta-1) + (i/kappa^2) d^2/dx^2)),
/// boundary rows enforce the Robin closure with the one-sided three-point
/// derivative and zero right-hand side.
std::vector<Complex> dense_be_step_1d(const std::vector<Complex>& u,
                                      const std::vector<double>& beta, double kappa, double dx,
                                      double dt);

/// Gram entry int_0^L conj(phi_m) phi_n by adaptive quadrature.
Complex gram_quadrature(const oft::EigenBasis& basis, std::size_t m, std::size_t n);

/// Least-squares slope of y against x.
double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

/// FNV-1a over the raw bytes of the field values (grid excluded); used for
/// bit-identity checks across worker counts.
unsigned long long hash_field(const oft::ComplexField& f);

} // namespace oracle
