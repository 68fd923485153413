#pragma once

#include <complex>

namespace oft {

/// C(x) = \int_0^x cos(t^2) dt and S(x) = \int_0^x sin(t^2) dt.
/// Unnormalized convention: both tend to sqrt(pi/8) as x -> +inf.
struct FresnelPair {
    double c = 0.0;
    double s = 0.0;
};

/// Evaluates both Fresnel integrals. Odd in x; absolute error below 1e-12
/// over the real line. Throws ArgumentError on NaN.
FresnelPair fresnel(double x);

/// C(x) + i S(x) = \int_0^x exp(i t^2) dt as one complex value.
std::complex<double> fresnel_cs(double x);

namespace detail {

/// Maclaurin branch, compensated summation; accurate for |x| <= crossover.
FresnelPair fresnel_series(double x);

/// Large-argument branch via the asymptotic expansion of
/// \int_{x^2}^inf e^{iu} u^{-1/2} du; accurate for |x| >= crossover.
FresnelPair fresnel_asymptotic(double x);

/// Branch switch point; both branches meet the tolerance here.
constexpr double fresnel_crossover = 6.0;

} // namespace detail

} // namespace oft
