#include <cmath>
#include <complex>

#include "doctest.h"
#include "oft/errors.hpp"
#include "oft/fresnel.hpp"
#include "support/oracles.hpp"

using namespace oft;

TEST_CASE("fresnel basics") {
    FresnelPair zero = fresnel(0.0);
    CHECK(zero.c == 0.0);
    CHECK(zero.s == 0.0);
    CHECK_THROWS_AS(fresnel(std::nan("")), ArgumentError);
}

TEST_CASE("fresnel is exactly odd") {
    for (double x : {0.3, 1.7, 5.9, 6.1, 14.0, 1e5}) {
        FresnelPair p = fresnel(x), m = fresnel(-x);
        CHECK(m.c == -p.c);
        CHECK(m.s == -p.s);
    }
}

TEST_CASE("fresnel matches brute-force quadrature") {
    // dense sweep lives in the acceptance run; spot-check both branches here
    for (double x = 0.125; x <= 20.0; x += 0.511) {
        Complex ref = oracle::fresnel_brute(x);
        Complex got = fresnel_cs(x);
        CHECK(std::abs(got - ref) <= 1e-12);
    }
}

TEST_CASE("series and asymptotic branches agree at the crossover") {
    double x = detail::fresnel_crossover;
    FresnelPair lo = detail::fresnel_series(x);
    FresnelPair hi = detail::fresnel_asymptotic(x);
    CHECK(std::abs(lo.c - hi.c) <= 1e-13);
    CHECK(std::abs(lo.s - hi.s) <= 1e-13);
    // frozen reference values at the switch point
    CHECK(fresnel(x).c == doctest::Approx(0.54420402538718458).epsilon(1e-13));
    CHECK(fresnel(x).s == doctest::Approx(0.63845918931501038).epsilon(1e-13));
}

TEST_CASE("fresnel approaches sqrt(pi/8) with O(1/x) tail") {
    const double limit = 0.6266570686577501; // sqrt(pi/8)
    FresnelPair far = fresnel(1e13);
    CHECK(far.c == limit);
    CHECK(far.s == limit);
    for (double x : {50.0, 200.0, 1000.0}) {
        FresnelPair p = fresnel(x);
        CHECK(std::abs(p.c - limit) <= 0.51 / x);
        CHECK(std::abs(p.s - limit) <= 0.51 / x);
    }
}

TEST_CASE("fresnel curve extrema") {
    // C alone peaks at x = sqrt(pi/2) with C ~ 0.9775; the combined magnitude
    // |C + iS| tops out near x ~ 1.6 around 1.189 before spiraling in
    double peak_re = 0.0, peak_abs = 0.0;
    for (double x = 0.0; x <= 30.0; x += 1e-3) {
        peak_re = std::max(peak_re, std::abs(fresnel(x).c));
        peak_abs = std::max(peak_abs, std::abs(fresnel_cs(x)));
    }
    CHECK(peak_re >= 0.97);
    CHECK(peak_re <= 0.98);
    CHECK(peak_abs >= 1.18);
    CHECK(peak_abs <= 1.20);
}
