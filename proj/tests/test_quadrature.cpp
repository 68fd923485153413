#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "oft/errors.hpp"
#include "oft/fresnel.hpp"
#include "oft/quadrature.hpp"
#include "oft/schedule.hpp"
#include "support/oracles.hpp"

using namespace oft;

namespace {
const Complex kRootMiPi(0.39894228040143270, -0.39894228040143270); // sqrt(-i/pi)
}

TEST_CASE("panel weights integrate linear data exactly") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> pos(1e-4, 40.0), width(1e-6, 8.0), val(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        double ta = trial == 0 ? 0.0 : pos(rng);
        double tb = ta + width(rng);
        Complex fa(val(rng), val(rng)), fb(val(rng), val(rng));
        PanelWeights w = panel_weights(ta, tb);
        Complex got = w.w1 * fa + w.w2 * fb;
        Complex ref = oracle::halforder_panel_integral(ta, tb, fa, fb);
        CHECK(std::abs(got - ref) <= 1e-11);
    }
}

TEST_CASE("left-edge panel (0, dt) is handled by the substitution form") {
    for (double dt : {1e-6, 1e-3, 5e-2, 1.0}) {
        PanelWeights w = panel_weights(0.0, dt);
        Complex got = w.w1 * Complex(1.0, -0.5) + w.w2 * Complex(0.25, 2.0);
        Complex ref = oracle::halforder_panel_integral(0.0, dt, Complex(1.0, -0.5),
                                                       Complex(0.25, 2.0));
        CHECK(std::abs(got - ref) <= 1e-12);
    }
}

TEST_CASE("w1 + w2 equals the bare panel integral") {
    for (double ta : {0.0, 0.3, 7.0, 123.0}) {
        double tb = ta + 0.77;
        PanelWeights w = panel_weights(ta, tb);
        Complex bare =
            2.0 * kRootMiPi * (fresnel_cs(std::sqrt(tb)) - fresnel_cs(std::sqrt(ta)));
        CHECK(std::abs(w.w1 + w.w2 - bare) <= 1e-13);
    }
}

TEST_CASE("narrow panels switch to the series without a visible seam") {
    // the cancellation-avoiding branch engages below width/ta = 1e-4; just
    // above it the difference form runs at its cancellation floor, a few
    // ulps of the Fresnel values divided by the panel width
    double ta = 25.0;
    for (double rel : {2e-5, 9.9e-5, 1.01e-4, 5e-4}) {
        double tb = ta * (1.0 + rel);
        PanelWeights w = panel_weights(ta, tb);
        Complex ref = oracle::halforder_panel_integral(ta, tb, 1.0, 0.0);
        CHECK(std::abs(w.w1 - ref) <= 1e-11);
    }
}

TEST_CASE("composite weights telescope to the Fresnel closed form") {
    TimeStepSchedule s = build_schedule(5e-2, 5e-1, 20.0);
    QuadratureWeights q = composite_weights(s);
    REQUIRE(q.omega.size() == s.nodes.size());
    Complex sum = 0.0;
    for (Complex w : q.omega) sum += w;
    Complex closed = 2.0 * kRootMiPi * fresnel_cs(std::sqrt(s.t_final()));
    CHECK(std::abs(sum - closed) <= 1e-13);
}

TEST_CASE("composite interior weight is the sum of its two panel shares") {
    TimeStepSchedule s = build_schedule(1e-2, 1e-1, 2.0);
    QuadratureWeights q = composite_weights(s);
    for (std::size_t n : {std::size_t(1), std::size_t(5), s.step_count() - 1}) {
        PanelWeights left = panel_weights(s.nodes[n - 1], s.nodes[n]);
        PanelWeights right = panel_weights(s.nodes[n], s.nodes[n + 1]);
        CHECK(std::abs(q.omega[n] - (left.w2 + right.w1)) <= 1e-16);
    }
}

TEST_CASE("scalar accumulation approximates the half-order integral") {
    // sum omega_n e^{-t_n} vs (1+i)^{-1/2}; the defect is the truncated tail
    TimeStepSchedule s = build_schedule(1e-2, 1e-1, 8.0);
    QuadratureWeights q = composite_weights(s);
    Complex sum = 0.0;
    for (std::size_t n = 0; n < q.omega.size(); ++n) sum += q.omega[n] * std::exp(-s.nodes[n]);
    Complex exact = 1.0 / std::sqrt(Complex(1.0, 1.0));
    double tail_bound = std::exp(-s.t_final()) / std::sqrt(M_PI * s.t_final());
    CHECK(std::abs(sum - exact) <= tail_bound);
}

TEST_CASE("accumulator walks the schedule once") {
    TimeStepSchedule s = TimeStepSchedule::from_parameters(0.1, 1.5, 2);
    QuadratureWeights q = composite_weights(s);
    Grid g = Grid::make1(0.0, 1.0, 3);
    OftAccumulator acc(q, g);
    CHECK(acc.nodes_total() == 3);
    ComplexField u(g);
    Complex expect = 0.0;
    for (std::size_t n = 0; n < 3; ++n) {
        u[1] = Complex(double(n), 1.0);
        expect += q.omega[n] * u[1];
        acc.accumulate(u);
    }
    CHECK(acc.nodes_done() == 3);
    CHECK(std::abs(acc.partial()[1] - expect) <= 1e-16);
    CHECK_THROWS_AS(acc.accumulate(u), StateError);
    ComplexField wrong(Grid::make1(0.0, 1.0, 4));
    OftAccumulator acc2(q, g);
    CHECK_THROWS_AS(acc2.accumulate(wrong), ArgumentError);
}
