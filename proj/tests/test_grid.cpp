#include <cmath>

#include "doctest.h"
#include "oft/errors.hpp"
#include "oft/grid.hpp"
#include "oft/parallel.hpp"

using namespace oft;

TEST_CASE("grid indexing round-trips and axis 0 is fastest") {
    Grid g = Grid::make3({-1.0, 0.0, 2.0}, {1.0, 3.0, 4.0}, {5, 4, 3});
    CHECK(g.point_count() == 60);
    CHECK(g.linear_index(1, 0, 0) == 1);
    CHECK(g.linear_index(0, 1, 0) == 5);
    CHECK(g.linear_index(0, 0, 1) == 20);
    for (std::size_t lin = 0; lin < g.point_count(); ++lin) {
        auto mi = g.multi_index(lin);
        CHECK(g.linear_index(mi[0], mi[1], mi[2]) == lin);
    }
}

TEST_CASE("grid coordinates include both endpoints") {
    Grid g = Grid::make1(-1.0, 1.0, 5);
    CHECK(g.spacing(0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g.coordinate(0, 0) == -1.0);
    CHECK(g.coordinate(0, 4) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.longest_edge() == doctest::Approx(2.0));
}

TEST_CASE("virtual axes collapse to one point") {
    Grid g = Grid::make2(0.0, 1.0, 8, 0.0, 2.0, 9);
    CHECK(g.n[2] == 1);
    CHECK(g.point_count() == 72);
    CHECK(g.longest_edge() == doctest::Approx(2.0));
}

TEST_CASE("grid construction rejects bad shapes") {
    double lo[3] = {0.0, 0.0, 0.0}, hi[3] = {1.0, 1.0, 1.0};
    std::size_t n[3] = {4, 4, 4};
    CHECK_THROWS_AS(Grid::make(0, lo, hi, n), ArgumentError);
    CHECK_THROWS_AS(Grid::make(4, lo, hi, n), ArgumentError);
    std::size_t too_few[3] = {2, 4, 4};
    CHECK_THROWS_AS(Grid::make(3, lo, hi, too_few), ArgumentError);
    double bad_hi[3] = {0.0, 1.0, 1.0};
    CHECK_THROWS_AS(Grid::make(3, lo, bad_hi, n), ArgumentError);
}

TEST_CASE("field max norms") {
    Grid g = Grid::make1(0.0, 1.0, 4);
    ComplexField f(g), h(g);
    f[2] = Complex(3.0, 4.0);
    h[2] = Complex(3.0, 3.0);
    CHECK(max_abs(f) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(max_abs_diff(f, h) == doctest::Approx(1.0).epsilon(1e-15));
    ComplexField other(Grid::make1(0.0, 1.0, 5));
    CHECK_THROWS_AS(max_abs_diff(f, other), ArgumentError);
}

TEST_CASE("refraction uniformity flag") {
    Grid g = Grid::make1(0.0, 1.0, 6);
    RefractionField beta(g, 1.25);
    CHECK(beta.is_uniform());
    beta.beta[3] = 1.2500000001;
    CHECK_FALSE(beta.is_uniform());
}

TEST_CASE("parallel partition covers the range once for any worker count") {
    // worker count is read per call, so toggling the env var takes effect here
    for (const char* workers : {"1", "3", "16"}) {
        setenv("OFT_THREADS", workers, 1);
        std::vector<int> hits(1000, 0);
        parallel_for(hits.size(), [&](std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) hits[i] += 1;
        }, 1);
        for (int h : hits) CHECK(h == 1);
    }
    unsetenv("OFT_THREADS");
}

TEST_CASE("parallel max matches serial max") {
    std::vector<double> v(10007);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::sin(0.1 * double(i));
    double serial = 0.0;
    for (double x : v) serial = std::max(serial, x);
    setenv("OFT_THREADS", "5", 1);
    double par = parallel_max(v.size(), [&](std::size_t b, std::size_t e) {
        double m = 0.0;
        for (std::size_t i = b; i < e; ++i) m = std::max(m, v[i]);
        return m;
    });
    unsetenv("OFT_THREADS");
    CHECK(par == serial);
}
