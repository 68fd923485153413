#include <Eigen/Dense>
#include <complex>
#include <random>

#include "doctest.h"
#include "oft/errors.hpp"
#include "oft/grid.hpp"
#include "oft/tridiagonal.hpp"

using oft::Complex;
using oft::SolverError;
using oft::TridiagonalSystem;
using oft::thomas_solve;

namespace {

TridiagonalSystem random_dominant(std::mt19937& rng, std::size_t m) {
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    TridiagonalSystem sys;
    sys.sub.resize(m);
    sys.diag.resize(m);
    sys.sup.resize(m);
    sys.rhs.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        sys.sub[j] = Complex(off(rng), off(rng));
        sys.sup[j] = Complex(off(rng), off(rng));
        // diagonal dominance keeps elimination without pivoting stable
        sys.diag[j] = Complex(off(rng), off(rng)) + Complex(5.0, 5.0);
        sys.rhs[j] = Complex(off(rng), off(rng));
    }
    return sys;
}

std::vector<Complex> dense_solve(const TridiagonalSystem& sys) {
    using Eigen::Index;
    Index m = Index(sys.diag.size());
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(m, m);
    Eigen::VectorXcd b(m);
    for (Index j = 0; j < m; ++j) {
        A(j, j) = sys.diag[std::size_t(j)];
        if (j > 0) A(j, j - 1) = sys.sub[std::size_t(j)];
        if (j + 1 < m) A(j, j + 1) = sys.sup[std::size_t(j)];
        b(j) = sys.rhs[std::size_t(j)];
    }
    Eigen::VectorXcd x = A.partialPivLu().solve(b);
    return std::vector<Complex>(x.data(), x.data() + m);
}

} // namespace

TEST_CASE("thomas matches a dense solve on random dominant systems") {
    std::mt19937 rng(7);
    for (std::size_t m : {std::size_t(3), std::size_t(4), std::size_t(17), std::size_t(256)}) {
        for (int trial = 0; trial < 5; ++trial) {
            TridiagonalSystem sys = random_dominant(rng, m);
            std::vector<Complex> got = thomas_solve(sys);
            std::vector<Complex> ref = dense_solve(sys);
            REQUIRE(got.size() == m);
            for (std::size_t j = 0; j < m; ++j) CHECK(std::abs(got[j] - ref[j]) <= 1e-12);
        }
    }
}

TEST_CASE("size-one and size-two systems") {
    TridiagonalSystem one;
    one.sub = {0.0};
    one.diag = {Complex(2.0, -1.0)};
    one.sup = {0.0};
    one.rhs = {Complex(4.0, 3.0)};
    std::vector<Complex> x = thomas_solve(one);
    CHECK(std::abs(x[0] - Complex(4.0, 3.0) / Complex(2.0, -1.0)) <= 1e-15);

    TridiagonalSystem two;
    two.sub = {0.0, Complex(1.0, 0.0)};
    two.diag = {Complex(3.0, 0.0), Complex(3.0, 0.0)};
    two.sup = {Complex(2.0, 0.0), 0.0};
    two.rhs = {Complex(1.0, 0.0), Complex(0.0, 0.0)};
    std::vector<Complex> y = thomas_solve(two);
    // [3 2; 1 3] x = [1; 0] -> x = (3, -1)/7
    CHECK(std::abs(y[0] - Complex(3.0 / 7.0, 0.0)) <= 1e-15);
    CHECK(std::abs(y[1] - Complex(-1.0 / 7.0, 0.0)) <= 1e-15);
}

TEST_CASE("band and rhs sizes must agree") {
    TridiagonalSystem sys;
    sys.sub = {0.0, 0.0};
    sys.diag = {Complex(1.0, 0.0), Complex(1.0, 0.0)};
    sys.sup = {0.0, 0.0};
    sys.rhs = {Complex(1.0, 0.0)};
    CHECK_THROWS_AS(thomas_solve(sys), oft::ArgumentError);
    sys.rhs.clear();
    sys.sub.clear();
    sys.diag.clear();
    sys.sup.clear();
    CHECK_THROWS_AS(thomas_solve(sys), oft::ArgumentError);
}

TEST_CASE("vanishing pivot is reported, not divided through") {
    TridiagonalSystem sys;
    sys.sub = {0.0, Complex(1.0, 0.0)};
    sys.diag = {Complex(0.0, 0.0), Complex(1.0, 0.0)};
    sys.sup = {Complex(1.0, 0.0), 0.0};
    sys.rhs = {Complex(1.0, 0.0), Complex(1.0, 0.0)};
    CHECK_THROWS_AS(thomas_solve(sys), SolverError);

    // elimination can also zero a later pivot: diag[1] - sub[1]*sup[0]/diag[0]
    TridiagonalSystem late;
    late.sub = {0.0, Complex(2.0, 0.0)};
    late.diag = {Complex(1.0, 0.0), Complex(2.0, 0.0)};
    late.sup = {Complex(1.0, 0.0), 0.0};
    late.rhs = {Complex(1.0, 1.0), Complex(1.0, 1.0)};
    CHECK_THROWS_AS(thomas_solve(late), SolverError);
}
