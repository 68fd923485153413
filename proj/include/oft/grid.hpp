#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "oft/errors.hpp"

namespace oft {

using Complex = std::complex<double>;

/// Uniform tensor-product grid on a box, endpoints included. Axes beyond dim
/// are padded with a single virtual point so loops can be written rank-3.
struct Grid {
    int dim = 0;
    std::array<double, 3> lower{{0.0, 0.0, 0.0}};
    std::array<double, 3> upper{{0.0, 0.0, 0.0}};
    std::array<std::size_t, 3> n{{1, 1, 1}};

    static Grid make(int dim, const double* lower, const double* upper, const std::size_t* n);
    static Grid make1(double lo, double hi, std::size_t n);
    static Grid make2(double lo0, double hi0, std::size_t n0, double lo1, double hi1, std::size_t n1);
    static Grid make3(const std::array<double, 3>& lo, const std::array<double, 3>& hi,
                      const std::array<std::size_t, 3>& n);

    double spacing(int axis) const;
    double edge_length(int axis) const { return upper[axis] - lower[axis]; }
    double longest_edge() const;
    double coordinate(int axis, std::size_t i) const { return lower[axis] + spacing(axis) * double(i); }

    std::size_t point_count() const { return n[0] * n[1] * n[2]; }

    /// Axis-0 varies fastest: index = i0 + n0*(i1 + n1*i2).
    std::size_t linear_index(std::size_t i0, std::size_t i1 = 0, std::size_t i2 = 0) const {
        return i0 + n[0] * (i1 + n[1] * i2);
    }
    std::array<std::size_t, 3> multi_index(std::size_t lin) const {
        return {lin % n[0], (lin / n[0]) % n[1], lin / (n[0] * n[1])};
    }

    bool operator==(const Grid& o) const = default;
};

/// Complex-valued nodal field with its grid.
struct ComplexField {
    Grid grid;
    std::vector<Complex> values;

    ComplexField() = default;
    explicit ComplexField(const Grid& g) : grid(g), values(g.point_count(), Complex(0.0, 0.0)) {}

    Complex& operator[](std::size_t i) { return values[i]; }
    const Complex& operator[](std::size_t i) const { return values[i]; }
    std::size_t size() const { return values.size(); }
};

/// Real refraction coefficient beta(x) sampled on a grid.
struct RefractionField {
    Grid grid;
    std::vector<double> beta;

    RefractionField() = default;
    explicit RefractionField(const Grid& g, double fill = 1.0) : grid(g), beta(g.point_count(), fill) {}

    /// True when every sample equals beta[0] exactly; enables shared tridiagonal
    /// factorizations in the sweep along axis 0.
    bool is_uniform() const;
};

/// max_j |f_j| (parallel, worker-count independent).
double max_abs(const ComplexField& f);

/// max_j |f_j - g_j|; grids must match.
double max_abs_diff(const ComplexField& f, const ComplexField& g);

void require_same_grid(const Grid& a, const Grid& b, const char* where);

} // namespace oft
