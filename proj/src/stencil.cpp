#include "oft/stencil.hpp"

#include <cmath>

#include "oft/parallel.hpp"

namespace oft {

namespace {

inline std::size_t axis_stride(const Grid& g, int axis) {
    std::size_t s = 1;
    for (int a = 0; a < axis; ++a) s *= g.n[a];
    return s;
}

} // namespace

Complex one_sided_normal_derivative(const ComplexField& f, int axis, int face,
                                    const std::array<std::size_t, 3>& idx) {
    const Grid& g = f.grid;
    if (axis < 0 || axis >= g.dim) throw ArgumentError("normal_derivative: axis out of range");
    std::size_t m = g.n[axis];
    if ((face == 0 && idx[axis] != 0) || (face == 1 && idx[axis] != m - 1))
        throw ArgumentError("normal_derivative: point not on the requested face");

    std::size_t stride = axis_stride(g, axis);
    std::size_t lin = g.linear_index(idx[0], idx[1], idx[2]);
    double inv2dx = 1.0 / (2.0 * g.spacing(axis));
    // inward three-point stencil; outward normal flips the sign on the low face
    Complex d;
    if (face == 0)
        d = (-3.0 * f[lin] + 4.0 * f[lin + stride] - f[lin + 2 * stride]) * inv2dx;
    else
        d = (-3.0 * f[lin] + 4.0 * f[lin - stride] - f[lin - 2 * stride]) * inv2dx;
    return -d; // derivative along the outward normal
}

ComplexField second_difference_axis(const ComplexField& f, int axis, double kappa) {
    const Grid& g = f.grid;
    if (axis < 0 || axis >= g.dim) throw ArgumentError("second_difference_axis: axis out of range");
    if (!(kappa > 0.0)) throw ArgumentError("second_difference_axis: kappa must be positive");

    ComplexField out(g);
    const std::size_t stride = axis_stride(g, axis);
    const std::size_t m = g.n[axis];
    const double inv_dx2 = 1.0 / (g.spacing(axis) * g.spacing(axis));
    const double inv2dx = 1.0 / (2.0 * g.spacing(axis));
    const Complex i_over_kappa(0.0, 1.0 / kappa);

    const Complex* v = f.values.data();
    Complex* w = out.values.data();
    const std::size_t n0 = g.n[0], n1 = g.n[1], n2 = g.n[2];

    parallel_for(n1 * n2, [&](std::size_t jb, std::size_t je) {
        for (std::size_t jk = jb; jk < je; ++jk) {
            std::size_t j = jk % n1, k = jk / n1;
            std::size_t row = n0 * (j + n1 * k);
            for (std::size_t i = 0; i < n0; ++i) {
                std::size_t lin = row + i;
                std::size_t pos = (axis == 0) ? i : (axis == 1 ? j : k);
                if (pos == 0) {
                    Complex dn = (-3.0 * v[lin] + 4.0 * v[lin + stride] - v[lin + 2 * stride]) * inv2dx;
                    w[lin] = v[lin] - i_over_kappa * dn; // outward normal = -inward
                } else if (pos == m - 1) {
                    Complex dn = (-3.0 * v[lin] + 4.0 * v[lin - stride] - v[lin - 2 * stride]) * inv2dx;
                    w[lin] = v[lin] - i_over_kappa * dn;
                } else {
                    w[lin] = (v[lin + stride] - 2.0 * v[lin] + v[lin - stride]) * inv_dx2;
                }
            }
        }
    });
    return out;
}

ComplexField discrete_helmholtz_apply(const ComplexField& v, const RefractionField& beta,
                                      double kappa) {
    require_same_grid(v.grid, beta.grid, "discrete_helmholtz_apply");
    if (!(kappa > 0.0)) throw ArgumentError("discrete_helmholtz_apply: kappa must be positive");

    const Grid& g = v.grid;
    ComplexField out(g);
    const double inv_k2 = 1.0 / (kappa * kappa);
    const Complex i_over_kappa(0.0, 1.0 / kappa);
    const std::size_t n0 = g.n[0], n1 = g.n[1], n2 = g.n[2];

    std::array<double, 3> inv_dx2{}, inv2dx{};
    std::array<std::size_t, 3> stride{};
    for (int a = 0; a < g.dim; ++a) {
        double dx = g.spacing(a);
        inv_dx2[a] = 1.0 / (dx * dx);
        inv2dx[a] = 1.0 / (2.0 * dx);
        stride[a] = axis_stride(g, a);
    }

    const Complex* f = v.values.data();
    const double* b = beta.beta.data();
    Complex* w = out.values.data();

    parallel_for(n1 * n2, [&](std::size_t jb, std::size_t je) {
        std::array<std::size_t, 3> idx{};
        for (std::size_t jk = jb; jk < je; ++jk) {
            idx[1] = jk % n1;
            idx[2] = jk / n1;
            std::size_t row = n0 * (idx[1] + n1 * idx[2]);
            for (std::size_t i = 0; i < n0; ++i) {
                idx[0] = i;
                std::size_t lin = row + i;
                int bc_axis = -1, bc_face = 0;
                for (int a = 0; a < g.dim; ++a) {
                    if (idx[a] == 0) { bc_axis = a; bc_face = 0; break; }
                    if (idx[a] == g.n[a] - 1) { bc_axis = a; bc_face = 1; break; }
                }
                if (bc_axis >= 0) {
                    std::size_t s = stride[bc_axis];
                    Complex dn = (bc_face == 0)
                        ? (-3.0 * f[lin] + 4.0 * f[lin + s] - f[lin + 2 * s]) * inv2dx[bc_axis]
                        : (-3.0 * f[lin] + 4.0 * f[lin - s] - f[lin - 2 * s]) * inv2dx[bc_axis];
                    w[lin] = f[lin] - i_over_kappa * dn;
                } else {
                    Complex lap(0.0, 0.0);
                    for (int a = 0; a < g.dim; ++a) {
                        std::size_t s = stride[a];
                        lap += (f[lin + s] - 2.0 * f[lin] + f[lin - s]) * inv_dx2[a];
                    }
                    w[lin] = b[lin] * f[lin] + inv_k2 * lap;
                }
            }
        }
    });
    return out;
}

} // namespace oft
