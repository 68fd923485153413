#include "oft/grid.hpp"

#include <cmath>
#include <string>

#include "oft/parallel.hpp"

namespace oft {

Grid Grid::make(int dim, const double* lower, const double* upper, const std::size_t* n) {
    if (dim < 1 || dim > 3) throw ArgumentError("grid: dim must be 1, 2 or 3");
    Grid g;
    g.dim = dim;
    for (int a = 0; a < dim; ++a) {
        if (!(upper[a] > lower[a]))
            throw ArgumentError("grid: upper <= lower on axis " + std::to_string(a));
        if (n[a] < 3) throw ArgumentError("grid: need at least 3 points on axis " + std::to_string(a));
        g.lower[a] = lower[a];
        g.upper[a] = upper[a];
        g.n[a] = n[a];
    }
    for (int a = dim; a < 3; ++a) {
        g.lower[a] = 0.0;
        g.upper[a] = 0.0;
        g.n[a] = 1;
    }
    return g;
}

Grid Grid::make1(double lo, double hi, std::size_t n) {
    return make(1, &lo, &hi, &n);
}

Grid Grid::make2(double lo0, double hi0, std::size_t n0, double lo1, double hi1, std::size_t n1) {
    double lo[2] = {lo0, lo1}, hi[2] = {hi0, hi1};
    std::size_t nn[2] = {n0, n1};
    return make(2, lo, hi, nn);
}

Grid Grid::make3(const std::array<double, 3>& lo, const std::array<double, 3>& hi,
                 const std::array<std::size_t, 3>& n) {
    return make(3, lo.data(), hi.data(), n.data());
}

double Grid::spacing(int axis) const {
    if (axis < 0 || axis >= dim) throw ArgumentError("grid: axis out of range");
    return (upper[axis] - lower[axis]) / double(n[axis] - 1);
}

double Grid::longest_edge() const {
    double L = 0.0;
    for (int a = 0; a < dim; ++a) L = std::max(L, edge_length(a));
    return L;
}

bool RefractionField::is_uniform() const {
    if (beta.empty()) return true;
    double b0 = beta[0];
    for (double b : beta)
        if (b != b0) return false;
    return true;
}

double max_abs(const ComplexField& f) {
    const Complex* v = f.values.data();
    return parallel_max(f.size(), [v](std::size_t b, std::size_t e) {
        double m = 0.0;
        for (std::size_t i = b; i < e; ++i) m = std::max(m, std::abs(v[i]));
        return m;
    });
}

double max_abs_diff(const ComplexField& f, const ComplexField& g) {
    require_same_grid(f.grid, g.grid, "max_abs_diff");
    const Complex* a = f.values.data();
    const Complex* b = g.values.data();
    return parallel_max(f.size(), [a, b](std::size_t lo, std::size_t hi) {
        double m = 0.0;
        for (std::size_t i = lo; i < hi; ++i) m = std::max(m, std::abs(a[i] - b[i]));
        return m;
    });
}

void require_same_grid(const Grid& a, const Grid& b, const char* where) {
    if (!(a == b)) throw ArgumentError(std::string(where) + ": grid mismatch");
}

} // namespace oft
