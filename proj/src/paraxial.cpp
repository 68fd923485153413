#include "oft/paraxial.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "oft/errors.hpp"
#include "oft/parallel.hpp"
#include "oft/stencil.hpp"

namespace oft {

namespace {

using Complex = std::complex<double>;

constexpr double kPivotFloor = 1e-300;

[[noreturn]] void singular(int axis) {
    throw SolverError("singular pivot in tridiagonal sweep along axis " + std::to_string(axis));
}

// One tridiagonal factor (I + dt*A_axis) after condensing the impedance rows
//   (kappa + 1.5i/dx) u_face - (2i/dx) u_in1 + (0.5i/dx) u_in2 = 0
// onto the neighbouring interior row, which keeps the system tridiagonal.
// Interior rows are s, d_j, s with s = -i dt / (kappa dx)^2. When d_j does not
// depend on the line (every axis >= 1, and axis 0 under uniform beta) the
// factorization is shared by all lines of the sweep.
struct SweepFactors {
    std::vector<Complex> g;  // reciprocal pivots
    std::vector<Complex> cp; // normalized superdiagonals
    Complex s;               // interior off-diagonal
    Complex q;               // -e0/s: folds the neighbour rhs into the face row
    Complex bottom_sub;      // condensed sub-diagonal of the last row
    int axis;
};

struct BoundaryRow {
    Complex b0, c0, e0;
};

BoundaryRow boundary_row(double kappa, double dx) {
    return {Complex(kappa, 1.5 / dx), Complex(0.0, -2.0 / dx), Complex(0.0, 0.5 / dx)};
}

template <typename Diag>
SweepFactors build_factors(std::size_t m, int axis, Complex s, const BoundaryRow& bc,
                           const Diag& d) {
    SweepFactors f;
    f.axis = axis;
    f.s = s;
    f.q = -bc.e0 / s;
    f.g.resize(m);
    f.cp.resize(m);
    Complex top = bc.b0 - bc.e0;
    if (std::abs(top) < kPivotFloor) singular(axis);
    f.g[0] = 1.0 / top;
    f.cp[0] = (bc.c0 - bc.e0 * d(1) / s) * f.g[0];
    for (std::size_t j = 1; j + 1 < m; ++j) {
        Complex piv = d(j) - s * f.cp[j - 1];
        if (std::abs(piv) < kPivotFloor) singular(axis);
        f.g[j] = 1.0 / piv;
        f.cp[j] = s * f.g[j];
    }
    f.bottom_sub = bc.c0 - bc.e0 * d(m - 2) / s;
    Complex piv = top - f.bottom_sub * f.cp[m - 2];
    if (std::abs(piv) < kPivotFloor) singular(axis);
    f.g[m - 1] = 1.0 / piv;
    return f;
}

// Solves one contiguous line in place with shared factors.
void solve_line(Complex* r, std::size_t m, const SweepFactors& f) {
    Complex rm2 = r[m - 2];
    r[0] = f.q * r[1] * f.g[0];
    for (std::size_t j = 1; j + 1 < m; ++j) r[j] = (r[j] - f.s * r[j - 1]) * f.g[j];
    r[m - 1] = (f.q * rm2 - f.bottom_sub * r[m - 2]) * f.g[m - 1];
    for (std::size_t j = m - 1; j-- > 0;) r[j] -= f.cp[j] * r[j + 1];
}

// Axis-0 line with the zeroth-order term -i dt (beta - 1) folded into the
// diagonal, factored on the fly; cp is caller scratch of size m.
void solve_line_variable(Complex* r, const double* beta, std::size_t m, Complex s, Complex d_base,
                         Complex i_dt, const BoundaryRow& bc, Complex* cp) {
    auto d = [&](std::size_t j) { return d_base - i_dt * (beta[j] - 1.0); };
    Complex q = -bc.e0 / s;
    Complex top = bc.b0 - bc.e0;
    if (std::abs(top) < kPivotFloor) singular(0);
    Complex g0 = 1.0 / top;
    cp[0] = (bc.c0 - bc.e0 * d(1) / s) * g0;
    Complex rm2 = r[m - 2];
    r[0] = q * r[1] * g0;
    for (std::size_t j = 1; j + 1 < m; ++j) {
        Complex piv = d(j) - s * cp[j - 1];
        if (std::abs(piv) < kPivotFloor) singular(0);
        Complex g = 1.0 / piv;
        cp[j] = s * g;
        r[j] = (r[j] - s * r[j - 1]) * g;
    }
    Complex bottom_sub = bc.c0 - bc.e0 * d(m - 2) / s;
    Complex piv = top - bottom_sub * cp[m - 2];
    if (std::abs(piv) < kPivotFloor) singular(0);
    r[m - 1] = (q * rm2 - bottom_sub * r[m - 2]) / piv;
    for (std::size_t j = m - 1; j-- > 0;) r[j] -= cp[j] * r[j + 1];
}

// Strided sweep over a slab: rows row(j) = base + j*row_stride, each holding
// the contiguous inner range [ib, ie). The forward/backward recurrences run
// across rows while the inner index vectorizes.
void solve_slab(Complex* base, std::size_t row_stride, std::size_t m, std::size_t ib,
                std::size_t ie, const SweepFactors& f, std::vector<Complex>& save) {
    auto row = [&](std::size_t j) { return base + j * row_stride; };
    std::size_t w = ie - ib;
    save.resize(w);
    const Complex* r1 = row(1);
    const Complex* rm2 = row(m - 2);
    for (std::size_t i = 0; i < w; ++i) save[i] = rm2[ib + i];
    Complex* r0 = row(0);
    Complex g0 = f.g[0];
    for (std::size_t i = ib; i < ie; ++i) r0[i] = f.q * r1[i] * g0;
    for (std::size_t j = 1; j + 1 < m; ++j) {
        Complex* rj = row(j);
        const Complex* rp = row(j - 1);
        Complex s = f.s, g = f.g[j];
        for (std::size_t i = ib; i < ie; ++i) rj[i] = (rj[i] - s * rp[i]) * g;
    }
    Complex* rl = row(m - 1);
    const Complex* rp = row(m - 2);
    Complex gl = f.g[m - 1], bs = f.bottom_sub, q = f.q;
    for (std::size_t i = ib; i < ie; ++i) rl[i] = (q * save[i - ib] - bs * rp[i]) * gl;
    for (std::size_t j = m - 1; j-- > 0;) {
        Complex* rj = row(j);
        const Complex* rn = row(j + 1);
        Complex c = f.cp[j];
        for (std::size_t i = ib; i < ie; ++i) rj[i] -= c * rn[i];
    }
}

void sweep_axis0(ComplexField& u, const ParaxialProblem& prob, double dt, bool shared_beta) {
    const Grid& grid = u.grid;
    std::size_t m = grid.n[0];
    double dx = grid.spacing(0);
    double k2 = prob.kappa * prob.kappa;
    Complex s(0.0, -dt / (k2 * dx * dx));
    Complex d_base = 1.0 - 2.0 * s;
    Complex i_dt(0.0, dt);
    BoundaryRow bc = boundary_row(prob.kappa, dx);
    std::size_t lines = grid.n[1] * grid.n[2];
    Complex* values = u.values.data();
    if (shared_beta) {
        Complex d_const = d_base - i_dt * (prob.beta->beta[0] - 1.0);
        SweepFactors f = build_factors(m, 0, s, bc, [&](std::size_t) { return d_const; });
        parallel_for(
            lines,
            [&](std::size_t lb, std::size_t le) {
                for (std::size_t l = lb; l < le; ++l) solve_line(values + l * m, m, f);
            },
            1);
    } else {
        const double* beta = prob.beta->beta.data();
        parallel_for(
            lines,
            [&](std::size_t lb, std::size_t le) {
                std::vector<Complex> cp(m);
                for (std::size_t l = lb; l < le; ++l)
                    solve_line_variable(values + l * m, beta + l * m, m, s, d_base, i_dt, bc,
                                        cp.data());
            },
            1);
    }
}

void sweep_axis_strided(ComplexField& u, const ParaxialProblem& prob, double dt, int axis) {
    const Grid& grid = u.grid;
    std::size_t n0 = grid.n[0], n1 = grid.n[1], n2 = grid.n[2];
    std::size_t m = grid.n[axis];
    double dx = grid.spacing(axis);
    double k2 = prob.kappa * prob.kappa;
    Complex s(0.0, -dt / (k2 * dx * dx));
    Complex d_const = 1.0 - 2.0 * s;
    BoundaryRow bc = boundary_row(prob.kappa, dx);
    SweepFactors f = build_factors(m, axis, s, bc, [&](std::size_t) { return d_const; });
    Complex* values = u.values.data();
    if (axis == 1) {
        if (n2 == 1) {
            // Single slab: split the contiguous inner index across workers.
            parallel_for(
                n0,
                [&](std::size_t ib, std::size_t ie) {
                    std::vector<Complex> save;
                    solve_slab(values, n0, m, ib, ie, f, save);
                },
                64);
        } else {
            parallel_for(
                n2,
                [&](std::size_t kb, std::size_t ke) {
                    std::vector<Complex> save;
                    for (std::size_t k = kb; k < ke; ++k)
                        solve_slab(values + k * n0 * n1, n0, m, 0, n0, f, save);
                },
                1);
        }
    } else {
        parallel_for(
            n1,
            [&](std::size_t jb, std::size_t je) {
                std::vector<Complex> save;
                for (std::size_t j = jb; j < je; ++j)
                    solve_slab(values + j * n0, n0 * n1, m, 0, n0, f, save);
            },
            1);
    }
}

void adi_step_impl(ComplexField& u, const ParaxialProblem& prob, double dt, bool shared_beta) {
    sweep_axis0(u, prob, dt, shared_beta);
    for (int axis = 1; axis < u.grid.dim; ++axis) sweep_axis_strided(u, prob, dt, axis);
}

} // namespace

void ParaxialProblem::validate() const {
    if (!beta || !initial) throw ArgumentError("paraxial problem is missing fields");
    if (!(kappa > 0.0)) throw ArgumentError("wavenumber must be positive");
    if (!(beta->grid == initial->grid)) throw ArgumentError("coefficient and data grids differ");
    if (initial->values.size() != initial->grid.point_count())
        throw ArgumentError("field storage does not match its grid");
    if (beta->beta.size() != beta->grid.point_count())
        throw ArgumentError("coefficient storage does not match its grid");
}

void adi_step(ComplexField& u, const ParaxialProblem& prob, double dt) {
    prob.validate();
    if (!(u.grid == prob.beta->grid)) throw ArgumentError("field grid differs from problem grid");
    if (!(dt > 0.0)) throw ArgumentError("time step must be positive");
    adi_step_impl(u, prob, dt, prob.beta->is_uniform());
}

ComplexField evolve_and_accumulate(const ParaxialProblem& prob, const TimeStepSchedule& schedule,
                                   const QuadratureWeights& weights, const EvolveControl& control,
                                   EvolveReport& report) {
    prob.validate();
    if (weights.schedule.nodes != schedule.nodes)
        throw ArgumentError("quadrature weights were built for a different schedule");
    if (control.rule.kind == StoppingKind::residual_threshold && !control.residual_target)
        throw ArgumentError("residual stopping needs a right-hand side");

    const Grid& grid = prob.initial->grid;
    bool shared_beta = prob.beta->is_uniform();
    double sigma = 1.0 / (prob.kappa * grid.longest_edge());

    ComplexField u = *prob.initial;
    OftAccumulator acc(weights, grid);
    acc.accumulate(u);

    double target_norm = 0.0;
    if (control.rule.kind == StoppingKind::residual_threshold)
        target_norm = max_abs(*control.residual_target);

    std::size_t total = schedule.step_count();
    std::size_t cap = std::min(total, control.max_steps);
    report = EvolveReport{};
    for (std::size_t n = 1; n <= cap; ++n) {
        double dt = schedule.nodes[n] - schedule.nodes[n - 1];
        adi_step_impl(u, prob, dt, shared_beta);
        acc.accumulate(u);
        report.steps_taken = n;
        report.t_reached = schedule.nodes[n];
        if (control.rule.kind == StoppingKind::ub_threshold) {
            double mx = max_abs(u);
            if (mx <= 10.0 * control.rule.tol * sigma * std::sqrt(schedule.nodes[n])) break;
        } else if (control.rule.kind == StoppingKind::residual_threshold && target_norm > 0.0 &&
                   n % control.residual_check_interval == 0) {
            ComplexField hv = discrete_helmholtz_apply(acc.partial(), *prob.beta, prob.kappa);
            double res = max_abs_diff(hv, *control.residual_target) / target_norm;
            if (res <= control.rule.tol) break;
        }
    }
    report.truncated = report.steps_taken < total;
    report.final_max_norm = max_abs(u);
    return acc.take();
}

} // namespace oft
