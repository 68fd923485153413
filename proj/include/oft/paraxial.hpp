#pragma once

#include <cstddef>

#include "oft/grid.hpp"
#include "oft/quadrature.hpp"
#include "oft/schedule.hpp"

namespace oft {

/// Pseudo-time initial value problem
///     u_t = i (beta - 1) u + (i / kappa^2) Laplacian(u),   u(0) = initial,
/// with the impedance closure u + (i/kappa) du/dn = 0 on every face.
struct ParaxialProblem {
    double kappa = 0.0;
    const RefractionField* beta = nullptr;
    const ComplexField* initial = nullptr;

    void validate() const;
};

/// One backward-Euler step of length dt, split one axis at a time
/// (Douglas-Rachford style: the full zeroth-order term rides with axis 0).
/// Each axis solve is tridiagonal after condensing the three-point boundary
/// rows onto the adjacent interior row.
void adi_step(ComplexField& u, const ParaxialProblem& prob, double dt);

enum class StoppingKind {
    fixed_schedule,     // march every node of the schedule
    ub_threshold,       // stop once max|u| <= 10 * tol * sigma * sqrt(t)
    residual_threshold, // stop once the accumulated field's equation residual <= tol
};

struct StoppingRule {
    StoppingKind kind = StoppingKind::fixed_schedule;
    double tol = 0.0;
};

struct EvolveControl {
    StoppingRule rule;
    // Equation right-hand side for residual_threshold; ignored otherwise.
    const ComplexField* residual_target = nullptr;
    std::size_t residual_check_interval = 32;
    // Hard cap on steps (used to replay a truncated first pass).
    std::size_t max_steps = static_cast<std::size_t>(-1);
};

struct EvolveReport {
    std::size_t steps_taken = 0;     // time steps actually marched
    double t_reached = 0.0;          // schedule node reached
    double final_max_norm = 0.0;     // max|u| at the last step taken
    bool truncated = false;          // stopped before the end of the schedule
};

/// Marches the problem along the schedule, folding every visited node into the
/// quadrature accumulator (node 0 is the initial data). Returns the weighted sum.
ComplexField evolve_and_accumulate(const ParaxialProblem& prob, const TimeStepSchedule& schedule,
                                   const QuadratureWeights& weights, const EvolveControl& control,
                                   EvolveReport& report);

} // namespace oft
