#pragma once

#include <array>
#include <cstddef>
#include <utility>

#include "oft/grid.hpp"
#include "oft/paraxial.hpp"
#include "oft/quadrature.hpp"
#include "oft/schedule.hpp"

namespace oft {

/// Incoming wave hitting the inhomogeneity. `plane` is e^{i k.x}; `image_pair`
/// subtracts the mirror wave reflected through the x2 = 0 plane, which pins a
/// zero-Dirichlet wall there (3D only).
enum class IncidentKind { plane, image_pair };

struct IncidentField {
    IncidentKind kind = IncidentKind::plane;
    std::array<double, 3> k{0.0, 0.0, 0.0}; // |k| equals the wavenumber
};

/// Normalizes `direction` and scales it to length kappa.
IncidentField plane_incident(int dim, const std::array<double, 3>& direction, double kappa);

/// Uses `k_vector` as given; checks |k| = kappa to 1e-12 relative.
IncidentField image_pair_incident(const std::array<double, 3>& k_vector, double kappa);

/// Samples the incident wave on the grid.
ComplexField evaluate_incident(const IncidentField& incident, const Grid& grid);

/// Scattered-field source g = -(beta - 1) v_incident.
ComplexField build_source(const RefractionField& beta, const IncidentField& incident);

struct SolveReport {
    double rel_residual = 0.0;
    double ub_estimate = 0.0;
    std::size_t steps_pass1 = 0;
    std::size_t steps_pass2 = 0;
    double wall_time = 0.0; // seconds
};

/// One quadrature pass: v1 ~ (beta + Laplacian/kappa^2)^{-1/2} g.
ComplexField apply_inverse_sqrt(const ComplexField& g, const RefractionField& beta, double kappa,
                                const TimeStepSchedule& schedule, const QuadratureWeights& weights,
                                const StoppingRule& stop, EvolveReport* report = nullptr);

/// Two passes compose the full inverse: v2 ~ (beta + Laplacian/kappa^2)^{-1} g.
/// Both passes march the same schedule and weights; if a threshold rule cuts
/// the first pass short, the second pass replays the same truncated node count
/// so the two quadratures stay aligned.
std::pair<ComplexField, SolveReport> solve_helmholtz(const ComplexField& g,
                                                     const RefractionField& beta, double kappa,
                                                     const TimeStepSchedule& schedule,
                                                     const QuadratureWeights& weights,
                                                     const StoppingRule& stop);

/// max|exact - approx| / max|exact|
double relative_error(const ComplexField& approx, const ComplexField& exact);

/// max|(beta + Laplacian/kappa^2) v - g| / max|g|, with the same discrete
/// operator (boundary closure included) the solver inverts.
double relative_residual(const ComplexField& v, const ComplexField& g, const RefractionField& beta,
                         double kappa);

/// max|u| / (sigma sqrt(t)), sigma = 1/(kappa L): estimated tail of the
/// truncated quadrature, usable as a stopping heuristic.
double ub_estimate(const ComplexField& u, double t_final, double kappa, double L);

/// Leading-order error split: quadrature (e1), backward Euler (e2), and tail
/// truncation (e3). Valid with sigma and the step-growth ratio held fixed as
/// dt0 shrinks and T grows; the ratio does not enter the leading terms.
struct ErrorBudget {
    double e1 = 0.0;
    double e2 = 0.0;
    double e3 = 0.0;
};

ErrorBudget error_budget(double sigma, double dt0, double ratio, double T, double op_norm);

} // namespace oft
