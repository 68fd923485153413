#pragma once

#include <string>
#include <vector>

#include "oft/config.hpp"
#include "oft/grid.hpp"
#include "oft/helmholtz.hpp"

namespace oft {

/// Materializes the refraction coefficient a config describes (including
/// raster loading for kind = raster).
RefractionField build_refraction(const SolverConfig& cfg);

/// 8-bit binary PGM (P5) resampled bilinearly onto the grid:
/// beta = 1 + amplitude * pixel/255, clamped to [1, 1 + amplitude].
/// Image row 0 maps to the top of the domain (largest second coordinate).
RefractionField load_raster_refraction(const std::string& path, double amplitude,
                                       const Grid& grid);

struct RunArtifacts {
    SolveReport report;
    double max_abs_field = 0.0;
    std::string output_path;
};

/// Full two-pass scattered-field solve driven by a config; writes the field
/// in the configured format and returns the report.
RunArtifacts run_solve(const SolverConfig& cfg);

/// Single-pass operator application (the square-root inverse only).
RunArtifacts run_apply_sqrt(const SolverConfig& cfg);

struct ConvergeRow {
    double dt0 = 0.0;
    std::size_t n_tau = 0;
    std::size_t nx = 0;
    double relerr_v1 = 0.0;
    double ub = 0.0;
    double relerr_v2 = 0.0;
    double res = 0.0;
};

/// Reference convergence sweep: Gaussian-modulated plane-wave source on
/// [-1,1]^dim, kappa = 10, beta = 1, exponential schedule with dtT = 10 dt0,
/// rows (1-based) fix dt0 = 5e-2 / 10^(row-1) with matched grids and step
/// counts. Rows whose fields exceed the memory budget are skipped.
std::vector<ConvergeRow> run_converge(int dim, std::size_t row_begin, std::size_t row_end);

void write_converge_csv(const std::string& path, const std::vector<ConvergeRow>& rows);

struct OdeDemoRow {
    double dx = 0.0;
    double dt = 0.0;
    double max_err = 0.0;
};

struct OdeDemoReport {
    std::vector<OdeDemoRow> rows;
    double fitted_order = 0.0;
};

/// Free-space resolvent demo: marches u_t = i u_xx with zero Dirichlet walls
/// (forward-time first step, then leapfrog) and sums exp-weighted snapshots
/// with the trapezoid rule; the analytic answer is sin(pi x).
OdeDemoReport run_demo_ode1(const std::vector<std::size_t>& j_values = {25, 50, 100});

/// Advection-pair demo: two first-order upwind marches (left- and
/// right-moving) accumulated with exp weights reproduce exp(-x^2); at
/// cfl = 1 the transport is exact and only the quadrature error remains.
OdeDemoReport run_demo_ode2(double cfl = 1.0,
                            const std::vector<std::size_t>& j_values = {64, 128, 256});

struct LuneburgReport {
    std::array<double, 3> peak_point{0.0, 0.0, 0.0};
    double peak_value = 0.0;
    double wavelength = 0.0;
    double distance_to_focus = 0.0; // from the shadow-side lens pole
    SolveReport solve;
};

/// Desk-scale Luneburg lens transmission: unit lens at the origin inside
/// [-2,2]^2 x [-2,3], plane wave along the long axis, kappa = 10. Reports
/// where |incident + scattered| peaks; writes the scattered field when
/// output_path is nonempty.
LuneburgReport run_demo_luneburg(const std::string& output_path = "");

} // namespace oft
