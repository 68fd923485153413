#include "oft/runner.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>

#include "oft/eigenbasis.hpp"
#include "oft/errors.hpp"
#include "oft/field_io.hpp"
#include "oft/parallel.hpp"
#include "oft/quadrature.hpp"
#include "oft/schedule.hpp"

namespace oft {

namespace {

constexpr double kPi = 3.14159265358979323846;

// rows hold ~6 complex fields at once; refuse anything past this budget
constexpr std::size_t kMemoryBudgetBytes = std::size_t(8) << 30;

double sqr(double x) { return x * x; }

RefractionField gaussian_refraction(const Grid& g, const std::array<double, 3>& center,
                                    double width, double amplitude) {
    RefractionField beta(g);
    parallel_for(g.point_count(), [&](std::size_t b, std::size_t e) {
        for (std::size_t idx = b; idx < e; ++idx) {
            std::array<std::size_t, 3> mi = g.multi_index(idx);
            double r2 = 0.0;
            for (int a = 0; a < g.dim; ++a)
                r2 += sqr(g.coordinate(a, mi[std::size_t(a)]) - center[std::size_t(a)]);
            beta.beta[idx] = 1.0 + amplitude * std::exp(-r2 / (width * width));
        }
    });
    return beta;
}

RefractionField luneburg_refraction(const Grid& g, const std::array<double, 3>& center,
                                    double radius) {
    RefractionField beta(g);
    parallel_for(g.point_count(), [&](std::size_t b, std::size_t e) {
        for (std::size_t idx = b; idx < e; ++idx) {
            std::array<std::size_t, 3> mi = g.multi_index(idx);
            double r2 = 0.0;
            for (int a = 0; a < g.dim; ++a)
                r2 += sqr(g.coordinate(a, mi[std::size_t(a)]) - center[std::size_t(a)]);
            r2 /= sqr(radius);
            beta.beta[idx] = r2 <= 1.0 ? 2.0 - r2 : 1.0;
        }
    });
    return beta;
}

IncidentField config_incident(const SolverConfig& cfg) {
    if (cfg.incident == IncidentKind::plane)
        return plane_incident(cfg.dim, cfg.direction, cfg.kappa);
    return image_pair_incident(cfg.k_vector, cfg.kappa);
}

void write_field(const SolverConfig& cfg, const ComplexField& field) {
    if (cfg.format == OutputFormat::oftf)
        write_oftf(cfg.output_path, field);
    else
        write_field_csv(cfg.output_path, field);
}

struct PreparedRun {
    Grid grid;
    RefractionField beta;
    ComplexField g;
    TimeStepSchedule schedule;
    QuadratureWeights weights;
};

PreparedRun prepare(const SolverConfig& cfg) {
    validate_config(cfg);
    Grid grid = config_grid(cfg);
    RefractionField beta = build_refraction(cfg);
    ComplexField g = build_source(beta, config_incident(cfg));
    double T = config_t_final(cfg);
    TimeStepSchedule schedule = build_schedule(cfg.dt0, cfg.dt0 * cfg.dtT_ratio, T);
    QuadratureWeights weights = composite_weights(schedule);
    return {grid, std::move(beta), std::move(g), std::move(schedule), std::move(weights)};
}

// shared 1D factors of the separable convergence source e^{-10|x|^2 + i kappa x_1}
Complex modulated_factor(double x) { return std::exp(Complex(-10.0 * x * x, 10.0 * x)); }
Complex envelope_factor(double x) { return std::exp(Complex(-10.0 * x * x, 0.0)); }

ComplexField sample_converge_source(const Grid& g) {
    ComplexField out(g);
    parallel_for(g.point_count(), [&](std::size_t b, std::size_t e) {
        for (std::size_t idx = b; idx < e; ++idx) {
            std::array<std::size_t, 3> mi = g.multi_index(idx);
            Complex v = modulated_factor(g.coordinate(0, mi[0]));
            for (int a = 1; a < g.dim; ++a) v *= envelope_factor(g.coordinate(a, mi[std::size_t(a)]));
            out.values[idx] = v;
        }
    });
    return out;
}

double fit_order(const std::vector<double>& h, const std::vector<double>& err) {
    // least-squares slope of log err against log h
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    double n = double(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        double x = std::log(h[i]), y = std::log(err[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

RefractionField build_refraction(const SolverConfig& cfg) {
    Grid g = config_grid(cfg);
    switch (cfg.refraction) {
        case RefractionKind::uniform: {
            RefractionField beta(g, cfg.beta0);
            return beta;
        }
        case RefractionKind::gaussian:
            return gaussian_refraction(g, cfg.center, cfg.width, cfg.amplitude);
        case RefractionKind::luneburg:
            return luneburg_refraction(g, cfg.center, cfg.radius);
        case RefractionKind::raster:
            return load_raster_refraction(cfg.raster_path, cfg.amplitude, g);
    }
    throw ConfigError("unhandled refraction kind");
}

RefractionField load_raster_refraction(const std::string& path, double amplitude,
                                       const Grid& grid) {
    if (grid.dim != 2) throw ArgumentError("raster refraction needs a 2D grid");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open raster '" + path + "'");
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    std::size_t pos = 0;
    auto parse_err = [&](const std::string& what) -> IoError {
        return IoError("malformed PGM '" + path + "': " + what + " at byte " + std::to_string(pos));
    };
    auto skip_space = [&]() {
        while (pos < data.size()) {
            char c = data[pos];
            if (c == '#') {
                while (pos < data.size() && data[pos] != '\n') ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos;
            } else {
                break;
            }
        }
    };
    auto read_int = [&]() -> long {
        skip_space();
        std::size_t start = pos;
        long v = 0;
        while (pos < data.size() && data[pos] >= '0' && data[pos] <= '9') {
            v = v * 10 + (data[pos] - '0');
            ++pos;
        }
        if (pos == start) throw parse_err("expected a decimal number");
        return v;
    };

    if (data.size() < 2 || data[0] != 'P' || data[1] != '5') throw parse_err("missing P5 signature");
    pos = 2;
    long width = read_int();
    long height = read_int();
    long maxval = read_int();
    if (width < 1 || height < 1) throw parse_err("non-positive image size");
    if (maxval < 1 || maxval > 255) throw parse_err("maxval out of the 8-bit range");
    if (pos >= data.size()) throw parse_err("missing raster separator");
    ++pos; // single whitespace byte between header and raster
    std::size_t need = std::size_t(width) * std::size_t(height);
    if (data.size() - pos < need) {
        pos = data.size();
        throw parse_err("raster truncated, expected " + std::to_string(need) + " pixels");
    }
    const unsigned char* px = reinterpret_cast<const unsigned char*>(data.data()) + pos;

    RefractionField beta(grid);
    double hi = 1.0 + amplitude;
    parallel_for(grid.point_count(), [&](std::size_t b, std::size_t e) {
        for (std::size_t idx = b; idx < e; ++idx) {
            std::size_t i = idx % grid.n[0], j = idx / grid.n[0];
            // map the domain onto pixel centers; image row 0 is the top
            double u = grid.n[0] > 1 ? double(i) / double(grid.n[0] - 1) : 0.0;
            double v = grid.n[1] > 1 ? double(j) / double(grid.n[1] - 1) : 0.0;
            double fx = u * double(width - 1);
            double fy = (1.0 - v) * double(height - 1);
            long x0 = long(fx), y0 = long(fy);
            long x1 = std::min(x0 + 1, width - 1), y1 = std::min(y0 + 1, height - 1);
            double ax = fx - double(x0), ay = fy - double(y0);
            double p00 = px[y0 * width + x0], p10 = px[y0 * width + x1];
            double p01 = px[y1 * width + x0], p11 = px[y1 * width + x1];
            double p = (1.0 - ay) * ((1.0 - ax) * p00 + ax * p10) +
                       ay * ((1.0 - ax) * p01 + ax * p11);
            double val = 1.0 + amplitude * (p / double(maxval));
            beta.beta[idx] = std::min(std::max(val, 1.0), hi);
        }
    });
    return beta;
}

RunArtifacts run_solve(const SolverConfig& cfg) {
    PreparedRun run = prepare(cfg);
    auto [v2, report] = solve_helmholtz(run.g, run.beta, cfg.kappa, run.schedule, run.weights,
                                        cfg.stopping);
    write_field(cfg, v2);
    return {report, max_abs(v2), cfg.output_path};
}

RunArtifacts run_apply_sqrt(const SolverConfig& cfg) {
    PreparedRun run = prepare(cfg);
    EvolveReport rep;
    ComplexField v1 = apply_inverse_sqrt(run.g, run.beta, cfg.kappa, run.schedule, run.weights,
                                         cfg.stopping, &rep);
    write_field(cfg, v1);
    SolveReport report;
    report.steps_pass1 = rep.steps_taken;
    // ub tracks the marching state at the last node, not the accumulation
    double sigma = 1.0 / (cfg.kappa * run.grid.longest_edge());
    report.ub_estimate = rep.final_max_norm / (sigma * std::sqrt(rep.t_reached));
    return {report, max_abs(v1), cfg.output_path};
}

std::vector<ConvergeRow> run_converge(int dim, std::size_t row_begin, std::size_t row_end) {
    if (dim < 1 || dim > 3) throw ArgumentError("convergence study dimension must be 1, 2, or 3");
    if (row_begin < 1 || row_begin > row_end) throw ArgumentError("bad convergence row range");

    // published sweep: dt0 decades with matched grids and step counts
    const std::vector<double> dt0s{5e-2, 5e-3, 5e-4, 5e-5, 5e-6};
    const std::vector<std::size_t> nxs{70, 200, 600, 1800, 5400};
    const std::vector<std::size_t> n_taus{102, 1308, 17810, 233199, 2617277};
    if (row_end > dt0s.size()) throw ArgumentError("convergence rows run from 1 to 5");

    const double kappa = 10.0, L = 2.0, T = kappa * L;
    std::size_t K = default_mode_count(kappa, L);
    EigenBasis basis = find_eigenvalues(kappa, L, K);

    std::vector<ConvergeRow> rows;
    for (std::size_t r = row_begin; r <= row_end; ++r) {
        double dt0 = dt0s[r - 1];
        std::size_t nx = nxs[r - 1];
        std::size_t n_tau = n_taus[r - 1];

        std::size_t points = 1;
        for (int a = 0; a < dim; ++a) points *= nx;
        if (points * 16 * 6 > kMemoryBudgetBytes) {
            std::fprintf(stderr, "skipping row %zu: %zu points exceed the memory budget\n", r,
                         points);
            continue;
        }

        std::array<double, 3> lo{-1.0, -1.0, -1.0}, up{1.0, 1.0, 1.0};
        std::array<std::size_t, 3> nn{nx, nx, nx};
        Grid grid = Grid::make(dim, lo.data(), up.data(), nn.data());

        RefractionField beta(grid);
        ComplexField g = sample_converge_source(grid);

        TimeStepSchedule schedule = build_schedule_with_count(dt0, 10.0 * dt0, T, n_tau);
        QuadratureWeights weights = composite_weights(schedule);
        StoppingRule fixed; // run the full published step count

        EvolveReport rep1;
        ComplexField v1 = apply_inverse_sqrt(g, beta, kappa, schedule, weights, fixed, &rep1);
        EvolveReport rep2;
        ComplexField v2 = apply_inverse_sqrt(v1, beta, kappa, schedule, weights, fixed, &rep2);

        // separable oracle for the same source
        std::vector<ModalAxis> axes;
        std::vector<std::function<Complex(double)>> factors;
        for (int a = 0; a < dim; ++a) {
            axes.push_back(ModalAxis{basis, -1.0});
            factors.push_back(a == 0 ? std::function<Complex(double)>(modulated_factor)
                                     : std::function<Complex(double)>(envelope_factor));
        }
        ModalExpansion expansion = expand_separable(axes, factors);
        auto [v1_exact, v2_exact] = exact_v1_v2(expansion, grid, kappa);

        ConvergeRow row;
        row.dt0 = dt0;
        row.n_tau = rep1.steps_taken;
        row.nx = nx;
        row.relerr_v1 = relative_error(v1, v1_exact);
        double sigma = 1.0 / (kappa * L);
        row.ub = rep1.final_max_norm / (sigma * std::sqrt(rep1.t_reached));
        row.relerr_v2 = relative_error(v2, v2_exact);
        row.res = relative_residual(v2, g, beta, kappa);
        rows.push_back(row);
    }
    return rows;
}

void write_converge_csv(const std::string& path, const std::vector<ConvergeRow>& rows) {
    std::string buf = "dt0,n_tau,nx,relerr_v1,ub,relerr_v2,res\n";
    char line[200];
    for (const ConvergeRow& r : rows) {
        std::snprintf(line, sizeof line, "%.17g,%zu,%zu,%.17g,%.17g,%.17g,%.17g\n", r.dt0, r.n_tau,
                      r.nx, r.relerr_v1, r.ub, r.relerr_v2, r.res);
        buf += line;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << buf;
    if (!out.flush()) throw IoError("write failure on '" + path + "'");
}

OdeDemoReport run_demo_ode1(const std::vector<std::size_t>& j_values) {
    if (j_values.size() < 2) throw ArgumentError("need at least two resolutions to fit an order");
    OdeDemoReport report;
    std::vector<double> hs, errs;
    for (std::size_t J : j_values) {
        if (J < 4) throw ArgumentError("ode demo needs at least 4 intervals");
        double dx = 1.0 / double(J);
        // leapfrog stability for u_t = i u_xx caps dt at dx^2/4; stay below it
        double dt = dx * dx / 8.0;
        double t_end = 40.0; // e^{-40} is far below the discretization error
        std::size_t N = std::size_t(std::ceil(t_end / dt));

        std::vector<Complex> prev(J + 1), curr(J + 1), next(J + 1), acc(J + 1);
        for (std::size_t j = 0; j <= J; ++j) {
            double x = double(j) * dx;
            prev[j] = (1.0 + Complex(0.0, kPi * kPi)) * std::sin(kPi * x);
        }
        for (std::size_t j = 0; j <= J; ++j) acc[j] = 0.5 * dt * prev[j];

        const Complex idx2(0.0, dt / (dx * dx));
        // forward-time first step, centered in space
        curr[0] = curr[J] = 0.0;
        for (std::size_t j = 1; j < J; ++j)
            curr[j] = prev[j] + idx2 * (prev[j + 1] - 2.0 * prev[j] + prev[j - 1]);
        double w = std::exp(-dt);
        for (std::size_t j = 0; j <= J; ++j) acc[j] += dt * w * curr[j];

        for (std::size_t n = 2; n < N; ++n) {
            next[0] = next[J] = 0.0;
            for (std::size_t j = 1; j < J; ++j)
                next[j] = prev[j] + 2.0 * idx2 * (curr[j + 1] - 2.0 * curr[j] + curr[j - 1]);
            std::swap(prev, curr);
            std::swap(curr, next);
            w = std::exp(-double(n) * dt);
            for (std::size_t j = 0; j <= J; ++j) acc[j] += dt * w * curr[j];
        }

        double err = 0.0;
        for (std::size_t j = 0; j <= J; ++j) {
            double x = double(j) * dx;
            err = std::max(err, std::abs(acc[j] - Complex(std::sin(kPi * x), 0.0)));
        }
        report.rows.push_back({dx, dt, err});
        hs.push_back(dx);
        errs.push_back(err);
    }
    report.fitted_order = fit_order(hs, errs);
    return report;
}

OdeDemoReport run_demo_ode2(double cfl, const std::vector<std::size_t>& j_values) {
    if (!(cfl > 0.0) || cfl > 1.0) throw ArgumentError("upwind demo needs 0 < cfl <= 1");
    if (j_values.size() < 2) throw ArgumentError("need at least two resolutions to fit an order");
    const double x_max = 6.0; // e^{-36} truncation of the Gaussian data
    OdeDemoReport report;
    std::vector<double> hs, errs;
    for (std::size_t J : j_values) {
        double dx = x_max / double(J);
        double dt = cfl * dx;
        double t_end = 40.0;
        std::size_t N = std::size_t(std::ceil(t_end / dt));
        std::size_t m = 2 * J + 1; // nodes -J..J

        auto gfun = [](double x) { return (3.0 - 4.0 * x * x) * std::exp(-x * x); };
        std::vector<double> u(m), w(m), unew(m), wnew(m), acc(m);
        for (std::size_t j = 0; j < m; ++j) {
            double x = -x_max + double(j) * dx;
            u[j] = w[j] = gfun(x);
            acc[j] = 0.25 * dt * (u[j] + w[j]);
        }
        double lam = dt / dx;
        for (std::size_t n = 1; n < N; ++n) {
            unew[m - 1] = 0.0;
            for (std::size_t j = 0; j + 1 < m; ++j) unew[j] = u[j] + lam * (u[j + 1] - u[j]);
            wnew[0] = 0.0;
            for (std::size_t j = 1; j < m; ++j) wnew[j] = w[j] - lam * (w[j] - w[j - 1]);
            u.swap(unew);
            w.swap(wnew);
            double weight = 0.5 * dt * std::exp(-double(n) * dt);
            for (std::size_t j = 0; j < m; ++j) acc[j] += weight * (u[j] + w[j]);
        }
        double err = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            double x = -x_max + double(j) * dx;
            err = std::max(err, std::abs(acc[j] - std::exp(-x * x)));
        }
        report.rows.push_back({dx, dt, err});
        hs.push_back(dx);
        errs.push_back(err);
    }
    report.fitted_order = fit_order(hs, errs);
    return report;
}

LuneburgReport run_demo_luneburg(const std::string& output_path) {
    SolverConfig cfg;
    cfg.dim = 3;
    cfg.lower = {-2.0, -2.0, -2.0};
    cfg.upper = {2.0, 2.0, 3.0};
    cfg.n = {120, 120, 150};
    cfg.kappa = 10.0;
    cfg.dt0 = 5e-3;
    cfg.dtT_ratio = 10.0;
    cfg.stopping.kind = StoppingKind::residual_threshold;
    cfg.stopping.tol = 1e-2;
    cfg.refraction = RefractionKind::luneburg;
    cfg.center = {0.0, 0.0, 0.0};
    cfg.radius = 1.0;
    cfg.incident = IncidentKind::plane;
    cfg.direction = {0.0, 0.0, 1.0};
    cfg.output_path = output_path.empty() ? "luneburg.oftf" : output_path;

    PreparedRun run = prepare(cfg);
    auto [v2, report] = solve_helmholtz(run.g, run.beta, cfg.kappa, run.schedule, run.weights,
                                        cfg.stopping);
    if (!output_path.empty()) write_oftf(output_path, v2);

    IncidentField inc = config_incident(cfg);
    ComplexField vi = evaluate_incident(inc, run.grid);
    double best = -1.0;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < v2.size(); ++i) {
        double m = std::abs(vi.values[i] + v2.values[i]);
        if (m > best) {
            best = m;
            best_idx = i;
        }
    }
    std::array<std::size_t, 3> mi = run.grid.multi_index(best_idx);
    LuneburgReport out;
    out.peak_value = best;
    out.wavelength = 2.0 * kPi / cfg.kappa;
    for (int a = 0; a < 3; ++a)
        out.peak_point[std::size_t(a)] = run.grid.coordinate(a, mi[std::size_t(a)]);
    double dx = out.peak_point[0], dy = out.peak_point[1], dz = out.peak_point[2] - 1.0;
    out.distance_to_focus = std::sqrt(dx * dx + dy * dy + dz * dz);
    out.solve = report;
    return out;
}

} // namespace oft
