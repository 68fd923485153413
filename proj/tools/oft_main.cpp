// Command-line front end; everything goes through the C API in oft/oft.h.
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oft/oft.h"

namespace {

// 0 success, 2 config/usage, 3 solver failure, 4 I/O.
int to_exit(int rc) {
    switch (rc) {
        case OFT_OK:
            return 0;
        case OFT_ERR_CONFIG:
        case OFT_ERR_ARGUMENT:
            return 2;
        case OFT_ERR_IO:
            return 4;
        default:
            return 3;
    }
}

int report_failure(int rc) {
    std::fprintf(stderr, "error: %s\n", oft_last_error());
    return to_exit(rc);
}

void print_stats(const oft_run_stats& s, bool two_pass) {
    if (two_pass)
        std::printf("steps:        %llu + %llu\n", s.steps_pass1, s.steps_pass2);
    else
        std::printf("steps:        %llu\n", s.steps_pass1);
    if (two_pass) std::printf("residual:     %.3e\n", s.rel_residual);
    std::printf("ub estimate:  %.3e\n", s.ub_estimate);
    std::printf("max |field|:  %.6e\n", s.max_abs_field);
    if (s.wall_time > 0.0) std::printf("wall time:    %.2f s\n", s.wall_time);
}

int run_field_command(const std::string& config_path, bool two_pass) {
    oft_config* cfg = nullptr;
    int rc = oft_config_load(config_path.c_str(), &cfg);
    if (rc != OFT_OK) return report_failure(rc);
    oft_run_stats stats{};
    rc = two_pass ? oft_solve(cfg, &stats) : oft_apply_sqrt(cfg, &stats);
    if (rc == OFT_OK) {
        print_stats(stats, two_pass);
        char path[4096];
        if (oft_config_output_path(cfg, path, sizeof path, nullptr) == OFT_OK)
            std::printf("wrote %s\n", path);
    }
    oft_config_free(cfg);
    return rc == OFT_OK ? 0 : report_failure(rc);
}

bool parse_row_range(const std::string& text, unsigned long long& lo, unsigned long long& hi) {
    std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoull(text);
        } else {
            lo = std::stoull(text.substr(0, dots));
            hi = std::stoull(text.substr(dots + 2));
        }
    } catch (...) {
        return false;
    }
    return lo >= 1 && lo <= hi;
}

int run_converge_command(int dim, const std::string& rows_text, const std::string& csv_path) {
    unsigned long long lo = 0, hi = 0;
    if (!parse_row_range(rows_text, lo, hi)) {
        std::fprintf(stderr, "error: --rows wants 'k' or 'k..m' with 1 <= k <= m\n");
        return 2;
    }
    std::vector<oft_converge_row> rows(hi - lo + 1);
    size_t produced = 0;
    int rc = oft_converge(dim, lo, hi, rows.data(), rows.size(), &produced);
    if (rc != OFT_OK) return report_failure(rc);
    rows.resize(produced);

    std::printf("%-10s %-9s %-6s %-12s %-12s %-12s %-12s\n", "dt0", "n_tau", "nx", "relerr_v1",
                "ub", "relerr_v2", "res");
    for (const auto& r : rows)
        std::printf("%-10.2e %-9llu %-6llu %-12.4e %-12.4e %-12.4e %-12.4e\n", r.dt0, r.n_tau,
                    r.nx, r.relerr_v1, r.ub, r.relerr_v2, r.res);
    if (!csv_path.empty()) {
        rc = oft_converge_csv(csv_path.c_str(), rows.data(), rows.size());
        if (rc != OFT_OK) return report_failure(rc);
        std::printf("wrote %s\n", csv_path.c_str());
    }
    return 0;
}

int run_eigen_command(double alpha, double length, size_t count) {
    std::vector<double> re(count), im(count), absf(count);
    int rc = oft_eigenvalues(alpha, length, count, re.data(), im.data(), absf.data());
    if (rc != OFT_OK) return report_failure(rc);
    std::printf("n,re,im,abs_f\n");
    for (size_t n = 0; n < count; ++n)
        std::printf("%zu,%.17g,%.17g,%.3e\n", n + 1, re[n], im[n], absf[n]);
    return 0;
}

int run_ode_demo(bool first, double cfl, const std::vector<size_t>& sizes) {
    std::vector<oft_demo_row> rows(sizes.empty() ? 3 : sizes.size());
    const size_t* sz = sizes.empty() ? nullptr : sizes.data();
    size_t n_sz = sizes.size();
    double order = 0.0;
    int rc = first ? oft_demo_ode1(sz, n_sz, rows.data(), &order)
                   : oft_demo_ode2(cfl, sz, n_sz, rows.data(), &order);
    if (rc != OFT_OK) return report_failure(rc);
    std::printf("%-12s %-12s %-12s\n", "dx", "dt", "max_err");
    for (const auto& r : rows) std::printf("%-12.4e %-12.4e %-12.4e\n", r.dx, r.dt, r.max_err);
    std::printf("fitted order: %.2f\n", order);
    return 0;
}

int run_luneburg_demo(const std::string& output_path) {
    oft_luneburg_report rep{};
    int rc = oft_demo_luneburg(output_path.empty() ? nullptr : output_path.c_str(), &rep);
    if (rc != OFT_OK) return report_failure(rc);
    std::printf("peak |v_total|:    %.4f at (%.4f, %.4f, %.4f)\n", rep.peak_value,
                rep.peak_point[0], rep.peak_point[1], rep.peak_point[2]);
    std::printf("wavelength:        %.4f\n", rep.wavelength);
    std::printf("distance to focus: %.4f\n", rep.distance_to_focus);
    std::printf("residual:          %.3e\n", rep.stats.rel_residual);
    std::printf("steps:             %llu + %llu\n", rep.stats.steps_pass1, rep.stats.steps_pass2);
    std::printf("wall time:         %.1f s\n", rep.stats.wall_time);
    if (!output_path.empty()) std::printf("wrote %s\n", output_path.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Helmholtz solver built on operator Fourier transforms"};
    app.require_subcommand(1);

    std::string config_path;
    CLI::App* solve = app.add_subcommand("solve", "two-pass scattered-field solve");
    solve->add_option("config", config_path, "run configuration file")->required();

    std::string sqrt_config_path;
    CLI::App* apply = app.add_subcommand("apply-sqrt", "single inverse-square-root pass");
    apply->add_option("config", sqrt_config_path, "run configuration file")->required();

    int dim = 1;
    std::string rows_text = "1..3";
    std::string csv_path = "converge.csv";
    CLI::App* conv = app.add_subcommand("converge", "reference convergence sweep");
    conv->add_option("--dim", dim, "dimension")->check(CLI::Range(1, 3))->required();
    conv->add_option("--rows", rows_text, "row range k..m (1-based)");
    conv->add_option("--output", csv_path, "CSV path ('' to skip)");

    double alpha = 10.0, length = 2.0;
    size_t count = 20;
    CLI::App* eig = app.add_subcommand("eigen", "impedance eigenvalue table");
    eig->add_option("--alpha", alpha, "boundary impedance parameter")->required();
    eig->add_option("--length", length, "interval length")->required();
    eig->add_option("--count", count, "number of eigenvalues")->required();

    CLI::App* demo = app.add_subcommand("demo", "built-in reference problems");
    demo->require_subcommand(1);
    std::vector<size_t> sizes;
    CLI::App* ode1 = demo->add_subcommand("ode1", "resolvent of 1 - d2/dx2 via leapfrog");
    ode1->add_option("--sizes", sizes, "interval counts for the refinement ladder");
    double cfl = 1.0;
    CLI::App* ode2 = demo->add_subcommand("ode2", "resolvent of 1 - d2/dx2 via upwind pair");
    ode2->add_option("--sizes", sizes, "interval counts for the refinement ladder");
    ode2->add_option("--cfl", cfl, "Courant number in (0, 1]");
    std::string lune_out;
    CLI::App* lune = demo->add_subcommand("luneburg", "desk-scale Luneburg lens run");
    lune->add_option("--output", lune_out, "write the scattered field here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (solve->parsed()) return run_field_command(config_path, true);
    if (apply->parsed()) return run_field_command(sqrt_config_path, false);
    if (conv->parsed()) return run_converge_command(dim, rows_text, csv_path);
    if (eig->parsed()) return run_eigen_command(alpha, length, count);
    if (demo->parsed()) {
        if (ode1->parsed()) return run_ode_demo(true, cfl, sizes);
        if (ode2->parsed()) return run_ode_demo(false, cfl, sizes);
        if (lune->parsed()) return run_luneburg_demo(lune_out);
    }
    return 2;
}
