#include "oft/oft.h"

#include <cstring>
#include <string>
#include <vector>

#include "oft/config.hpp"
#include "oft/eigenbasis.hpp"
#include "oft/errors.hpp"
#include "oft/runner.hpp"

struct oft_config {
    oft::SolverConfig cfg;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& what) {
    g_last_error = what;
    return code;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return OFT_OK;
    } catch (const oft::ConfigError& e) {
        return fail(OFT_ERR_CONFIG, e.what());
    } catch (const oft::SolverError& e) {
        return fail(OFT_ERR_SOLVER, e.what());
    } catch (const oft::IoError& e) {
        return fail(OFT_ERR_IO, e.what());
    } catch (const oft::ArgumentError& e) {
        return fail(OFT_ERR_ARGUMENT, e.what());
    } catch (const oft::StateError& e) {
        return fail(OFT_ERR_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(OFT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(OFT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(OFT_ERR_INTERNAL, "unknown failure");
    }
}

int require(bool ok, const char* what) {
    return ok ? OFT_OK : fail(OFT_ERR_ARGUMENT, what);
}

// snprintf-style copy-out of a std::string.
void copy_out(const std::string& s, char* buf, size_t cap, size_t* needed) {
    if (needed) *needed = s.size();
    if (!buf || cap == 0) return;
    size_t n = s.size() < cap - 1 ? s.size() : cap - 1;
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
}

oft_run_stats to_stats(const oft::RunArtifacts& art) {
    oft_run_stats s{};
    s.rel_residual = art.report.rel_residual;
    s.ub_estimate = art.report.ub_estimate;
    s.steps_pass1 = art.report.steps_pass1;
    s.steps_pass2 = art.report.steps_pass2;
    s.wall_time = art.report.wall_time;
    s.max_abs_field = art.max_abs_field;
    return s;
}

} // namespace

extern "C" {

const char* oft_last_error(void) { return g_last_error.c_str(); }

const char* oft_version(void) { return "0.1.0"; }

int oft_config_load(const char* path, oft_config** out) {
    if (int rc = require(path && out, "oft_config_load: null argument")) return rc;
    return guarded([&] {
        oft::SolverConfig cfg = oft::load_config(path);
        oft::validate_config(cfg);
        *out = new oft_config{std::move(cfg)};
    });
}

int oft_config_parse(const char* text, oft_config** out) {
    if (int rc = require(text && out, "oft_config_parse: null argument")) return rc;
    return guarded([&] {
        oft::SolverConfig cfg = oft::parse_config(text);
        oft::validate_config(cfg);
        *out = new oft_config{std::move(cfg)};
    });
}

void oft_config_free(oft_config* cfg) { delete cfg; }

int oft_config_serialize(const oft_config* cfg, char* buf, size_t cap, size_t* needed) {
    if (int rc = require(cfg != nullptr, "oft_config_serialize: null config")) return rc;
    return guarded([&] { copy_out(oft::serialize_config(cfg->cfg), buf, cap, needed); });
}

int oft_config_output_path(const oft_config* cfg, char* buf, size_t cap, size_t* needed) {
    if (int rc = require(cfg != nullptr, "oft_config_output_path: null config")) return rc;
    copy_out(cfg->cfg.output_path, buf, cap, needed);
    return OFT_OK;
}

int oft_solve(const oft_config* cfg, oft_run_stats* stats) {
    if (int rc = require(cfg != nullptr, "oft_solve: null config")) return rc;
    return guarded([&] {
        oft::RunArtifacts art = oft::run_solve(cfg->cfg);
        if (stats) *stats = to_stats(art);
    });
}

int oft_apply_sqrt(const oft_config* cfg, oft_run_stats* stats) {
    if (int rc = require(cfg != nullptr, "oft_apply_sqrt: null config")) return rc;
    return guarded([&] {
        oft::RunArtifacts art = oft::run_apply_sqrt(cfg->cfg);
        if (stats) *stats = to_stats(art);
    });
}

int oft_converge(int dim, unsigned long long row_begin, unsigned long long row_end,
                 oft_converge_row* rows, size_t cap, size_t* produced) {
    return guarded([&] {
        std::vector<oft::ConvergeRow> got = oft::run_converge(dim, row_begin, row_end);
        size_t n = got.size() < cap ? got.size() : cap;
        for (size_t i = 0; rows && i < n; ++i) {
            rows[i].dt0 = got[i].dt0;
            rows[i].n_tau = got[i].n_tau;
            rows[i].nx = got[i].nx;
            rows[i].relerr_v1 = got[i].relerr_v1;
            rows[i].ub = got[i].ub;
            rows[i].relerr_v2 = got[i].relerr_v2;
            rows[i].res = got[i].res;
        }
        if (produced) *produced = got.size();
    });
}

int oft_converge_csv(const char* path, const oft_converge_row* rows, size_t count) {
    if (int rc = require(path && (rows || count == 0), "oft_converge_csv: null argument"))
        return rc;
    return guarded([&] {
        std::vector<oft::ConvergeRow> native(count);
        for (size_t i = 0; i < count; ++i) {
            native[i].dt0 = rows[i].dt0;
            native[i].n_tau = rows[i].n_tau;
            native[i].nx = rows[i].nx;
            native[i].relerr_v1 = rows[i].relerr_v1;
            native[i].ub = rows[i].ub;
            native[i].relerr_v2 = rows[i].relerr_v2;
            native[i].res = rows[i].res;
        }
        oft::write_converge_csv(path, native);
    });
}

int oft_eigenvalues(double alpha, double length, size_t count, double* re, double* im,
                    double* residual) {
    return guarded([&] {
        oft::EigenBasis basis = oft::find_eigenvalues(alpha, length, count);
        for (size_t n = 0; n < count; ++n) {
            if (re) re[n] = basis.lambdas[n].real();
            if (im) im[n] = basis.lambdas[n].imag();
            if (residual)
                residual[n] = std::abs(oft::characteristic(alpha, length, basis.lambdas[n]));
        }
    });
}

int oft_demo_ode1(const size_t* sizes, size_t n_sizes, oft_demo_row* rows, double* fitted_order) {
    if (int rc = require(rows != nullptr, "oft_demo_ode1: null rows")) return rc;
    return guarded([&] {
        oft::OdeDemoReport rep =
            sizes ? oft::run_demo_ode1(std::vector<std::size_t>(sizes, sizes + n_sizes))
                  : oft::run_demo_ode1();
        for (size_t i = 0; i < rep.rows.size(); ++i)
            rows[i] = {rep.rows[i].dx, rep.rows[i].dt, rep.rows[i].max_err};
        if (fitted_order) *fitted_order = rep.fitted_order;
    });
}

int oft_demo_ode2(double cfl, const size_t* sizes, size_t n_sizes, oft_demo_row* rows,
                  double* fitted_order) {
    if (int rc = require(rows != nullptr, "oft_demo_ode2: null rows")) return rc;
    return guarded([&] {
        oft::OdeDemoReport rep =
            sizes ? oft::run_demo_ode2(cfl, std::vector<std::size_t>(sizes, sizes + n_sizes))
                  : oft::run_demo_ode2(cfl);
        for (size_t i = 0; i < rep.rows.size(); ++i)
            rows[i] = {rep.rows[i].dx, rep.rows[i].dt, rep.rows[i].max_err};
        if (fitted_order) *fitted_order = rep.fitted_order;
    });
}

int oft_demo_luneburg(const char* output_path, oft_luneburg_report* out) {
    if (int rc = require(out != nullptr, "oft_demo_luneburg: null report")) return rc;
    return guarded([&] {
        oft::LuneburgReport rep = oft::run_demo_luneburg(output_path ? output_path : "");
        *out = oft_luneburg_report{};
        for (int a = 0; a < 3; ++a) out->peak_point[a] = rep.peak_point[size_t(a)];
        out->peak_value = rep.peak_value;
        out->wavelength = rep.wavelength;
        out->distance_to_focus = rep.distance_to_focus;
        out->stats.rel_residual = rep.solve.rel_residual;
        out->stats.ub_estimate = rep.solve.ub_estimate;
        out->stats.steps_pass1 = rep.solve.steps_pass1;
        out->stats.steps_pass2 = rep.solve.steps_pass2;
        out->stats.wall_time = rep.solve.wall_time;
        out->stats.max_abs_field = 0.0;
    });
}

} // extern "C"
