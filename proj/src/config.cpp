#include "oft/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "oft/errors.hpp"

namespace oft {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Entry {
    std::string value;
    int line = 0;
    bool used = false;
};

using Section = std::map<std::string, Entry>;

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("line " + std::to_string(line) + ": " + msg);
}

double parse_double(const Entry& e, const std::string& key) {
    const char* s = e.value.c_str();
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end == s || *end != '\0') fail(e.line, "key '" + key + "' needs a number, got '" + e.value + "'");
    return v;
}

std::vector<double> parse_doubles(const Entry& e, const std::string& key, std::size_t want) {
    std::istringstream in(e.value);
    std::vector<double> out;
    std::string tok;
    while (in >> tok) {
        char* end = nullptr;
        double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0')
            fail(e.line, "key '" + key + "' needs numbers, got '" + tok + "'");
        out.push_back(v);
    }
    if (out.size() != want)
        fail(e.line, "key '" + key + "' needs " + std::to_string(want) + " values, got " +
                         std::to_string(out.size()));
    return out;
}

class Doc {
  public:
    explicit Doc(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        int line = 0;
        std::string section;
        while (std::getline(in, raw)) {
            ++line;
            std::string s = raw;
            std::size_t hash = s.find('#');
            if (hash != std::string::npos) s = s.substr(0, hash);
            s = trim(s);
            if (s.empty()) continue;
            if (s.front() == '[') {
                if (s.back() != ']') fail(line, "unterminated section header");
                section = trim(s.substr(1, s.size() - 2));
                if (!known_section(section)) fail(line, "unknown section [" + section + "]");
                sections_[section]; // an empty section is fine
                continue;
            }
            std::size_t eq = s.find('=');
            if (eq == std::string::npos) fail(line, "expected key = value");
            if (section.empty()) fail(line, "key outside any section");
            std::string key = trim(s.substr(0, eq));
            std::string value = trim(s.substr(eq + 1));
            if (key.empty()) fail(line, "empty key");
            auto [it, fresh] = sections_[section].emplace(key, Entry{value, line, false});
            if (!fresh) fail(line, "duplicate key '" + key + "' in [" + section + "]");
        }
    }

    const Entry* find(const std::string& section, const std::string& key) {
        auto s = sections_.find(section);
        if (s == sections_.end()) return nullptr;
        auto k = s->second.find(key);
        if (k == s->second.end()) return nullptr;
        k->second.used = true;
        return &k->second;
    }

    const Entry& need(const std::string& section, const std::string& key) {
        const Entry* e = find(section, key);
        if (!e) throw ConfigError("missing required key '" + key + "' in [" + section + "]");
        return *e;
    }

    void reject_unused() const {
        for (const auto& [sec, entries] : sections_)
            for (const auto& [key, e] : entries)
                if (!e.used) fail(e.line, "unknown key '" + key + "' in [" + sec + "]");
    }

  private:
    static bool known_section(const std::string& s) {
        return s == "domain" || s == "solver" || s == "refraction" || s == "incident" ||
               s == "output";
    }

    std::map<std::string, Section> sections_;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_vec(const double* v, int dim) {
    std::string out;
    for (int a = 0; a < dim; ++a) {
        if (a) out += ' ';
        out += fmt(v[a]);
    }
    return out;
}

} // namespace

SolverConfig parse_config(const std::string& text) {
    Doc doc(text);
    SolverConfig cfg;

    const Entry& dim_e = doc.need("domain", "dim");
    double dim_v = parse_double(dim_e, "dim");
    cfg.dim = int(dim_v);
    if (cfg.dim != dim_v || cfg.dim < 1 || cfg.dim > 3)
        fail(dim_e.line, "dim must be 1, 2, or 3");
    std::size_t d = std::size_t(cfg.dim);

    std::vector<double> lo = parse_doubles(doc.need("domain", "lower"), "lower", d);
    std::vector<double> hi = parse_doubles(doc.need("domain", "upper"), "upper", d);
    const Entry& n_e = doc.need("domain", "n");
    std::vector<double> nv = parse_doubles(n_e, "n", d);
    for (std::size_t a = 0; a < d; ++a) {
        cfg.lower[a] = lo[a];
        cfg.upper[a] = hi[a];
        if (nv[a] < 1 || nv[a] != double(std::size_t(nv[a])))
            fail(n_e.line, "n must hold positive integers");
        cfg.n[a] = std::size_t(nv[a]);
    }

    cfg.kappa = parse_double(doc.need("solver", "kappa"), "kappa");
    cfg.dt0 = parse_double(doc.need("solver", "dt0"), "dt0");
    if (const Entry* e = doc.find("solver", "dtT_ratio")) cfg.dtT_ratio = parse_double(*e, "dtT_ratio");
    if (const Entry* e = doc.find("solver", "t_final")) cfg.t_final = parse_double(*e, "t_final");
    if (const Entry* e = doc.find("solver", "stopping")) {
        if (e->value == "fixed") cfg.stopping.kind = StoppingKind::fixed_schedule;
        else if (e->value == "ub") cfg.stopping.kind = StoppingKind::ub_threshold;
        else if (e->value == "residual") cfg.stopping.kind = StoppingKind::residual_threshold;
        else fail(e->line, "stopping must be fixed, ub, or residual");
    }
    if (const Entry* e = doc.find("solver", "tol")) cfg.stopping.tol = parse_double(*e, "tol");

    if (const Entry* e = doc.find("refraction", "kind")) {
        if (e->value == "uniform") cfg.refraction = RefractionKind::uniform;
        else if (e->value == "gaussian") cfg.refraction = RefractionKind::gaussian;
        else if (e->value == "luneburg") cfg.refraction = RefractionKind::luneburg;
        else if (e->value == "raster") cfg.refraction = RefractionKind::raster;
        else fail(e->line, "refraction kind must be uniform, gaussian, luneburg, or raster");
    }
    if (const Entry* e = doc.find("refraction", "beta0")) cfg.beta0 = parse_double(*e, "beta0");
    if (const Entry* e = doc.find("refraction", "center")) {
        std::vector<double> c = parse_doubles(*e, "center", d);
        for (std::size_t a = 0; a < d; ++a) cfg.center[a] = c[a];
    }
    if (const Entry* e = doc.find("refraction", "width")) cfg.width = parse_double(*e, "width");
    if (const Entry* e = doc.find("refraction", "amplitude")) cfg.amplitude = parse_double(*e, "amplitude");
    if (const Entry* e = doc.find("refraction", "radius")) cfg.radius = parse_double(*e, "radius");
    if (const Entry* e = doc.find("refraction", "path")) cfg.raster_path = e->value;

    if (const Entry* e = doc.find("incident", "kind")) {
        if (e->value == "plane") cfg.incident = IncidentKind::plane;
        else if (e->value == "image_pair") cfg.incident = IncidentKind::image_pair;
        else fail(e->line, "incident kind must be plane or image_pair");
    }
    if (const Entry* e = doc.find("incident", "direction")) {
        std::vector<double> v = parse_doubles(*e, "direction", d);
        cfg.direction = {0.0, 0.0, 0.0};
        for (std::size_t a = 0; a < d; ++a) cfg.direction[a] = v[a];
    } else if (cfg.dim > 0) {
        cfg.direction = {1.0, 0.0, 0.0};
    }
    if (const Entry* e = doc.find("incident", "k_vector")) {
        std::vector<double> v = parse_doubles(*e, "k_vector", 3);
        for (std::size_t a = 0; a < 3; ++a) cfg.k_vector[a] = v[a];
    }

    if (const Entry* e = doc.find("output", "path")) cfg.output_path = e->value;
    if (const Entry* e = doc.find("output", "format")) {
        if (e->value == "oftf") cfg.format = OutputFormat::oftf;
        else if (e->value == "csv") cfg.format = OutputFormat::csv;
        else fail(e->line, "output format must be oftf or csv");
    }

    doc.reject_unused();
    validate_config(cfg);
    return cfg;
}

SolverConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const SolverConfig& cfg) {
    std::string out;
    out += "[domain]\n";
    out += "dim = " + std::to_string(cfg.dim) + "\n";
    out += "lower = " + fmt_vec(cfg.lower.data(), cfg.dim) + "\n";
    out += "upper = " + fmt_vec(cfg.upper.data(), cfg.dim) + "\n";
    out += "n =";
    for (int a = 0; a < cfg.dim; ++a) out += " " + std::to_string(cfg.n[std::size_t(a)]);
    out += "\n\n[solver]\n";
    out += "kappa = " + fmt(cfg.kappa) + "\n";
    out += "dt0 = " + fmt(cfg.dt0) + "\n";
    out += "dtT_ratio = " + fmt(cfg.dtT_ratio) + "\n";
    if (cfg.t_final > 0.0) out += "t_final = " + fmt(cfg.t_final) + "\n";
    switch (cfg.stopping.kind) {
        case StoppingKind::fixed_schedule: out += "stopping = fixed\n"; break;
        case StoppingKind::ub_threshold: out += "stopping = ub\n"; break;
        case StoppingKind::residual_threshold: out += "stopping = residual\n"; break;
    }
    if (cfg.stopping.kind != StoppingKind::fixed_schedule)
        out += "tol = " + fmt(cfg.stopping.tol) + "\n";

    out += "\n[refraction]\n";
    switch (cfg.refraction) {
        case RefractionKind::uniform:
            out += "kind = uniform\n";
            out += "beta0 = " + fmt(cfg.beta0) + "\n";
            break;
        case RefractionKind::gaussian:
            out += "kind = gaussian\n";
            out += "center = " + fmt_vec(cfg.center.data(), cfg.dim) + "\n";
            out += "width = " + fmt(cfg.width) + "\n";
            out += "amplitude = " + fmt(cfg.amplitude) + "\n";
            break;
        case RefractionKind::luneburg:
            out += "kind = luneburg\n";
            out += "center = " + fmt_vec(cfg.center.data(), cfg.dim) + "\n";
            out += "radius = " + fmt(cfg.radius) + "\n";
            break;
        case RefractionKind::raster:
            out += "kind = raster\n";
            out += "path = " + cfg.raster_path + "\n";
            out += "amplitude = " + fmt(cfg.amplitude) + "\n";
            break;
    }

    out += "\n[incident]\n";
    if (cfg.incident == IncidentKind::plane) {
        out += "kind = plane\n";
        out += "direction = " + fmt_vec(cfg.direction.data(), cfg.dim) + "\n";
    } else {
        out += "kind = image_pair\n";
        out += "k_vector = " + fmt_vec(cfg.k_vector.data(), 3) + "\n";
    }

    out += "\n[output]\n";
    out += "path = " + cfg.output_path + "\n";
    out += cfg.format == OutputFormat::oftf ? "format = oftf\n" : "format = csv\n";
    return out;
}

void validate_config(const SolverConfig& cfg) {
    auto bad = [](const std::string& key, const std::string& why) {
        throw ConfigError("config key '" + key + "' " + why);
    };
    if (cfg.dim < 1 || cfg.dim > 3) bad("dim", "must be 1, 2, or 3");
    for (int a = 0; a < cfg.dim; ++a) {
        std::size_t ua = std::size_t(a);
        if (!(cfg.lower[ua] < cfg.upper[ua])) bad("lower/upper", "must satisfy lower < upper on every axis");
        if (cfg.n[ua] < 3) bad("n", "needs at least 3 points per axis for the boundary stencils");
    }
    if (!(cfg.kappa > 0.0)) bad("kappa", "must be positive");
    if (!(cfg.dt0 > 0.0)) bad("dt0", "must be positive");
    if (!(cfg.dtT_ratio > 1.0)) bad("dtT_ratio", "must exceed 1 (final step larger than the first)");
    if (cfg.t_final < 0.0) bad("t_final", "must be positive (or omitted to derive kappa * longest edge)");
    if (cfg.stopping.kind != StoppingKind::fixed_schedule && !(cfg.stopping.tol > 0.0))
        bad("tol", "must be positive for ub or residual stopping");

    switch (cfg.refraction) {
        case RefractionKind::uniform:
            if (!(cfg.beta0 > 0.0)) bad("beta0", "must be positive");
            break;
        case RefractionKind::gaussian:
            if (!(cfg.width > 0.0)) bad("width", "must be positive");
            if (!(1.0 + cfg.amplitude > 0.0)) bad("amplitude", "must keep beta positive");
            break;
        case RefractionKind::luneburg:
            if (!(cfg.radius > 0.0)) bad("radius", "must be positive");
            break;
        case RefractionKind::raster:
            if (cfg.raster_path.empty()) bad("path", "is required for raster refraction");
            if (cfg.amplitude < 0.0) bad("amplitude", "must be nonnegative");
            if (cfg.dim != 2) bad("kind", "raster refraction needs dim = 2");
            break;
    }

    if (cfg.incident == IncidentKind::plane) {
        double n = 0.0;
        for (int a = 0; a < cfg.dim; ++a) n += cfg.direction[std::size_t(a)] * cfg.direction[std::size_t(a)];
        if (!(n > 0.0)) bad("direction", "must be nonzero");
    } else {
        if (cfg.dim != 3) bad("kind", "image_pair incident field needs dim = 3");
        double n = std::sqrt(cfg.k_vector[0] * cfg.k_vector[0] + cfg.k_vector[1] * cfg.k_vector[1] +
                             cfg.k_vector[2] * cfg.k_vector[2]);
        if (std::abs(n - cfg.kappa) > 1e-12 * cfg.kappa)
            bad("k_vector", "length must equal kappa");
    }

    if (cfg.format == OutputFormat::csv && cfg.dim > 2)
        bad("format", "csv output covers dim 1 and 2 only");
    if (cfg.output_path.empty()) bad("path", "must not be empty");
}

Grid config_grid(const SolverConfig& cfg) {
    Grid g;
    g.dim = cfg.dim;
    for (int a = 0; a < cfg.dim; ++a) {
        std::size_t ua = std::size_t(a);
        g.lower[ua] = cfg.lower[ua];
        g.upper[ua] = cfg.upper[ua];
        g.n[ua] = cfg.n[ua];
    }
    return g;
}

double config_t_final(const SolverConfig& cfg) {
    if (cfg.t_final > 0.0) return cfg.t_final;
    Grid g = config_grid(cfg);
    return cfg.kappa * g.longest_edge();
}

} // namespace oft
