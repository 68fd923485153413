#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "oft/grid.hpp"
#include "oft/helmholtz.hpp"
#include "oft/paraxial.hpp"

namespace oft {

enum class RefractionKind { uniform, gaussian, luneburg, raster };
enum class OutputFormat { oftf, csv };

/// Flat key = value run description, grouped in [domain] [solver] [refraction]
/// [incident] [output] sections. parse/serialize round-trip is canonical.
struct SolverConfig {
    // [domain]
    int dim = 0;
    std::array<double, 3> lower{0.0, 0.0, 0.0};
    std::array<double, 3> upper{0.0, 0.0, 0.0};
    std::array<std::size_t, 3> n{1, 1, 1};

    // [solver]
    double kappa = 0.0;
    double dt0 = 0.0;
    double dtT_ratio = 10.0;
    double t_final = 0.0; // 0 = derive kappa * longest edge
    StoppingRule stopping;

    // [refraction]
    RefractionKind refraction = RefractionKind::uniform;
    double beta0 = 1.0;                      // uniform
    std::array<double, 3> center{0.0, 0.0, 0.0}; // gaussian / luneburg
    double width = 0.0;                      // gaussian
    double amplitude = 0.0;                  // gaussian / raster
    double radius = 1.0;                     // luneburg
    std::string raster_path;                 // raster

    // [incident]
    IncidentKind incident = IncidentKind::plane;
    std::array<double, 3> direction{1.0, 0.0, 0.0}; // plane
    std::array<double, 3> k_vector{0.0, 0.0, 0.0};  // image_pair

    // [output]
    std::string output_path = "field.oftf";
    OutputFormat format = OutputFormat::oftf;
};

SolverConfig parse_config(const std::string& text);
SolverConfig load_config(const std::string& path);
std::string serialize_config(const SolverConfig& cfg);

/// Field-by-field checks; throws ConfigError naming the offending key.
void validate_config(const SolverConfig& cfg);

Grid config_grid(const SolverConfig& cfg);
double config_t_final(const SolverConfig& cfg);

} // namespace oft
