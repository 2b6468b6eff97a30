#pragma once

#include "kinlab/decomposition.hpp"
#include "kinlab/io.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace kinlab {

// Invalid or inconsistent configuration; the CLI maps it to exit status 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed range of samples, log-spaced when `log` is set.
struct SampleRange {
    double start = 0.0, stop = 0.0;
    int count = 0;
    bool log = false;
    std::vector<double> values() const;
};

struct EnvelopeCell {
    double gamma = 0.0, p = 2.0;
    double d_min = 0.0, d_max = 0.0;
    double t_min = 0.0, t_max = 0.0;  // ignored for gamma >= 0
};

// The six damped-transport cells (gamma, p) in {0, -0.5, -1} x {1, 2}.
std::vector<EnvelopeCell> default_envelope_cells();

struct ScenarioConfig {
    double gamma = 0.0;
    double p = 2.0;
    double alpha = 1.0;
    struct {
        int N = 16;
        double R = 8.0;
    } grid;
    int angularOrder = 16;
    double correction_limit = 0.1;

    struct {
        double L_x = 40.0;
        int M_x = 12;
        std::vector<double> times{0.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0};
        double x_step = 0.25;
        double x_max = 30.0;
        double fit_min = 4.0, fit_max = 16.0;
        bool picard = true;  // W6 / R6 profile columns by integration
        double dt = 0.05;    // integration step for those columns; times must be multiples
    } slab;
    struct {
        double eta_max = 1.0;
        int eta_count = 24;
        SampleRange times{20.0, 200.0, 31, true};
        double fit_min = 20.0, fit_max = 200.0;
    } radial;
    struct {
        double T = 0.5;
        double dt = 0.005;
        int sample_stride = 1;
    } time;
    double delta = 0.5;
    struct {
        double epsilon = 1e-3;
        double delta_w = 0.05;
        double M = 10.0;
        int samples = 10000;
        std::vector<double> x_values{0.0, 50.0};
        std::vector<double> epsilons{1e-3};
    } weights;
    struct {
        std::string spatial = "bump";  // gaussian | bump
        double sigma = 0.35;
        // chi0 | maxwellian-root | micro | acoustic | exp-weight | custom-array
        std::string velocity = "chi0";
        std::string velocity_file;  // custom-array: raw float64 in node order
    } initial;

    struct {
        double eta_fit = 0.2;
        int eta_count = 8;
        std::vector<double> gap_etas{0.6, 1.0, 2.0, 5.0, 10.0};
    } spectrum;
    struct {
        double eta = 0.1;
        double t_min = 0.05, t_max = 0.5;
    } picard;
    struct {
        double eta_max = 2.0;
        int eta_count = 8;
        double T = 20.0;
        double dt = 0.05;
        double t_min = 0.1;
    } remainder;
    struct {
        int fine_N = 32;
        double fine_R = 8.0;
        SampleRange distances{1.0, 4000.0, 80, true};
        SampleRange times{0.5, 600.0, 80, true};
        std::vector<EnvelopeCell> cells = default_envelope_cells();
    } envelope;
    struct {
        double null_eigen = 1e-10;
        double identity_defect = 1e-10;
        double picard_slope = 0.3;
        double sound_speed_rel = 0.03;
        double dispersion_rel = 0.02;
        double dispersion_abs = 0.02;
        double radial_power = 0.15;
        double stretched_beta = 0.15;
        double exponent = 0.05;
        double row_sum_exponent = 0.3;
        double row_sum_min = 3.0, row_sum_max = 7.0;
        double epsilon_ratio_rel = 0.2;
        double rho_slack = 1e-12;
    } gates;

    std::string output_dir = "kinlab_out";
    std::uint64_t seed = 20240601;

    // Directory of the config file; relative file references resolve against it.
    std::filesystem::path base_dir;
};

// Every key with its value; the defaults dump is to_json(ScenarioConfig{}).
json to_json(const ScenarioConfig& c);
// Missing keys keep their defaults; unknown keys are errors.
ScenarioConfig from_json(const json& j);
ScenarioConfig load_config(const std::filesystem::path& path);

// Throws ConfigError naming the first violated constraint.
void validate(const ScenarioConfig& c);

// Hash of the resolved config without output_dir, hex encoded.
std::string config_hash(const ScenarioConfig& c);

ProfileSpec spatial_profile(const ScenarioConfig& c);

std::filesystem::path resolve(const ScenarioConfig& c, const std::string& file);

// Initial velocity profile psi on the grid.
CVec initial_velocity(const ScenarioConfig& c, const VelocityGrid& grid, const InvariantBasis& basis);

}  // namespace kinlab
