#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wavekin/bound_probe.hpp"
#include "wavekin/dispersion.hpp"
#include "wavekin/grid.hpp"
#include "wavekin/stepper.hpp"

namespace wavekin {

/// One batch run: flat key=value config with dotted sections plus the
/// command-line overrides. Unknown keys are rejected with their line number.
struct RunConfig {
    std::string subcommand;

    DispersionKind dispersion_kind = DispersionKind::schrodinger;
    std::vector<double> dispersion_params;

    GridScheme grid_scheme = GridScheme::gauss_composite;
    int grid_n = 128;
    double grid_r_max = 16.0;

    SampleFamily init_family = SampleFamily::gaussian;
    std::vector<double> init_params = {1.0};

    SimulationConfig sim;
    QuadSpec quad;
    int quad_1d = 128;          // 1D cross-check orders
    bool use_kernel = true;
    std::string kernel_cache;   // optional sidecar path

    int probe_samples = 50;
    std::vector<int> probe_grids = {64, 128, 256};
    double probe_s_sup = 2.5;
    double probe_gamma_sup = 0.25;
    double probe_s_l2 = 0.75;

    double scaling_lambda = 2.0;
    std::vector<double> scaling_times = {0.025, 0.05, 0.1};

    std::uint64_t seed = 12345;
    std::string out_dir = "out";
    int workers = 0;  // 0 = hardware concurrency

    DispersionRelation make_dispersion_relation() const;
    GridPtr make_grid_ptr() const;
    DistributionState make_initial_state(const DispersionRelation& disp) const;
};

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& origin = "<string>");

/// Hash of everything that determines results (excludes out_dir and workers).
std::string config_hash(const RunConfig& cfg);

}  // namespace wavekin
