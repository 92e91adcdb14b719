#pragma once

#include <cstdint>
#include <vector>

#include "wavekin/collision_general.hpp"
#include "wavekin/dispersion.hpp"
#include "wavekin/grid.hpp"

namespace wavekin {

/// Deterministic pseudo-random smooth state: positive gaussian bumps with
/// log-uniform centers under a <r>^-(s + 1/2) envelope, rescaled to norm R.
DistributionState random_state(GridPtr grid, const NormSpec& spec, double R, std::uint64_t seed,
                               const DispersionRelation& disp);

/// Empirical probe of the trilinear operator norm ratio
///   ||T_j(f,g,h)||_out / (||f||_in ||g||_in ||h||_in)
/// over random sample triples, with a refinement series over grid sizes.
struct ProbeReport {
    int j = 1;
    NormSpec spec_in, spec_out;
    int n_samples = 0;
    std::vector<double> ratios;             // per sample, at the base grid
    double max_ratio = 0.0;                 // at the base grid
    std::vector<int> refinement_sizes;      // grid sizes of the series
    std::vector<double> refinement_ratios;  // max ratio per grid size
};

struct ProbeConfig {
    int n_samples = 50;
    std::vector<int> grid_sizes = {64, 128, 256};
    double r_max = 16.0;
    double R = 1.0;
    std::uint64_t seed = 1;
    QuadSpec quad{24, 12, 16};  // kernel orders for the probe grids
};

ProbeReport probe_bound(int j, const NormSpec& spec_in, const NormSpec& spec_out,
                        const ProbeConfig& cfg, const DispersionRelation& disp);

}  // namespace wavekin
