#include "wavekin/bound_probe.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace wavekin {

namespace {

struct Bump {
    double center, width, coeff;
};

// Bump parameters depend only on the seed, so the same sample is the same
// function on every grid of a refinement series.
std::vector<Bump> sample_bumps(std::uint64_t seed, double r_max) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> logc(std::log(0.05), std::log(r_max));
    std::uniform_real_distribution<double> width(0.3, 2.0);
    std::uniform_real_distribution<double> coeff(0.1, 1.0);
    std::vector<Bump> bumps(12);
    for (auto& b : bumps) {
        b.center = std::exp(logc(rng));
        b.width = width(rng);
        b.coeff = coeff(rng);
    }
    return bumps;
}

}  // namespace

DistributionState random_state(GridPtr grid, const NormSpec& spec, double R, std::uint64_t seed,
                               const DispersionRelation& disp) {
    if (!(R > 0.0)) throw std::invalid_argument("random_state: need R > 0");
    const auto bumps = sample_bumps(seed, grid->r_max);
    std::vector<double> v(grid->size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double r = grid->nodes[i];
        double acc = 0.0;
        for (const auto& b : bumps) {
            const double z = (r - b.center) / b.width;
            acc += b.coeff * std::exp(-0.5 * z * z);
        }
        v[i] = acc * std::pow(1.0 + r * r, -0.5 * (spec.s + 0.5));
    }
    auto state = make_state(std::move(grid), std::move(v));
    const double norm = weighted_norm(state, spec, disp);
    if (!(norm > 0.0)) throw std::runtime_error("random_state: degenerate sample");
    for (auto& x : state.values) x *= R / norm;
    return state;
}

ProbeReport probe_bound(int j, const NormSpec& spec_in, const NormSpec& spec_out,
                        const ProbeConfig& cfg, const DispersionRelation& disp) {
    if (j < 1 || j > 3) throw std::invalid_argument("probe_bound: j must be 1, 2 or 3");
    if (cfg.n_samples < 20) throw std::invalid_argument("probe_bound: need n_samples >= 20");
    if (cfg.grid_sizes.empty()) throw std::invalid_argument("probe_bound: empty grid list");

    ProbeReport rep;
    rep.j = j;
    rep.spec_in = spec_in;
    rep.spec_out = spec_out;
    rep.n_samples = cfg.n_samples;
    rep.refinement_sizes = cfg.grid_sizes;

    for (std::size_t gi = 0; gi < cfg.grid_sizes.size(); ++gi) {
        auto grid = make_grid(GridScheme::gauss_composite, cfg.grid_sizes[gi], cfg.r_max);
        const KernelTensor kernel = build_kernel(grid, disp, cfg.quad);
        double max_ratio = 0.0;
        for (int s = 0; s < cfg.n_samples; ++s) {
            const std::uint64_t base = cfg.seed + 1000ull * static_cast<std::uint64_t>(s);
            auto f = random_state(grid, spec_in, cfg.R, base, disp);
            auto g = random_state(grid, spec_in, cfg.R, base + 1, disp);
            auto h = random_state(grid, spec_in, cfg.R, base + 2, disp);
            auto tj = kernel.apply_T(j, f, g, h);
            auto t_state = make_state(grid, std::move(tj), 0.0);
            const double num = weighted_norm(t_state, spec_out, disp);
            const double den = weighted_norm(f, spec_in, disp) * weighted_norm(g, spec_in, disp) *
                               weighted_norm(h, spec_in, disp);
            const double ratio = den > 0.0 ? num / den : 0.0;
            max_ratio = std::max(max_ratio, ratio);
            if (gi == 0) rep.ratios.push_back(ratio);
        }
        rep.refinement_ratios.push_back(max_ratio);
        if (gi == 0) rep.max_ratio = max_ratio;
    }
    return rep;
}

}  // namespace wavekin
