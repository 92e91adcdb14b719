#include "wavekin/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wavekin/quadrature.hpp"

namespace wavekin {

GridScheme grid_scheme_from_string(const std::string& s) {
    if (s == "uniform-composite") return GridScheme::uniform_composite;
    if (s == "gauss-composite") return GridScheme::gauss_composite;
    throw std::invalid_argument("unknown grid scheme: '" + s + "'");
}

std::string to_string(GridScheme s) {
    return s == GridScheme::uniform_composite ? "uniform-composite" : "gauss-composite";
}

std::uint64_t RadialGrid::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const void* data, std::size_t n) {
        const auto* b = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= b[i];
            h *= 1099511628211ull;
        }
    };
    const int tag = static_cast<int>(scheme);
    mix(&tag, sizeof(tag));
    mix(&r_max, sizeof(r_max));
    mix(nodes.data(), nodes.size() * sizeof(double));
    return h;
}

GridPtr make_grid(GridScheme scheme, int n, double r_max) {
    if (n < 8) throw std::invalid_argument("make_grid: need n >= 8");
    if (!(r_max > 0.0)) throw std::invalid_argument("make_grid: need r_max > 0");
    auto grid = std::make_shared<RadialGrid>();
    grid->r_max = r_max;
    grid->scheme = scheme;
    if (scheme == GridScheme::uniform_composite) {
        const double h = r_max / n;
        grid->nodes.resize(n);
        grid->weights.assign(n, h);
        for (int i = 0; i < n; ++i) grid->nodes[i] = (i + 0.5) * h;
    } else {
        QuadRule rule = composite_gauss(0.0, r_max, n, 8);
        grid->nodes = std::move(rule.nodes);
        grid->weights = std::move(rule.weights);
    }
    return grid;
}

GridPtr make_grid(const std::string& scheme, int n, double r_max) {
    return make_grid(grid_scheme_from_string(scheme), n, r_max);
}

DistributionState make_state(GridPtr grid, std::vector<double> values, double time) {
    if (!grid) throw std::invalid_argument("make_state: null grid");
    if (values.size() != grid->size())
        throw std::invalid_argument("make_state: value count does not match grid size");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("make_state: non-finite value");
    return DistributionState{std::move(grid), std::move(values), time};
}

namespace {

// Derivative at xi of the Newton cubic through (x[j0..j0+3], f[j0..j0+3]).
double cubic_slope(const std::vector<double>& x, const std::vector<double>& f, std::size_t j0,
                   double xi) {
    const double x0 = x[j0], x1 = x[j0 + 1], x2 = x[j0 + 2], x3 = x[j0 + 3];
    const double d01 = (f[j0 + 1] - f[j0]) / (x1 - x0);
    const double d12 = (f[j0 + 2] - f[j0 + 1]) / (x2 - x1);
    const double d23 = (f[j0 + 3] - f[j0 + 2]) / (x3 - x2);
    const double d012 = (d12 - d01) / (x2 - x0);
    const double d123 = (d23 - d12) / (x3 - x1);
    const double d0123 = (d123 - d012) / (x3 - x0);
    return d01 + d012 * (2.0 * xi - x0 - x1) +
           d0123 * ((xi - x1) * (xi - x2) + (xi - x0) * (xi - x2) + (xi - x0) * (xi - x1));
}

}  // namespace

std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& f) {
    const std::size_t n = x.size();
    std::vector<double> d(n, 0.0);
    if (n < 2) return d;
    if (n == 2) {
        d[0] = d[1] = (f[1] - f[0]) / (x[1] - x[0]);
        return d;
    }
    std::vector<double> delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (f[i + 1] - f[i]) / (x[i + 1] - x[i]);

    // Cubic (4-point) slope estimates, then a clamp into the monotone box
    // 0 <= d/delta <= 3 on both adjacent panels; zero slope at local extrema.
    // Keeps every panel's interpolant inside its endpoint range.
    for (std::size_t i = 0; i < n; ++i) {
        double di;
        if (n == 3) {
            const double h0 = x[1] - x[0], h1 = x[2] - x[1];
            if (i == 0)
                di = ((2 * h0 + h1) * delta[0] - h0 * delta[1]) / (h0 + h1);
            else if (i == 1)
                di = (h1 * delta[0] + h0 * delta[1]) / (h0 + h1);
            else
                di = ((2 * h1 + h0) * delta[1] - h1 * delta[0]) / (h0 + h1);
        } else {
            const std::size_t j0 = i == 0 ? 0 : std::min(i - 1, n - 4);
            di = cubic_slope(x, f, j0, x[i]);
        }
        const double dl = i > 0 ? delta[i - 1] : delta[0];
        const double dr = i + 1 < n ? delta[i] : delta[n - 2];
        if (i > 0 && i + 1 < n && (dl == 0.0 || dr == 0.0 || (dl > 0) != (dr > 0))) {
            di = 0.0;  // local extremum or plateau
        } else {
            const double ref = (i == 0) ? dr : (i + 1 == n ? dl : (std::abs(dl) < std::abs(dr) ? dl : dr));
            if (di * ref <= 0.0)
                di = 0.0;
            else if (std::abs(di) > 3.0 * std::abs(ref))
                di = 3.0 * ref;
        }
        d[i] = di;
    }
    return d;
}

namespace {

double hermite_eval(double xl, double xr, double fl, double fr, double dl, double dr, double r) {
    const double h = xr - xl;
    const double t = (r - xl) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * fl + h * h10 * dl + h01 * fr + h * h11 * dr;
}

double eval_with_slopes(const std::vector<double>& x, const std::vector<double>& f,
                        const std::vector<double>& d, double r_max, double r) {
    if (r > r_max) return 0.0;
    if (r <= x.front()) return f.front();
    if (r >= x.back()) return f.back();
    const auto it = std::upper_bound(x.begin(), x.end(), r);
    const std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
    return hermite_eval(x[i], x[i + 1], f[i], f[i + 1], d[i], d[i + 1], r);
}

}  // namespace

double interpolate(const DistributionState& state, double r) {
    if (r < 0.0) throw std::domain_error("interpolate: negative radius");
    const auto d = pchip_slopes(state.grid->nodes, state.values);
    return eval_with_slopes(state.grid->nodes, state.values, d, state.grid->r_max, r);
}

StateEvaluator::StateEvaluator(const DistributionState& state)
    : x_(state.grid->nodes),
      f_(state.values),
      slopes_(pchip_slopes(state.grid->nodes, state.values)),
      r_max_(state.grid->r_max) {}

double StateEvaluator::operator()(double r) const {
    return eval_with_slopes(x_, f_, slopes_, r_max_, r);
}

double integrate_moment(const DistributionState& state, const DispersionRelation& disp,
                        MomentKind moment) {
    if (moment == MomentKind::momentum) return 0.0;  // isotropic by construction
    const auto& g = *state.grid;
    double acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double r = g.nodes[i];
        double gi;
        switch (moment) {
            case MomentKind::mass: gi = state.values[i]; break;
            case MomentKind::energy: gi = disp.omega(r) * state.values[i]; break;
            case MomentKind::entropy_arg:
                if (!(state.values[i] > 0.0))
                    throw std::domain_error("integrate_moment: log of nonpositive value");
                gi = std::log(state.values[i]);
                break;
            default: gi = 0.0;
        }
        acc += g.weights[i] * r * r * gi;
    }
    return 4.0 * M_PI * acc;
}

double weighted_norm(const DistributionState& state, const NormSpec& spec,
                     const DispersionRelation& disp) {
    if (spec.s < 0.0) throw std::invalid_argument("weighted_norm: need s >= 0");
    const auto& g = *state.grid;
    switch (spec.space) {
        case NormSpace::sup_weighted: {
            double m = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i) {
                const double jr = std::pow(1.0 + g.nodes[i] * g.nodes[i], 0.5 * spec.s);
                m = std::max(m, jr * std::abs(state.values[i]));
            }
            return m;
        }
        case NormSpace::l2_weighted: {
            double acc = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i) {
                const double r = g.nodes[i];
                const double jr2s = std::pow(1.0 + r * r, spec.s);
                acc += g.weights[i] * r * r * jr2s * state.values[i] * state.values[i];
            }
            return std::sqrt(4.0 * M_PI * acc);
        }
        case NormSpace::energy_l1: {
            double acc = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i) {
                const double r = g.nodes[i];
                acc += g.weights[i] * r * r * std::pow(1.0 + disp.omega(r), spec.s) *
                       std::abs(state.values[i]);
            }
            return 4.0 * M_PI * acc;
        }
    }
    return 0.0;
}

SampleFamily sample_family_from_string(const std::string& s) {
    if (s == "gaussian") return SampleFamily::gaussian;
    if (s == "rayleigh_jeans") return SampleFamily::rayleigh_jeans;
    if (s == "weighted_power") return SampleFamily::weighted_power;
    throw std::invalid_argument("unknown sample family: '" + s + "'");
}

DistributionState sample_function(GridPtr grid, SampleFamily family,
                                  const std::vector<double>& params,
                                  const DispersionRelation& disp) {
    if (!grid) throw std::invalid_argument("sample_function: null grid");
    std::vector<double> v(grid->size());
    switch (family) {
        case SampleFamily::gaussian: {
            if (params.size() != 1 || !(params[0] > 0.0))
                throw std::invalid_argument("gaussian: needs one positive parameter");
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] = std::exp(-params[0] * grid->nodes[i] * grid->nodes[i]);
            break;
        }
        case SampleFamily::rayleigh_jeans: {
            if (params.size() != 2)
                throw std::invalid_argument("rayleigh_jeans: needs parameters (mu, xi)");
            for (std::size_t i = 0; i < v.size(); ++i) {
                const double den = params[0] + params[1] * disp.omega(grid->nodes[i]);
                if (!(den > 0.0))
                    throw std::invalid_argument("rayleigh_jeans: nonpositive denominator on grid");
                v[i] = 1.0 / den;
            }
            break;
        }
        case SampleFamily::weighted_power: {
            if (params.size() != 1 || !(params[0] >= 0.0))
                throw std::invalid_argument("weighted_power: needs one nonnegative parameter");
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] = std::pow(1.0 + grid->nodes[i] * grid->nodes[i], -0.5 * params[0]);
            break;
        }
    }
    return make_state(std::move(grid), std::move(v), 0.0);
}

}  // namespace wavekin
