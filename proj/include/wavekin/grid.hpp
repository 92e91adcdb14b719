#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wavekin/dispersion.hpp"

namespace wavekin {

enum class GridScheme {
    uniform_composite,  // composite midpoint
    gauss_composite,    // 8-point Gauss panels
};

GridScheme grid_scheme_from_string(const std::string& s);
std::string to_string(GridScheme s);

/// Radial quadrature grid on [0, r_max]: strictly increasing interior nodes
/// r_i with positive weights w_i such that sum w_i g(r_i) ~ int_0^{r_max} g dr.
struct RadialGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    double r_max = 0.0;
    GridScheme scheme = GridScheme::gauss_composite;

    std::size_t size() const { return nodes.size(); }
    std::uint64_t hash() const;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

/// Build a radial grid. n >= 8; gauss-composite rounds n up to a multiple of 8.
GridPtr make_grid(GridScheme scheme, int n, double r_max);
GridPtr make_grid(const std::string& scheme, int n, double r_max);

/// Isotropic occupation-number samples f_i = f(r_i) at time t.
struct DistributionState {
    GridPtr grid;
    std::vector<double> values;
    double time = 0.0;

    std::size_t size() const { return values.size(); }
};

DistributionState make_state(GridPtr grid, std::vector<double> values, double time = 0.0);

/// Monotone piecewise-cubic (Fritsch-Carlson) slopes for the nodal values.
/// The limiter keeps each panel's interpolant inside its endpoint range, so
/// nonnegative data never interpolates negative.
std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& f);

/// Evaluate a state at radius r. Conventions: r < r_0 clamps to f_0,
/// r in [r_{n-1}, r_max] clamps to f_{n-1}, r > r_max returns 0.
double interpolate(const DistributionState& state, double r);

/// Same state evaluation with slopes precomputed once per state; used in the
/// collision quadrature hot loops.
class StateEvaluator {
  public:
    explicit StateEvaluator(const DistributionState& state);
    double operator()(double r) const;

    const std::vector<double>& slopes() const { return slopes_; }

  private:
    const std::vector<double>& x_;
    const std::vector<double>& f_;
    std::vector<double> slopes_;
    double r_max_;
};

enum class NormSpace { sup_weighted, l2_weighted, energy_l1 };

/// Weighted norm selector: <r>^s sup / L2 weights, or (1 + omega)^s L1.
struct NormSpec {
    NormSpace space = NormSpace::sup_weighted;
    double s = 0.0;
    double gamma = 0.0;  // extra exponent carried by probe reports
};

enum class MomentKind { mass, energy, entropy_arg, momentum };

/// 4 pi sum w_i r_i^2 g(r_i) with g = f, omega f, or log f. Momentum is 0
/// exactly for isotropic states and is reported as such.
double integrate_moment(const DistributionState& state, const DispersionRelation& disp,
                        MomentKind moment);

double weighted_norm(const DistributionState& state, const NormSpec& spec,
                     const DispersionRelation& disp);

enum class SampleFamily { gaussian, rayleigh_jeans, weighted_power };

SampleFamily sample_family_from_string(const std::string& s);

/// Closed-form test states: gaussian(a) = exp(-a r^2),
/// rayleigh_jeans(mu, xi) = 1/(mu + xi omega(r)), weighted_power(s) = <r>^-s.
DistributionState sample_function(GridPtr grid, SampleFamily family,
                                  const std::vector<double>& params,
                                  const DispersionRelation& disp);

}  // namespace wavekin
