#pragma once

#include <cstddef>
#include <vector>

namespace wavekin {

/// Nodes and weights of a 1D quadrature rule on some interval [a, b].
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }

    template <class F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

/// Gauss-Legendre rule of order n on [-1, 1]. Results are cached per order.
const QuadRule& gauss_legendre(int n);

/// Composite Gauss rule on [a, b]: panels of `panel_order`-point Gauss each,
/// `n_points` total (rounded up to a multiple of the panel order).
/// All interior nodes, none at panel boundaries.
QuadRule composite_gauss(double a, double b, int n_points, int panel_order = 8);

}  // namespace wavekin
