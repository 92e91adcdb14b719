#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wavekin/dispersion.hpp"
#include "wavekin/grid.hpp"

namespace wavekin {

/// Quadrature orders for the reduced triple integral (outer radius, angular
/// variable, resonance parameter). All composite 8-point Gauss.
struct QuadSpec {
    int n_r1 = 32;
    int n_mu = 16;
    int n_u = 32;
};

/// Per-node collision output split into the pieces the positivity-preserving
/// stepper needs: q = gain + f (q2 - 2 q3), all of gain, q2, q3 nonnegative
/// on nonnegative states.
struct CollisionSplit {
    std::vector<double> q;
    std::vector<double> gain;  // trilinear gain term
    std::vector<double> q2;    // bilinear coefficient of the f-proportional gain
    std::vector<double> q3;    // bilinear loss coefficient
};

/// Trilinear collision forms for isotropic states under a radial dispersion,
/// reduced to a (r1, rho, u) quadrature over the resonant manifold.
/// j = 1: T1(f,g,h)(p) = int f(r1) g(u) h(w) dmeasure  (gain)
/// j = 2: T2 = f(p) * Q2(g,h),  j = 3: T3 = f(p) * Q3(g,h).
double evaluate_T(int j, const DistributionState& f, const DistributionState& g,
                  const DistributionState& h, double p, const DispersionRelation& disp,
                  const QuadSpec& quad);

/// Q[f] = T1(f,f,f) + T2(f,f,f) - 2 T3(f,f,f) at every grid node, direct path.
CollisionSplit evaluate_Q_general(const DistributionState& f, const DispersionRelation& disp,
                                  const QuadSpec& quad);

/// Precomputed quadrature geometry for fast repeated evaluation: for each
/// output node, the resonance points (u, w, r1) with their measure-and-
/// quadrature weights and interpolation anchors frozen at build time.
/// Applying it reproduces the direct path on any state of the same grid.
class KernelTensor {
  public:
    struct PointRef {
        std::uint16_t panel = 0;  // grid panel index, or one of the codes below
        float t = 0.0f;           // local coordinate in the panel
    };
    static constexpr std::uint16_t kZero = 0xFFFF;        // beyond r_max
    static constexpr std::uint16_t kClampLeft = 0xFFFE;   // below the first node
    static constexpr std::uint16_t kClampRight = 0xFFFD;  // between last node and r_max

    struct Point {
        PointRef u, w;
        float weight = 0.0f;  // nonnegative: quadrature x resonant measure
    };
    struct OuterBlock {
        PointRef r1;
        std::uint32_t first = 0, count = 0;  // span in the node's point list
    };

    static KernelTensor build(GridPtr grid, const DispersionRelation& disp, const QuadSpec& quad);

    CollisionSplit apply(const DistributionState& f) const;
    std::vector<double> apply_T(int j, const DistributionState& f, const DistributionState& g,
                                const DistributionState& h) const;

    std::size_t point_count() const;
    bool weights_nonnegative() const;

    std::uint64_t grid_hash() const { return grid_hash_; }
    std::uint64_t dispersion_hash() const { return disp_hash_; }
    const QuadSpec& quad() const { return quad_; }

    /// Binary sidecar cache keyed by (grid hash, dispersion hash, quad orders).
    void save(const std::string& path) const;
    static KernelTensor load(const std::string& path, GridPtr grid, const DispersionRelation& disp);

  private:
    friend struct KernelBuilder;
    KernelTensor() = default;
    void check_state(const DistributionState& f) const;
    double eval_point(const PointRef& pr, const std::vector<double>& f,
                      const std::vector<double>& d) const;

    GridPtr grid_;
    std::uint64_t grid_hash_ = 0, disp_hash_ = 0;
    QuadSpec quad_;
    // Per output node: outer blocks indexing into a flat point array.
    std::vector<std::vector<OuterBlock>> blocks_;
    std::vector<std::vector<Point>> points_;
    std::vector<double> panel_left_, panel_width_;  // grid panel geometry
};

KernelTensor build_kernel(GridPtr grid, const DispersionRelation& disp, const QuadSpec& quad);
CollisionSplit apply_kernel(const KernelTensor& kernel, const DistributionState& f);

}  // namespace wavekin
