#pragma once

#include "wavekin/collision_general.hpp"
#include "wavekin/grid.hpp"

namespace wavekin {

/// Radial kernel of the 1D reduction for omega = |p|^2:
/// p2 p3 min{p, p1, p2, p3} / p with p1 = sqrt(p2^2 + p3^2 - p^2).
/// Returns 0 when p2^2 + p3^2 < p^2 (outside the integration region).
double kernel_1d(double p, double p2, double p3);

/// Q[f](p) = int int kernel_1d * [f2 f3 (f + f1) - f f1 (f2 + f3)] dp2 dp3
/// over p^2 <= p2^2 + p3^2 <= 2 r_max^2 (the support cap of the zero-extended
/// bracket; each term dies on its own support), split the same way as the
/// general path (gain = T1, plus the f-proportional coefficients Q2, Q3).
/// n_quad points per dimension, composite Gauss with kink-aligned panels.
CollisionSplit evaluate_Q_1d(const DistributionState& f, int n_quad = 64);

/// Component forms matching evaluate_T's argument convention:
/// j=1: int k f(p1) g(p2) h(p3); j=2: f(p) int k g(p2) h(p3);
/// j=3: f(p) int k g(p1) h(p2).
double evaluate_T_1d(int j, const DistributionState& f, const DistributionState& g,
                     const DistributionState& h, double p, int n_quad = 64);

}  // namespace wavekin
