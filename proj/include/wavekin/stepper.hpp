#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wavekin/collision_general.hpp"
#include "wavekin/diagnostics.hpp"
#include "wavekin/dispersion.hpp"
#include "wavekin/grid.hpp"

namespace wavekin {

enum class TimeScheme { euler, picard };

TimeScheme time_scheme_from_string(const std::string& s);

struct SimulationConfig {
    TimeScheme scheme = TimeScheme::euler;
    double t_final = 0.0;
    double dt = 0.0;    // base step; 0 = derive from n_steps
    int n_steps = 0;    // alternative to dt
    bool positivity_guard = true;
    double theta = 0.5;       // per-step loss fraction cap in (0, 1)
    int cadence = 1;          // record every k-th step
    double a_s = 10.0;        // horizon constant in T = R^-2 / a_s (guard heuristic)
    double guard_norm_s = -1.0;  // <0 = default per dispersion kind
    double picard_tol = 1e-10;
    int picard_max_iter = 40;
    int picard_substeps = 16;
};

struct Trajectory {
    std::vector<DistributionState> snapshots;
    std::vector<DiagnosticsRecord> records;
    bool norm_guard_tripped = false;
    std::string abort_reason;  // empty if the run completed
};

/// Per-state collision provider; defaults are built from a kernel or the
/// direct path by the callers.
using QProvider = std::function<CollisionSplit(const DistributionState&)>;

QProvider direct_provider(const DispersionRelation& disp, const QuadSpec& quad);
QProvider kernel_provider(const KernelTensor& kernel);

/// Largest Euler step keeping nonnegative data nonnegative:
///   theta / (2 max_i Q3[f,f](r_i) + floor),
/// so the multiplicative loss factor stays >= 1 - theta and the gain terms
/// only add. The floor makes the zero state (no loss) give a finite step.
double safe_dt(const DistributionState& f, const DispersionRelation& disp, const QuadSpec& quad,
               double theta);
double safe_dt_from_split(const CollisionSplit& split, double theta);

/// f + dt Q[f], time advanced by dt.
DistributionState euler_step(const DistributionState& f, double dt, const CollisionSplit& split);

/// Forward-Euler run with optional positivity step control and a norm
/// doubling guard (run aborts, partial trajectory flagged).
Trajectory simulate(const DistributionState& f0, const SimulationConfig& cfg,
                    const DispersionRelation& disp, const QProvider& provider);

struct PicardResult {
    DistributionState state;   // iterate at t = T
    double kappa = 0.0;        // last ratio of successive difference norms
    int iterations = 0;
    bool converged = false;
    std::vector<DistributionState> time_slices;  // final iterate on the substep grid
};

/// Iterates f_(k+1)(t) = f0 + int_0^t Q[f_k] dtau on a uniform substep grid
/// (trapezoid in time) until the sup-in-time max-norm of successive
/// differences drops below tol.
PicardResult picard_solve(const DistributionState& f0, double T, double tol, int max_iter,
                          const DispersionRelation& disp, const QProvider& provider,
                          int substeps = 16);

}  // namespace wavekin
