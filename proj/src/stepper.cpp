#include "wavekin/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wavekin {

namespace {
constexpr double kLossFloor = 1e-300;

double guard_exponent(const SimulationConfig& cfg, const DispersionRelation& disp) {
    if (cfg.guard_norm_s >= 0.0) return cfg.guard_norm_s;
    return disp.kind() == DispersionKind::schrodinger ? 0.75 : 2.5;
}

NormSpace guard_space(const DispersionRelation& disp) {
    return disp.kind() == DispersionKind::schrodinger ? NormSpace::l2_weighted
                                                      : NormSpace::sup_weighted;
}

void check_finite(const DistributionState& f, int step) {
    for (double v : f.values)
        if (!std::isfinite(v))
            throw std::runtime_error("simulate: non-finite state value at step " +
                                     std::to_string(step));
}
}  // namespace

TimeScheme time_scheme_from_string(const std::string& s) {
    if (s == "euler") return TimeScheme::euler;
    if (s == "picard") return TimeScheme::picard;
    throw std::invalid_argument("unknown time scheme: '" + s + "'");
}

QProvider direct_provider(const DispersionRelation& disp, const QuadSpec& quad) {
    return [disp, quad](const DistributionState& f) { return evaluate_Q_general(f, disp, quad); };
}

QProvider kernel_provider(const KernelTensor& kernel) {
    return [&kernel](const DistributionState& f) { return kernel.apply(f); };
}

double safe_dt_from_split(const CollisionSplit& split, double theta) {
    if (!(theta > 0.0 && theta < 1.0))
        throw std::invalid_argument("safe_dt: theta must lie in (0, 1)");
    double max_q3 = 0.0;
    for (double q3 : split.q3) max_q3 = std::max(max_q3, q3);
    return theta / (2.0 * max_q3 + kLossFloor);
}

double safe_dt(const DistributionState& f, const DispersionRelation& disp, const QuadSpec& quad,
               double theta) {
    for (double v : f.values)
        if (v < 0.0) throw std::invalid_argument("safe_dt: state has negative entries");
    return safe_dt_from_split(evaluate_Q_general(f, disp, quad), theta);
}

DistributionState euler_step(const DistributionState& f, double dt, const CollisionSplit& split) {
    if (!(dt > 0.0)) throw std::invalid_argument("euler_step: need dt > 0");
    DistributionState out = f;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += dt * split.q[i];
    out.time = f.time + dt;
    return out;
}

Trajectory simulate(const DistributionState& f0, const SimulationConfig& cfg,
                    const DispersionRelation& disp, const QProvider& provider) {
    if (!(cfg.t_final > 0.0)) throw std::invalid_argument("simulate: need t_final > 0");
    if (cfg.dt <= 0.0 && cfg.n_steps <= 0)
        throw std::invalid_argument("simulate: need dt > 0 or n_steps > 0");
    if (cfg.positivity_guard)
        for (double v : f0.values)
            if (v < 0.0)
                throw std::invalid_argument("simulate: positivity guard needs nonnegative data");

    const double s_linf = disp.kind() == DispersionKind::schrodinger ? 2.5 : guard_exponent(cfg, disp);
    const double s_l2 = disp.kind() == DispersionKind::schrodinger ? guard_exponent(cfg, disp) : 0.75;
    const NormSpec guard_spec{guard_space(disp), guard_exponent(cfg, disp), 0.0};
    const double norm0 = weighted_norm(f0, guard_spec, disp);

    Trajectory traj;
    DistributionState f = f0;
    f.time = 0.0;
    traj.snapshots.push_back(f);
    traj.records.push_back(make_record(f, disp, s_linf, s_l2));

    const double dt_base = cfg.dt > 0.0 ? cfg.dt : cfg.t_final / cfg.n_steps;
    int step = 0;
    while (f.time < cfg.t_final * (1.0 - 1e-12)) {
        const CollisionSplit split = provider(f);
        double dt = std::min(dt_base, cfg.t_final - f.time);
        if (cfg.positivity_guard) dt = std::min(dt, safe_dt_from_split(split, cfg.theta));
        f = euler_step(f, dt, split);
        ++step;
        check_finite(f, step);

        const bool record_now = (step % std::max(1, cfg.cadence) == 0) ||
                                f.time >= cfg.t_final * (1.0 - 1e-12);
        if (record_now) {
            traj.snapshots.push_back(f);
            traj.records.push_back(make_record(f, disp, s_linf, s_l2));
        }

        const double norm_now = weighted_norm(f, guard_spec, disp);
        if (norm_now > 2.0 * norm0 && norm0 > 0.0) {
            traj.norm_guard_tripped = true;
            traj.abort_reason = "norm guard: tracked norm exceeded twice its initial value at t=" +
                                std::to_string(f.time);
            if (!record_now) {
                traj.snapshots.push_back(f);
                traj.records.push_back(make_record(f, disp, s_linf, s_l2));
            }
            break;
        }
    }
    return traj;
}

PicardResult picard_solve(const DistributionState& f0, double T, double tol, int max_iter,
                          const DispersionRelation& disp, const QProvider& provider,
                          int substeps) {
    if (!(T > 0.0)) throw std::invalid_argument("picard_solve: need T > 0");
    if (substeps < 1) throw std::invalid_argument("picard_solve: need substeps >= 1");
    (void)disp;

    const int m = substeps;
    const double dtau = T / m;
    const std::size_t n = f0.size();

    std::vector<DistributionState> cur(m + 1, f0);
    for (int j = 0; j <= m; ++j) cur[j].time = j * dtau;

    PicardResult res;
    res.state = cur[m];
    double prev_diff = 0.0;
    for (int it = 1; it <= max_iter; ++it) {
        // Q along the current iterate, then the cumulative trapezoid integral.
        std::vector<CollisionSplit> rhs(m + 1);
        for (int j = 0; j <= m; ++j) rhs[j] = provider(cur[j]);

        double diff = 0.0;
        std::vector<DistributionState> next(m + 1, f0);
        std::vector<double> integral(n, 0.0);
        for (int j = 0; j <= m; ++j) {
            if (j > 0)
                for (std::size_t i = 0; i < n; ++i)
                    integral[i] += 0.5 * dtau * (rhs[j - 1].q[i] + rhs[j].q[i]);
            next[j].time = j * dtau;
            for (std::size_t i = 0; i < n; ++i) {
                next[j].values[i] = f0.values[i] + integral[i];
                diff = std::max(diff, std::abs(next[j].values[i] - cur[j].values[i]));
            }
        }
        cur = std::move(next);
        res.iterations = it;
        if (it > 1 && prev_diff > 0.0) res.kappa = diff / prev_diff;
        prev_diff = diff;
        if (diff < tol) {
            res.converged = true;
            break;
        }
    }
    res.state = cur[m];
    res.time_slices = std::move(cur);
    return res;
}

}  // namespace wavekin
