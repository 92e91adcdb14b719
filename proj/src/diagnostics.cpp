#include "wavekin/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wavekin {

DiagnosticsRecord make_record(const DistributionState& state, const DispersionRelation& disp,
                              double s_linf, double s_l2) {
    DiagnosticsRecord rec;
    rec.t = state.time;
    rec.mass = integrate_moment(state, disp, MomentKind::mass);
    rec.momentum = 0.0;
    rec.energy = integrate_moment(state, disp, MomentKind::energy);
    rec.min_value = *std::min_element(state.values.begin(), state.values.end());
    rec.entropy = rec.min_value > 0.0 ? integrate_moment(state, disp, MomentKind::entropy_arg)
                                      : std::numeric_limits<double>::quiet_NaN();
    rec.linf_s = weighted_norm(state, {NormSpace::sup_weighted, s_linf, 0.0}, disp);
    rec.l2_s = weighted_norm(state, {NormSpace::l2_weighted, s_l2, 0.0}, disp);
    rec.s_linf = s_linf;
    rec.s_l2 = s_l2;
    return rec;
}

const char* to_string(EntropyVerdict v) {
    switch (v) {
        case EntropyVerdict::monotone_increasing: return "monotone-increasing";
        case EntropyVerdict::monotone_decreasing: return "monotone-decreasing";
        case EntropyVerdict::non_monotone: return "non-monotone";
        case EntropyVerdict::indeterminate: return "indeterminate";
    }
    return "?";
}

ConservationReport conservation_report(const std::vector<DiagnosticsRecord>& records) {
    if (records.empty()) throw std::invalid_argument("conservation_report: empty trajectory");
    ConservationReport rep;
    const double m0 = records.front().mass;
    const double e0 = records.front().energy;
    rep.mass_drift_relative = m0 != 0.0;
    rep.energy_drift_relative = e0 != 0.0;
    rep.min_value = records.front().min_value;

    double max_step_mass = 0.0;
    for (std::size_t k = 0; k < records.size(); ++k) {
        const auto& r = records[k];
        const double dm = std::abs(r.mass - m0);
        const double de = std::abs(r.energy - e0);
        rep.mass_drift = std::max(rep.mass_drift, rep.mass_drift_relative ? dm / std::abs(m0) : dm);
        rep.energy_drift =
            std::max(rep.energy_drift, rep.energy_drift_relative ? de / std::abs(e0) : de);
        rep.min_value = std::min(rep.min_value, r.min_value);
        if (k > 0) max_step_mass = std::max(max_step_mass, std::abs(r.mass - records[k - 1].mass));
    }

    rep.entropy_band = 10.0 * max_step_mass;
    bool any_up = false, any_down = false, all_finite = true;
    for (std::size_t k = 1; k < records.size(); ++k) {
        if (!std::isfinite(records[k].entropy) || !std::isfinite(records[k - 1].entropy)) {
            all_finite = false;
            break;
        }
        const double ds = records[k].entropy - records[k - 1].entropy;
        if (ds > rep.entropy_band) any_up = true;
        if (ds < -rep.entropy_band) any_down = true;
    }
    if (!all_finite || (!any_up && !any_down))
        rep.entropy_verdict = EntropyVerdict::indeterminate;
    else if (any_up && any_down)
        rep.entropy_verdict = EntropyVerdict::non_monotone;
    else
        rep.entropy_verdict =
            any_up ? EntropyVerdict::monotone_increasing : EntropyVerdict::monotone_decreasing;
    return rep;
}

double stationarity_residual(const DistributionState& f, const DispersionRelation& disp,
                             const QuadSpec& quad) {
    bool all_zero = true;
    for (double v : f.values)
        if (v != 0.0) all_zero = false;
    if (all_zero) return 0.0;

    const auto split = evaluate_Q_general(f, disp, quad);
    const auto& g = *f.grid;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double w = g.weights[i] * g.nodes[i] * g.nodes[i];
        const double t1 = split.gain[i];
        const double t2 = f.values[i] * split.q2[i];
        const double t3 = f.values[i] * split.q3[i];
        num += w * split.q[i] * split.q[i];
        den += w * (t1 + t2 + 2.0 * t3) * (t1 + t2 + 2.0 * t3);
    }
    if (den == 0.0) return 0.0;
    return std::sqrt(num / den);
}

}  // namespace wavekin
