#pragma once

#include <vector>

#include "wavekin/collision_general.hpp"
#include "wavekin/dispersion.hpp"
#include "wavekin/grid.hpp"

namespace wavekin {

/// Conserved quantities, entropy, norms and positivity of one snapshot.
/// Entropy is computed on the truncated domain only and is meaningful as a
/// difference diagnostic; it is NaN when the state is not strictly positive.
struct DiagnosticsRecord {
    double t = 0.0;
    double mass = 0.0;
    double momentum = 0.0;  // identically zero for isotropic states
    double energy = 0.0;
    double entropy = 0.0;
    double min_value = 0.0;
    double linf_s = 0.0;  // <r>^s sup norm
    double l2_s = 0.0;    // <r>^s L2 norm
    double s_linf = 0.0, s_l2 = 0.0;  // exponents the norms were taken at
};

DiagnosticsRecord make_record(const DistributionState& state, const DispersionRelation& disp,
                              double s_linf, double s_l2);

enum class EntropyVerdict { monotone_increasing, monotone_decreasing, non_monotone, indeterminate };

const char* to_string(EntropyVerdict v);

/// Drift of the conserved functionals over a run plus the sign pattern of
/// successive entropy differences outside a noise band.
struct ConservationReport {
    double mass_drift = 0.0;    // max |M(t) - M(0)| / |M(0)| (absolute if M(0) = 0)
    double energy_drift = 0.0;
    bool mass_drift_relative = true;
    bool energy_drift_relative = true;
    double entropy_band = 0.0;  // noise band: 10 x max per-step mass change
    EntropyVerdict entropy_verdict = EntropyVerdict::indeterminate;
    double min_value = 0.0;     // min over snapshots of min_f
};

ConservationReport conservation_report(const std::vector<DiagnosticsRecord>& records);

/// Scale-free stationarity residual
///   ||Q[f]||_{L2} / (||T1|| + ||T2|| + 2 ||T3||)_{L2}
/// in the unweighted radial L2 norm; 0 for the zero state.
double stationarity_residual(const DistributionState& f, const DispersionRelation& disp,
                             const QuadSpec& quad);

}  // namespace wavekin
