#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wavekin/diagnostics.hpp"
#include "wavekin/grid.hpp"
#include "wavekin/stepper.hpp"

namespace wavekin {

using ordered_json = nlohmann::ordered_json;

/// Trajectory CSV: "# wavekin-traj v1" header, config hash comment, then
/// t,mass,energy,entropy,min_f,linf_s,l2_s rows. %.17g formatting keeps
/// reruns byte-identical.
void write_trajectory_csv(const std::string& path, const std::vector<DiagnosticsRecord>& records,
                          const std::string& cfg_hash);

/// Snapshot CSV: "# wavekin-snap v1", config hash, then r,f rows.
void write_snapshot_csv(const std::string& path, const DistributionState& state,
                        const std::string& cfg_hash);

/// UTF-8 JSON with stable key order and a config_hash field.
void write_json_report(const std::string& path, ordered_json j, const std::string& cfg_hash);

ordered_json conservation_report_json(const ConservationReport& rep);

void ensure_directory(const std::string& path);

}  // namespace wavekin
