#include "wavekin/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace wavekin {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    return os;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

void ensure_directory(const std::string& path) {
    std::error_code ec;
    std::filesystem::create_directories(path, ec);
    if (ec) throw std::runtime_error("cannot create directory " + path + ": " + ec.message());
}

void write_trajectory_csv(const std::string& path, const std::vector<DiagnosticsRecord>& records,
                          const std::string& cfg_hash) {
    auto os = open_out(path);
    os << "# wavekin-traj v1\n";
    os << "# config_hash=" << cfg_hash << "\n";
    os << "t,mass,energy,entropy,min_f,linf_s,l2_s\n";
    for (const auto& r : records) {
        os << num(r.t) << ',' << num(r.mass) << ',' << num(r.energy) << ',' << num(r.entropy)
           << ',' << num(r.min_value) << ',' << num(r.linf_s) << ',' << num(r.l2_s) << '\n';
    }
    if (!os) throw std::runtime_error("write failed: " + path);
}

void write_snapshot_csv(const std::string& path, const DistributionState& state,
                        const std::string& cfg_hash) {
    auto os = open_out(path);
    os << "# wavekin-snap v1\n";
    os << "# config_hash=" << cfg_hash << "\n";
    os << "r,f\n";
    for (std::size_t i = 0; i < state.size(); ++i)
        os << num(state.grid->nodes[i]) << ',' << num(state.values[i]) << '\n';
    if (!os) throw std::runtime_error("write failed: " + path);
}

void write_json_report(const std::string& path, ordered_json j, const std::string& cfg_hash) {
    j["config_hash"] = cfg_hash;
    auto os = open_out(path);
    os << j.dump(2) << '\n';
    if (!os) throw std::runtime_error("write failed: " + path);
}

ordered_json conservation_report_json(const ConservationReport& rep) {
    ordered_json j;
    j["mass_drift"] = rep.mass_drift;
    j["mass_drift_relative"] = rep.mass_drift_relative;
    j["energy_drift"] = rep.energy_drift;
    j["energy_drift_relative"] = rep.energy_drift_relative;
    j["entropy_band"] = rep.entropy_band;
    j["entropy_verdict"] = to_string(rep.entropy_verdict);
    j["min_value"] = rep.min_value;
    return j;
}

}  // namespace wavekin
