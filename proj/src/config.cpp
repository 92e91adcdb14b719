#include "wavekin/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wavekin {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<double> parse_list(const std::string& v, const std::string& where) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(where + ": cannot parse number '" + item + "'");
        }
        if (used != item.size())
            throw std::invalid_argument(where + ": cannot parse number '" + item + "'");
        out.push_back(x);
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& v, const std::string& where) {
    std::vector<int> out;
    for (double x : parse_list(v, where)) {
        if (x != std::floor(x)) throw std::invalid_argument(where + ": expected integers");
        out.push_back(static_cast<int>(x));
    }
    return out;
}

double parse_double(const std::string& v, const std::string& where) {
    const auto list = parse_list(v, where);
    if (list.size() != 1) throw std::invalid_argument(where + ": expected one number");
    return list[0];
}

int parse_int(const std::string& v, const std::string& where) {
    const double x = parse_double(v, where);
    if (x != std::floor(x)) throw std::invalid_argument(where + ": expected an integer");
    return static_cast<int>(x);
}

bool parse_bool(const std::string& v, const std::string& where) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw std::invalid_argument(where + ": expected a boolean, got '" + v + "'");
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string where = origin + ":" + std::to_string(lineno);
        if (eq == std::string::npos)
            throw std::invalid_argument(where + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw std::invalid_argument(where + ": expected 'key = value'");
        const std::string ctx = where + " (" + key + ")";

        if (key == "dispersion.kind")
            cfg.dispersion_kind = dispersion_kind_from_string(val);
        else if (key == "dispersion.params")
            cfg.dispersion_params = parse_list(val, ctx);
        else if (key == "grid.scheme")
            cfg.grid_scheme = grid_scheme_from_string(val);
        else if (key == "grid.n")
            cfg.grid_n = parse_int(val, ctx);
        else if (key == "grid.r_max")
            cfg.grid_r_max = parse_double(val, ctx);
        else if (key == "init.family")
            cfg.init_family = sample_family_from_string(val);
        else if (key == "init.params")
            cfg.init_params = parse_list(val, ctx);
        else if (key == "sim.scheme")
            cfg.sim.scheme = time_scheme_from_string(val);
        else if (key == "sim.t_final")
            cfg.sim.t_final = parse_double(val, ctx);
        else if (key == "sim.dt")
            cfg.sim.dt = parse_double(val, ctx);
        else if (key == "sim.n_steps")
            cfg.sim.n_steps = parse_int(val, ctx);
        else if (key == "sim.positivity_guard")
            cfg.sim.positivity_guard = parse_bool(val, ctx);
        else if (key == "sim.theta")
            cfg.sim.theta = parse_double(val, ctx);
        else if (key == "sim.cadence")
            cfg.sim.cadence = parse_int(val, ctx);
        else if (key == "sim.a_s")
            cfg.sim.a_s = parse_double(val, ctx);
        else if (key == "sim.guard_norm_s")
            cfg.sim.guard_norm_s = parse_double(val, ctx);
        else if (key == "sim.picard_tol")
            cfg.sim.picard_tol = parse_double(val, ctx);
        else if (key == "sim.picard_max_iter")
            cfg.sim.picard_max_iter = parse_int(val, ctx);
        else if (key == "sim.picard_substeps")
            cfg.sim.picard_substeps = parse_int(val, ctx);
        else if (key == "quad.r1")
            cfg.quad.n_r1 = parse_int(val, ctx);
        else if (key == "quad.mu")
            cfg.quad.n_mu = parse_int(val, ctx);
        else if (key == "quad.u")
            cfg.quad.n_u = parse_int(val, ctx);
        else if (key == "quad.q1d")
            cfg.quad_1d = parse_int(val, ctx);
        else if (key == "kernel.enabled")
            cfg.use_kernel = parse_bool(val, ctx);
        else if (key == "kernel.cache")
            cfg.kernel_cache = val;
        else if (key == "probe.samples")
            cfg.probe_samples = parse_int(val, ctx);
        else if (key == "probe.grids")
            cfg.probe_grids = parse_int_list(val, ctx);
        else if (key == "probe.s_sup")
            cfg.probe_s_sup = parse_double(val, ctx);
        else if (key == "probe.gamma_sup")
            cfg.probe_gamma_sup = parse_double(val, ctx);
        else if (key == "probe.s_l2")
            cfg.probe_s_l2 = parse_double(val, ctx);
        else if (key == "scaling.lambda")
            cfg.scaling_lambda = parse_double(val, ctx);
        else if (key == "scaling.times")
            cfg.scaling_times = parse_list(val, ctx);
        else if (key == "seed")
            cfg.seed = static_cast<std::uint64_t>(parse_int(val, ctx));
        else
            throw std::invalid_argument(where + ": unknown key '" + key + "'");
    }

    // Cheap structural validation; value-level checks live in the modules.
    if (cfg.sim.t_final < 0.0)
        throw std::invalid_argument(origin + ": sim.t_final must be positive");
    if (cfg.sim.dt < 0.0) throw std::invalid_argument(origin + ": sim.dt must be positive");
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

DispersionRelation RunConfig::make_dispersion_relation() const {
    return DispersionRelation(dispersion_kind, dispersion_params);
}

GridPtr RunConfig::make_grid_ptr() const { return make_grid(grid_scheme, grid_n, grid_r_max); }

DistributionState RunConfig::make_initial_state(const DispersionRelation& disp) const {
    return sample_function(make_grid_ptr(), init_family, init_params, disp);
}

std::string config_hash(const RunConfig& cfg) {
    std::ostringstream canon;
    canon.precision(17);
    canon << "subcommand=" << cfg.subcommand << ";dispersion=" << to_string(cfg.dispersion_kind);
    for (double p : cfg.dispersion_params) canon << ',' << p;
    canon << ";grid=" << to_string(cfg.grid_scheme) << ',' << cfg.grid_n << ',' << cfg.grid_r_max;
    canon << ";init=" << static_cast<int>(cfg.init_family);
    for (double p : cfg.init_params) canon << ',' << p;
    canon << ";sim=" << static_cast<int>(cfg.sim.scheme) << ',' << cfg.sim.t_final << ','
          << cfg.sim.dt << ',' << cfg.sim.n_steps << ',' << cfg.sim.positivity_guard << ','
          << cfg.sim.theta << ',' << cfg.sim.cadence << ',' << cfg.sim.a_s << ','
          << cfg.sim.guard_norm_s << ',' << cfg.sim.picard_tol << ',' << cfg.sim.picard_max_iter
          << ',' << cfg.sim.picard_substeps;
    canon << ";quad=" << cfg.quad.n_r1 << ',' << cfg.quad.n_mu << ',' << cfg.quad.n_u << ','
          << cfg.quad_1d << ";kernel=" << cfg.use_kernel;
    canon << ";probe=" << cfg.probe_samples << ',' << cfg.probe_s_sup << ',' << cfg.probe_gamma_sup
          << ',' << cfg.probe_s_l2;
    for (int n : cfg.probe_grids) canon << ',' << n;
    canon << ";scaling=" << cfg.scaling_lambda;
    for (double t : cfg.scaling_times) canon << ',' << t;
    canon << ";seed=" << cfg.seed;

    const std::string s = canon.str();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace wavekin
