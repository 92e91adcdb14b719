#include "wavekin/dispersion.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace wavekin {

DispersionKind dispersion_kind_from_string(const std::string& s) {
    if (s == "schrodinger") return DispersionKind::schrodinger;
    if (s == "bogoliubov") return DispersionKind::bogoliubov;
    if (s == "modified_bogoliubov") return DispersionKind::modified_bogoliubov;
    if (s == "low_temp_poly") return DispersionKind::low_temp_poly;
    if (s == "custom" || s == "custom_power") return DispersionKind::custom_power;
    throw std::invalid_argument("unknown dispersion kind: '" + s + "'");
}

std::string to_string(DispersionKind k) {
    switch (k) {
        case DispersionKind::schrodinger: return "schrodinger";
        case DispersionKind::bogoliubov: return "bogoliubov";
        case DispersionKind::modified_bogoliubov: return "modified_bogoliubov";
        case DispersionKind::low_temp_poly: return "low_temp_poly";
        case DispersionKind::custom_power: return "custom_power";
    }
    return "?";
}

namespace {

void require_params(const std::vector<double>& p, std::size_t n, const char* kind) {
    if (p.size() != n)
        throw std::invalid_argument(std::string(kind) + ": expected " + std::to_string(n) +
                                    " parameters, got " + std::to_string(p.size()));
    for (double v : p)
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument(std::string(kind) + ": coefficients must be strictly positive");
}

}  // namespace

DispersionRelation::DispersionRelation(DispersionKind kind, std::vector<double> params)
    : kind_(kind), params_(std::move(params)) {
    switch (kind_) {
        case DispersionKind::schrodinger:
            if (!params_.empty()) throw std::invalid_argument("schrodinger: takes no parameters");
            break;
        case DispersionKind::bogoliubov:
            require_params(params_, 2, "bogoliubov");
            break;
        case DispersionKind::modified_bogoliubov:
            require_params(params_, 3, "modified_bogoliubov");
            break;
        case DispersionKind::low_temp_poly:
            require_params(params_, 3, "low_temp_poly");
            break;
        case DispersionKind::custom_power:
            require_params(params_, 2, "custom_power");
            break;
    }
    offset_ = omega_raw(0.0);
}

double DispersionRelation::omega_raw(double r) const {
    const double x2 = r * r;
    switch (kind_) {
        case DispersionKind::schrodinger:
            return x2;
        case DispersionKind::bogoliubov:
            return std::sqrt(params_[0] * x2 + params_[1] * x2 * x2);
        case DispersionKind::modified_bogoliubov:
            return std::sqrt(params_[0] + params_[1] * x2 + params_[2] * x2 * x2);
        case DispersionKind::low_temp_poly:
            return params_[0] + params_[1] * x2 + params_[2] * x2 * x2;
        case DispersionKind::custom_power:
            return params_[0] * std::pow(r, params_[1]);
    }
    return 0.0;
}

double DispersionRelation::omega(double r) const {
    if (r == 0.0) return 0.0;
    const double x2 = r * r;
    // Cancellation-free forms for the offset-normalized laws.
    switch (kind_) {
        case DispersionKind::low_temp_poly:
            return params_[1] * x2 + params_[2] * x2 * x2;
        case DispersionKind::modified_bogoliubov: {
            const double grow = params_[1] * x2 + params_[2] * x2 * x2;
            return grow / (std::sqrt(params_[0] + grow) + std::sqrt(params_[0]));
        }
        default: return omega_raw(r) - offset_;
    }
}

double DispersionRelation::omega_prime(double r) const {
    const double x2 = r * r;
    switch (kind_) {
        case DispersionKind::schrodinger:
            return 2.0 * r;
        case DispersionKind::bogoliubov: {
            if (r == 0.0) return std::sqrt(params_[0]);
            const double s = std::sqrt(params_[0] * x2 + params_[1] * x2 * x2);
            return (params_[0] * r + 2.0 * params_[1] * r * x2) / s;
        }
        case DispersionKind::modified_bogoliubov: {
            const double s = std::sqrt(params_[0] + params_[1] * x2 + params_[2] * x2 * x2);
            return (params_[1] * r + 2.0 * params_[2] * r * x2) / s;
        }
        case DispersionKind::low_temp_poly:
            return 2.0 * params_[1] * r + 4.0 * params_[2] * r * x2;
        case DispersionKind::custom_power:
            return params_[0] * params_[1] * std::pow(r, params_[1] - 1.0);
    }
    return 0.0;
}

double DispersionRelation::invert_omega_bisect(double E) const {
    if (E < 0.0) throw std::domain_error("invert_omega: negative energy");
    if (E == 0.0) return 0.0;
    // Exponential bracket growth from 1.
    double hi = 1.0;
    while (omega(hi) < E) {
        hi *= 2.0;
        if (hi > 1e150) throw std::runtime_error("invert_omega: bracket growth failed");
    }
    double lo = (hi == 1.0) ? 0.0 : hi * 0.5;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (omega(mid) < E)
            lo = mid;
        else
            hi = mid;
    }
    // Newton polish; omega is strictly increasing so this stays in the bracket.
    double r = 0.5 * (lo + hi);
    for (int it = 0; it < 4; ++it) {
        const double dp = omega_prime(r);
        if (dp <= 0.0) break;
        const double step = (omega(r) - E) / dp;
        const double next = r - step;
        if (!(next > lo && next < hi)) break;
        r = next;
        if (std::abs(step) < 1e-16 * r) break;
    }
    return r;
}

double DispersionRelation::invert_omega(double E) const {
    if (E < 0.0) throw std::domain_error("invert_omega: negative energy");
    if (kind_ == DispersionKind::schrodinger) return std::sqrt(E);
    return invert_omega_bisect(E);
}

std::uint64_t DispersionRelation::hash() const {
    // FNV-1a over kind tag and parameter bytes.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const void* data, std::size_t n) {
        const auto* b = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= b[i];
            h *= 1099511628211ull;
        }
    };
    const int tag = static_cast<int>(kind_);
    mix(&tag, sizeof(tag));
    if (!params_.empty()) mix(params_.data(), params_.size() * sizeof(double));
    return h;
}

DispersionRelation make_dispersion(DispersionKind kind, const std::vector<double>& params) {
    return DispersionRelation(kind, params);
}

DispersionRelation make_dispersion(const std::string& kind, const std::vector<double>& params) {
    return DispersionRelation(dispersion_kind_from_string(kind), params);
}

AssumptionReport validate_assumptions(const DispersionRelation& disp, int n_samples, double r_min,
                                      double r_max) {
    if (n_samples < 2) throw std::invalid_argument("validate_assumptions: need n_samples >= 2");
    if (!(r_max > r_min) || !(r_min > 0.0))
        throw std::invalid_argument("validate_assumptions: need 0 < r_min < r_max");

    AssumptionReport rep;
    rep.n_samples = n_samples;
    rep.r_min = r_min;
    rep.r_max = r_max;
    rep.omega_zero_ok = (disp.omega(0.0) == 0.0);

    std::vector<double> r(n_samples), w(n_samples);
    const double lr0 = std::log(r_min), lr1 = std::log(r_max);
    for (int i = 0; i < n_samples; ++i) {
        r[i] = std::exp(lr0 + (lr1 - lr0) * i / (n_samples - 1.0));
        w[i] = disp.omega(r[i]);
        if (!std::isfinite(w[i]))
            throw std::runtime_error("validate_assumptions: non-finite omega at r=" + std::to_string(r[i]));
    }

    rep.pass_monotone = true;
    for (int i = 1; i < n_samples; ++i)
        if (!(w[i] > w[i - 1])) rep.pass_monotone = false;

    rep.c1_est = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_samples; ++i) {
        const double ratio = disp.omega_prime(r[i]) / r[i];
        if (ratio < rep.c1_est) {
            rep.c1_est = ratio;
            rep.argmin_c1 = r[i];
        }
    }
    rep.pass_growth = (rep.c1_est > 0.0);

    // Geometric ladder scan for the doubling constant, 1% resolution.
    rep.pass_doubling = false;
    for (double c2 = 1.0; c2 <= 64.0; c2 *= 1.01) {
        bool ok = true;
        for (int i = 0; i < n_samples; ++i) {
            if (!(w[i] <= 0.5 * disp.omega(c2 * r[i]))) {
                ok = false;
                break;
            }
        }
        if (ok) {
            rep.c2_est = c2;
            rep.pass_doubling = true;
            break;
        }
    }
    return rep;
}

}  // namespace wavekin
