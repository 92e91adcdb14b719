#include "wavekin/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wavekin {

ResonantSlice make_slice(double p, double r1, double mu, const DispersionRelation& disp) {
    if (!(p >= 0.0) || !(r1 >= 0.0)) throw std::invalid_argument("make_slice: negative radius");
    if (!(mu >= -1.0 && mu <= 1.0)) throw std::invalid_argument("make_slice: mu outside [-1, 1]");
    ResonantSlice s;
    s.p = p;
    s.r1 = r1;
    s.mu = mu;
    s.rho = std::sqrt(std::max(0.0, p * p + r1 * r1 + 2.0 * p * r1 * mu));
    s.E = disp.omega(p) + disp.omega(r1);
    return s;
}

ResonantSlice make_slice_rho(double p, double r1, double rho, const DispersionRelation& disp) {
    if (!(rho >= 0.0)) throw std::invalid_argument("make_slice_rho: negative rho");
    ResonantSlice s;
    s.p = p;
    s.r1 = r1;
    s.rho = rho;
    s.mu = (p > 0.0 && r1 > 0.0) ? (rho * rho - p * p - r1 * r1) / (2.0 * p * r1) : 0.0;
    s.E = disp.omega(p) + disp.omega(r1);
    return s;
}

double evaluate_G(const ResonantSlice& slice, double u, double w, const DispersionRelation& disp) {
    if (u < 0.0 || w < 0.0) throw std::domain_error("evaluate_G: negative radius");
    return disp.omega(w) + disp.omega(u) - slice.E;
}

double pair_radius(const ResonantSlice& slice, double u, const DispersionRelation& disp) {
    if (u < 0.0) throw std::domain_error("pair_radius: negative u");
    const double rem = slice.E - disp.omega(u);
    if (rem < -1e-12 * (1.0 + slice.E))
        throw std::domain_error("pair_radius: Omega(u) exceeds the slice energy");
    return disp.invert_omega(std::max(0.0, rem));
}

namespace {

// Bisection for g(u) = target with a sign change on [lo, hi]; g is evaluated
// through the dispersion only, so scale-relative tolerances apply.
template <class G>
double bisect(G&& g, double lo, double hi, double target, double gl) {
    double gh = g(hi) - target;
    double glo = gl - target;
    if (glo == 0.0) return lo;
    if (gh == 0.0) return hi;
    for (int it = 0; it < 200 && (hi - lo) > 1e-15 * (1.0 + hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid) - target;
        if (gm == 0.0) return mid;
        if ((gm > 0) == (glo > 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

UInterval feasible_u_interval(const ResonantSlice& slice, const DispersionRelation& disp) {
    const double E = slice.E;
    const double rho = slice.rho;
    if (E <= 0.0) return UInterval{0.0, 0.0};
    if (rho == 0.0) {
        // p1 = -p exactly: the resonant set is the full sphere Omega(u) = E/2.
        const double u = disp.invert_omega(0.5 * E);
        return UInterval{u, u};
    }

    // h1(u) = Omega(u) + Omega(|rho - u|) (inner triangle boundary w = |rho - u|),
    // h2(u) = Omega(u) + Omega(rho + u)   (antipodal boundary w = rho + u).
    // u is feasible iff h1(u) <= E <= h2(u); u = min(p, r1) and u = max(p, r1)
    // always are (z = p and z = p1 lie on the set).
    auto h1 = [&](double u) { return disp.omega(u) + disp.omega(std::abs(rho - u)); };
    auto h2 = [&](double u) { return disp.omega(u) + disp.omega(rho + u); };

    const double m = std::min(slice.p, slice.r1);
    const double M = std::max(slice.p, slice.r1);
    const double omega_rho = disp.omega(rho);
    const double tol = 1e-14 * (1.0 + E);

    UInterval iv;
    if (std::abs(omega_rho - E) <= tol) {
        iv.lo = 0.0;  // u = 0 sits exactly on the boundary (w = rho)
    } else if (omega_rho > E) {
        iv.lo = bisect(h1, 0.0, m, E, omega_rho);
    } else {
        iv.lo = bisect(h2, 0.0, m, E, omega_rho);
    }

    const double u_cap = disp.invert_omega(E);
    const double h1_M = h1(M);
    if (std::abs(h1_M - E) <= tol) {
        iv.hi = M;  // degenerate slice (e.g. colinear p, p1)
    } else {
        iv.hi = bisect(h1, M, std::max(M, u_cap), E, h1_M);
    }
    if (iv.hi < iv.lo) std::swap(iv.lo, iv.hi);

    // The boundary equations are assumed to bracket a single interval; scan a
    // few interior points and flag a non-interval resonant set if violated.
    const double tol_loose = 1e-9 * (1.0 + E);
    for (int k = 1; k <= 7; ++k) {
        const double u = iv.lo + (iv.hi - iv.lo) * k / 8.0;
        if (h1(u) > E + tol_loose || h2(u) < E - tol_loose)
            throw std::runtime_error("feasible_u_interval: resonant set is not a single interval");
    }
    return iv;
}

double measure_weight(const ResonantSlice& slice, double u, const DispersionRelation& disp) {
    if (!(slice.rho > 0.0)) throw std::domain_error("measure_weight: rho = 0 slice");
    const UInterval iv = feasible_u_interval(slice, disp);
    if (iv.empty() || !(u > iv.lo && u < iv.hi))
        throw std::domain_error("measure_weight: u outside the feasible interval");
    const double w = pair_radius(slice, u, disp);
    const double dp = disp.omega_prime(w);
    if (!(dp > 0.0)) throw std::domain_error("measure_weight: vanishing Omega'(w)");
    return 2.0 * M_PI * u * w / (dp * slice.rho);
}

}  // namespace wavekin
