#pragma once

#include "wavekin/dispersion.hpp"

namespace wavekin {

/// One (p, p1) pairing of the resonant set: all z with
/// Omega(|z|) + Omega(|p + p1 - z|) = Omega(p) + Omega(|p1|).
/// Parameterized by u = |z|; the partner radius is w = |p + p1 - z|.
struct ResonantSlice {
    double p = 0.0;    // output radius |p|
    double r1 = 0.0;   // |p1|
    double mu = 0.0;   // cos(angle(p, p1))
    double rho = 0.0;  // |p + p1|
    double E = 0.0;    // Omega(p) + Omega(r1)
};

/// Slice from (p, r1, mu in [-1, 1]).
ResonantSlice make_slice(double p, double r1, double mu, const DispersionRelation& disp);

/// Slice from (p, r1, rho in [|p - r1|, p + r1]); used when the outer angular
/// integral is carried in the rho variable.
ResonantSlice make_slice_rho(double p, double r1, double rho, const DispersionRelation& disp);

/// Energy mismatch Omega(w) + Omega(u) - E; zero on the resonant set.
double evaluate_G(const ResonantSlice& slice, double u, double w, const DispersionRelation& disp);

/// Partner radius w with Omega(u) + Omega(w) = E. Requires Omega(u) <= E.
double pair_radius(const ResonantSlice& slice, double u, const DispersionRelation& disp);

/// Closed u-interval (possibly empty or degenerate) on which the resonant set
/// is nonempty: u feasible iff the partner radius w(u) satisfies the triangle
/// condition |rho - u| <= w <= rho + u.
struct UInterval {
    double lo = 0.0;
    double hi = -1.0;
    bool empty() const { return !(hi >= lo); }
    double width() const { return empty() ? 0.0 : hi - lo; }
};

UInterval feasible_u_interval(const ResonantSlice& slice, const DispersionRelation& disp);

/// Theta-integrated surface measure over |grad G| per unit du:
/// 2 pi u w / (Omega'(w) rho) with w = pair_radius(u).
/// Requires rho > 0 and u strictly inside the feasible interval.
double measure_weight(const ResonantSlice& slice, double u, const DispersionRelation& disp);

}  // namespace wavekin
