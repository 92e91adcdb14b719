#pragma once

#include <string>
#include <vector>

namespace wavekin {

/// Built-in radial dispersion laws omega(p) = Omega(|p|), normalized so Omega(0) = 0.
enum class DispersionKind {
    schrodinger,           // Omega(x) = x^2
    bogoliubov,            // Omega(x) = sqrt(t1 x^2 + t2 x^4)
    modified_bogoliubov,   // Omega(x) = sqrt(t0 + t1 x^2 + t2 x^4) - sqrt(t0)
    low_temp_poly,         // Omega(x) = l0 + l1 x^2 + l2 x^4 - l0
    custom_power,          // Omega(x) = a x^b
};

DispersionKind dispersion_kind_from_string(const std::string& s);
std::string to_string(DispersionKind k);

/// A radial dispersion law with derivative and inverse. Immutable after
/// construction; safe to share across threads.
class DispersionRelation {
  public:
    DispersionRelation(DispersionKind kind, std::vector<double> params);

    double omega(double r) const;
    double omega_prime(double r) const;

    /// r >= 0 with |omega(r) - E| <= 1e-12 (1 + E). Exponential bracket growth
    /// + bisection + Newton polish; closed form for the Schroedinger law.
    double invert_omega(double E) const;

    DispersionKind kind() const { return kind_; }
    const std::vector<double>& params() const { return params_; }
    /// Raw Omega(0) subtracted to enforce omega(0) = 0.
    double offset() const { return offset_; }

    /// Generic bracketed-bisection inverse ignoring any closed form
    /// (kept callable so the fast paths can be cross-checked).
    double invert_omega_bisect(double E) const;

    std::uint64_t hash() const;

  private:
    double omega_raw(double r) const;

    DispersionKind kind_;
    std::vector<double> params_;
    double offset_ = 0.0;
};

DispersionRelation make_dispersion(DispersionKind kind, const std::vector<double>& params);
DispersionRelation make_dispersion(const std::string& kind, const std::vector<double>& params);

/// Empirical certificate for the structural bounds a dispersion law must
/// satisfy (growth of Omega'/x, doubling constant), sampled on a log grid.
struct AssumptionReport {
    double c1_est = 0.0;   // min over samples of Omega'(r)/r
    double c2_est = 0.0;   // smallest ladder candidate with Omega(r) <= Omega(c2 r)/2 on all samples
    bool pass_monotone = false;   // omega strictly increasing on samples
    bool pass_growth = false;     // c1_est > 0
    bool pass_doubling = false;   // a passing c2 candidate was found
    bool omega_zero_ok = false;   // omega(0) == 0 exactly
    // Sampling grid: n log-spaced radii in [r_min, r_max].
    int n_samples = 0;
    double r_min = 0.0;
    double r_max = 0.0;
    double argmin_c1 = 0.0;       // radius attaining c1_est
};

/// Certify the structural bounds on n log-spaced samples in [r_min, r_max].
/// Pass verdicts hold on the sampled range only.
AssumptionReport validate_assumptions(const DispersionRelation& disp, int n_samples = 10000,
                                      double r_min = 1e-6, double r_max = 1e6);

}  // namespace wavekin
