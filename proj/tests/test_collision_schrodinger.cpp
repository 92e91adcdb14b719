#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle_helpers.hpp"
#include "wavekin/collision_schrodinger.hpp"

using namespace wavekin;

namespace {
const auto schr = make_dispersion(DispersionKind::schrodinger, {});
}

TEST_CASE("kernel_1d anchors") {
    CHECK(kernel_1d(1.0, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    // p1 = sqrt(7), min = 1, kernel = 2*2*1/1
    CHECK(kernel_1d(1.0, 2.0, 2.0) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(kernel_1d(2.0, 1.0, 1.0) == 0.0);  // infeasible triple
    CHECK_THROWS_AS(kernel_1d(0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(kernel_1d(1.0, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("kernel and bracket are p2 <-> p3 symmetric") {
    auto g = make_grid(GridScheme::gauss_composite, 64, 8.0);
    auto f = sample_function(g, SampleFamily::gaussian, {0.8}, schr);
    StateEvaluator fe(f);
    const double p = 1.3;
    for (auto [p2, p3] : {std::pair{0.7, 2.1}, {1.9, 1.1}, {2.5, 0.4}}) {
        CHECK(kernel_1d(p, p2, p3) == doctest::Approx(kernel_1d(p, p3, p2)).epsilon(1e-14));
        const double s = p2 * p2 + p3 * p3 - p * p;
        if (s < 0.0) continue;
        const double f1 = fe(std::sqrt(s)), fp = fe(p);
        auto bracket = [&](double a, double b) {
            return fe(a) * fe(b) * (fp + f1) - fp * f1 * (fe(a) + fe(b));
        };
        CHECK(bracket(p2, p3) == doctest::Approx(bracket(p3, p2)).epsilon(1e-14));
    }
}

TEST_CASE("zero state maps to zero derivative") {
    auto g = make_grid(GridScheme::gauss_composite, 64, 8.0);
    auto zero = make_state(g, std::vector<double>(g->size(), 0.0));
    auto split = evaluate_Q_1d(zero, 32);
    for (std::size_t i = 0; i < g->size(); ++i) {
        CHECK(split.q[i] == 0.0);
        CHECK(split.gain[i] == 0.0);
    }
}

TEST_CASE("gaussian at p = 1 matches the dense trapezoid brute force within 0.2%") {
    auto g = make_grid(GridScheme::gauss_composite, 256, 8.0);
    auto f = sample_function(g, SampleFamily::gaussian, {1.0}, schr);
    auto split = evaluate_Q_1d(f, 96);
    // Q at the node closest to p = 1
    std::size_t i1 = 0;
    for (std::size_t i = 0; i < g->size(); ++i)
        if (std::abs(g->nodes[i] - 1.0) < std::abs(g->nodes[i1] - 1.0)) i1 = i;
    const double p = g->nodes[i1];
    auto ffun = [](double r) { return std::exp(-r * r); };
    const double oracle = testing::brute_force_Q1d(p, ffun, 8.0, 2000);
    CHECK(split.q[i1] == doctest::Approx(oracle).epsilon(2e-3));
}

TEST_CASE("rayleigh-jeans state is near-stationary and tightens with the cutoff") {
    auto residual_for = [](double r_max) {
        auto g = make_grid(GridScheme::gauss_composite, 96, r_max);
        auto f = sample_function(g, SampleFamily::rayleigh_jeans, {1.0, 1.0}, schr);
        auto split = evaluate_Q_1d(f, 64);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < g->size(); ++i) {
            const double w = g->weights[i] * g->nodes[i] * g->nodes[i];
            const double t1 = split.gain[i];
            const double t2 = f.values[i] * split.q2[i];
            const double t3 = f.values[i] * split.q3[i];
            num += w * split.q[i] * split.q[i];
            den += w * (t1 + t2 + 2.0 * t3) * (t1 + t2 + 2.0 * t3);
        }
        return std::sqrt(num / den);
    };
    const double r8 = residual_for(8.0), r16 = residual_for(16.0);
    CHECK(r8 < 0.05);
    CHECK(r16 < r8);
}

TEST_CASE("discrete mass and energy functionals of the derivative are small") {
    auto g = make_grid(GridScheme::gauss_composite, 96, 8.0);
    auto f = sample_function(g, SampleFamily::gaussian, {1.0}, schr);
    auto drift = [&](int nq) {
        auto split = evaluate_Q_1d(f, nq);
        double mass = 0.0, energy = 0.0, scale_m = 0.0, scale_e = 0.0;
        for (std::size_t i = 0; i < g->size(); ++i) {
            const double w = g->weights[i] * g->nodes[i] * g->nodes[i];
            const double gross =
                split.gain[i] + f.values[i] * (split.q2[i] + 2.0 * split.q3[i]);
            mass += w * split.q[i];
            energy += w * g->nodes[i] * g->nodes[i] * split.q[i];
            scale_m += w * gross;
            scale_e += w * g->nodes[i] * g->nodes[i] * gross;
        }
        return std::pair{std::abs(mass) / scale_m, std::abs(energy) / scale_e};
    };
    // Relative to the gross gain-plus-loss scale the functionals sit at the
    // composed-quadrature floor at both orders.
    auto [m1, e1] = drift(24);
    auto [m2, e2] = drift(96);
    CHECK(m1 < 2e-4);
    CHECK(e1 < 2e-4);
    CHECK(m2 < 1e-4);
    CHECK(e2 < 1e-4);
}

TEST_CASE("component split is consistent: q = gain + f (q2 - 2 q3)") {
    auto g = make_grid(GridScheme::gauss_composite, 64, 8.0);
    auto f = sample_function(g, SampleFamily::gaussian, {0.5}, schr);
    auto split = evaluate_Q_1d(f, 32);
    for (std::size_t i = 0; i < g->size(); i += 5) {
        const double recon = split.gain[i] + f.values[i] * (split.q2[i] - 2.0 * split.q3[i]);
        CHECK(split.q[i] == doctest::Approx(recon).epsilon(1e-13));
        CHECK(split.gain[i] >= 0.0);
        CHECK(split.q2[i] >= 0.0);
        CHECK(split.q3[i] >= 0.0);
    }
}

TEST_CASE("evaluate_T_1d matches the bracket assembly") {
    auto g = make_grid(GridScheme::gauss_composite, 64, 8.0);
    auto f = sample_function(g, SampleFamily::gaussian, {1.0}, schr);
    const double p = g->nodes[20];
    const double t1 = evaluate_T_1d(1, f, f, f, p, 48);
    const double t2 = evaluate_T_1d(2, f, f, f, p, 48);
    const double t3 = evaluate_T_1d(3, f, f, f, p, 48);
    auto split = evaluate_Q_1d(f, 48);
    CHECK(t1 == doctest::Approx(split.gain[20]).epsilon(1e-12));
    CHECK(t2 == doctest::Approx(f.values[20] * split.q2[20]).epsilon(1e-12));
    CHECK(t3 == doctest::Approx(f.values[20] * split.q3[20]).epsilon(1e-12));
    const double scale = std::abs(t1) + std::abs(t2) + 2.0 * std::abs(t3);
    CHECK(std::abs(t1 + t2 - 2.0 * t3 - split.q[20]) <= 1e-12 * scale);
}
