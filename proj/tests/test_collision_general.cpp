#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle_helpers.hpp"
#include "wavekin/collision_general.hpp"
#include "wavekin/collision_schrodinger.hpp"

using namespace wavekin;

namespace {
const auto schr = make_dispersion(DispersionKind::schrodinger, {});
const auto bog = make_dispersion(DispersionKind::bogoliubov, {1.0, 1.0});
constexpr double kFourPiSq = 4.0 * M_PI * M_PI;

DistributionState random_positive_state(GridPtr grid, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> c(0.2, 1.0), w(0.4, 1.5), m(0.0, 4.0);
    std::vector<double> v(grid->size(), 0.0);
    for (int b = 0; b < 5; ++b) {
        const double cb = c(rng), wb = w(rng), mb = m(rng);
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double r = grid->nodes[i];
            v[i] += cb * std::exp(-(r - mb) * (r - mb) / (2.0 * wb * wb));
        }
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double r = grid->nodes[i];
        v[i] /= std::pow(1.0 + r * r, 1.5);
    }
    return make_state(std::move(grid), std::move(v));
}
}  // namespace

TEST_CASE("zero states map to zero for every component") {
    auto g = make_grid(GridScheme::gauss_composite, 48, 8.0);
    auto zero = make_state(g, std::vector<double>(g->size(), 0.0));
    const QuadSpec quad{16, 8, 16};
    for (int j : {1, 2, 3}) CHECK(evaluate_T(j, zero, zero, zero, 1.0, schr, quad) == 0.0);
    auto split = evaluate_Q_general(zero, schr, quad);
    for (double q : split.q) CHECK(q == 0.0);
}

TEST_CASE("input validation") {
    auto g1 = make_grid(GridScheme::gauss_composite, 48, 8.0);
    auto g2 = make_grid(GridScheme::gauss_composite, 48, 9.0);
    auto f1 = sample_function(g1, SampleFamily::gaussian, {1.0}, schr);
    auto f2 = sample_function(g2, SampleFamily::gaussian, {1.0}, schr);
    CHECK_THROWS_AS(evaluate_T(1, f1, f1, f2, 1.0, schr, QuadSpec{16, 8, 16}),
                    std::invalid_argument);
    CHECK_THROWS_AS(evaluate_T(1, f1, f1, f1, 1.0, schr, QuadSpec{4, 8, 16}),
                    std::invalid_argument);
    CHECK_THROWS_AS(evaluate_T(4, f1, f1, f1, 1.0, schr, QuadSpec{16, 8, 16}),
                    std::invalid_argument);
}

TEST_CASE("positive data gives positive Q2 and Q3") {
    auto g = make_grid(GridScheme::gauss_composite, 48, 8.0);
    auto f = sample_function(g, SampleFamily::gaussian, {1.0}, schr);
    auto one = make_state(g, std::vector<double>(g->size(), 1.0));
    const QuadSpec quad{16, 8, 16};
    const double q2 = evaluate_T(2, one, f, f, 1.0, schr, quad);
    const double q3 = evaluate_T(3, one, f, f, 1.0, schr, quad);
    CHECK(q2 > 0.0);
    CHECK(q3 > 0.0);
}

TEST_CASE("positivity of the split on random nonnegative states") {
    auto g = make_grid(GridScheme::gauss_composite, 48, 8.0);
    for (unsigned seed : {1u, 2u, 3u}) {
        auto f = random_positive_state(g, seed);
        auto split = evaluate_Q_general(f, schr, QuadSpec{16, 8, 16});
        for (std::size_t i = 0; i < g->size(); ++i) {
            CHECK(split.gain[i] >= 0.0);
            CHECK(split.q2[i] >= 0.0);
            CHECK(split.q3[i] >= 0.0);
        }
    }
}

TEST_CASE("exchange symmetry T1(f,g,h) = T1(f,h,g) holds exactly") {
    auto g = make_grid(GridScheme::gauss_composite, 48, 8.0);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 3; ++trial) {
        auto a = random_positive_state(g, 10 + trial);
        auto b = random_positive_state(g, 20 + trial);
        auto c = random_positive_state(g, 30 + trial);
        const double p = 0.5 + 0.4 * trial;
        const QuadSpec quad{16, 8, 16};
        const double lhs = evaluate_T(1, a, b, c, p, schr, quad);
        const double rhs = evaluate_T(1, a, c, b, p, schr, quad);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("homogeneity: trilinear scaling to 1e-10") {
    auto g = make_grid(GridScheme::gauss_composite, 48, 8.0);
    auto a = random_positive_state(g, 41);
    auto b = random_positive_state(g, 42);
    auto c = random_positive_state(g, 43);
    auto scale_state = [&](const DistributionState& s, double k) {
        auto v = s.values;
        for (auto& x : v) x *= k;
        return make_state(s.grid, v);
    };
    const QuadSpec quad{16, 8, 16};
    const double base = evaluate_T(1, a, b, c, 1.0, schr, quad);
    const double scaled =
        evaluate_T(1, scale_state(a, 2.0), scale_state(b, 0.5), scale_state(c, 3.0), 1.0, schr, quad);
    CHECK(scaled == doctest::Approx(3.0 * base).epsilon(1e-10));
}

TEST_CASE("smoothed-delta oracle for T1 on gaussian data, both dispersions") {
    auto g = make_grid(GridScheme::gauss_composite, 128, 8.0);
    auto f = sample_function(g, SampleFamily::gaussian, {1.0}, schr);
    auto gauss = [](double r) { return std::exp(-r * r); };
    const QuadSpec quad{32, 16, 32};
    for (const DispersionRelation* disp : {&schr, &bog}) {
        for (double p : {0.8, 1.6}) {
            const double direct = evaluate_T(1, f, f, f, p, *disp, quad);
            const double oracle = testing::smoothed_T1(p, *disp, gauss, gauss, gauss, 1e-3, 8.0);
            CHECK(direct == doctest::Approx(oracle).epsilon(2e-2));
        }
    }
}

TEST_CASE("weak-form conservation shrinks under quadrature refinement") {
    auto g = make_grid(GridScheme::gauss_composite, 64, 8.0);
    auto f = sample_function(g, SampleFamily::gaussian, {1.0}, schr);
    auto functionals = [&](const QuadSpec& quad) {
        auto split = evaluate_Q_general(f, schr, quad);
        double mass = 0.0, energy = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < g->size(); ++i) {
            const double w = 4.0 * M_PI * g->weights[i] * g->nodes[i] * g->nodes[i];
            mass += w * split.q[i];
            energy += w * schr.omega(g->nodes[i]) * split.q[i];
            scale += w * (split.gain[i] + f.values[i] * (split.q2[i] + 2.0 * split.q3[i]));
        }
        return std::array<double, 3>{std::abs(mass) / scale, std::abs(energy) / scale, scale};
    };
    const auto coarse = functionals(QuadSpec{16, 8, 16});
    const auto fine = functionals(QuadSpec{48, 24, 48});
    CHECK(fine[0] < 1e-3);
    CHECK(fine[1] < 1e-3);
    CHECK(fine[0] <= coarse[0]);
    CHECK(fine[1] <= coarse[1]);
}

TEST_CASE("cross-path constant 4 pi^2 against the 1D reduction, componentwise") {
    auto g = make_grid(GridScheme::gauss_composite, 128, 8.0);
    for (auto family : {SampleFamily::gaussian, SampleFamily::rayleigh_jeans}) {
        // The slowly decaying stationary family needs finer orders to reach
        // the tolerance; the gaussian is converged at the defaults.
        const bool slow_decay = family == SampleFamily::rayleigh_jeans;
        const QuadSpec quad = slow_decay ? QuadSpec{64, 32, 64} : QuadSpec{32, 16, 32};
        const std::vector<double> params =
            family == SampleFamily::gaussian ? std::vector<double>{1.0} : std::vector<double>{1.0, 1.0};
        auto f = sample_function(g, family, params, schr);
        auto split3d = evaluate_Q_general(f, schr, quad);
        auto split1d = evaluate_Q_1d(f, slow_decay ? 256 : 128);
        double max_t1 = 0.0;
        for (std::size_t i = 0; i < g->size(); ++i) max_t1 = std::max(max_t1, split1d.gain[i]);
        int checked = 0;
        for (std::size_t i = 0; i < g->size(); i += 3) {
            if (split1d.gain[i] < 1e-6 * max_t1) continue;
            ++checked;
            CHECK(split3d.gain[i] / split1d.gain[i] == doctest::Approx(kFourPiSq).epsilon(5e-3));
            CHECK(split3d.q2[i] / split1d.q2[i] == doctest::Approx(kFourPiSq).epsilon(5e-3));
            CHECK(split3d.q3[i] / split1d.q3[i] == doctest::Approx(kFourPiSq).epsilon(5e-3));
        }
        CHECK(checked > 20);
    }
}
