#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "wavekin/grid.hpp"

using namespace wavekin;

namespace {
const auto schr = make_dispersion(DispersionKind::schrodinger, {});

double weight_sum(const RadialGrid& g) {
    return std::accumulate(g.weights.begin(), g.weights.end(), 0.0);
}
}  // namespace

TEST_CASE("make_grid: weight sums reproduce the interval length") {
    auto g1 = make_grid(GridScheme::uniform_composite, 10, 1.0);
    CHECK(weight_sum(*g1) == doctest::Approx(1.0).epsilon(1e-12));
    auto g2 = make_grid(GridScheme::gauss_composite, 64, 16.0);
    CHECK(weight_sum(*g2) == doctest::Approx(16.0).epsilon(1e-12));
}

TEST_CASE("make_grid: nodes strictly increasing, positive weights, below cutoff") {
    for (auto scheme : {GridScheme::uniform_composite, GridScheme::gauss_composite}) {
        auto g = make_grid(scheme, 48, 12.5);
        for (std::size_t i = 0; i < g->size(); ++i) {
            CHECK(g->weights[i] > 0.0);
            CHECK(g->nodes[i] <= g->r_max);
            if (i > 0) CHECK(g->nodes[i] > g->nodes[i - 1]);
        }
    }
}

TEST_CASE("make_grid errors") {
    CHECK_THROWS_AS(make_grid(GridScheme::gauss_composite, 4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(GridScheme::gauss_composite, 64, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid("chebyshev", 64, 1.0), std::invalid_argument);
}

TEST_CASE("gauss-composite: polynomial exactness and a smooth integral") {
    auto g = make_grid(GridScheme::gauss_composite, 64, 16.0);
    double acc2 = 0.0, acc15 = 0.0;
    for (std::size_t i = 0; i < g->size(); ++i) {
        acc2 += g->weights[i] * g->nodes[i] * g->nodes[i];
        acc15 += g->weights[i] * std::pow(g->nodes[i] / 16.0, 15);
    }
    CHECK(acc2 == doctest::Approx(16.0 * 16.0 * 16.0 / 3.0).epsilon(1e-12));
    CHECK(acc15 == doctest::Approx(16.0 / 16.0).epsilon(1e-12));  // degree-15 exact per panel

    auto g2 = make_grid(GridScheme::gauss_composite, 128, 32.0);
    double accg = 0.0;
    for (std::size_t i = 0; i < g2->size(); ++i)
        accg += g2->weights[i] * std::exp(-g2->nodes[i] * g2->nodes[i]);
    CHECK(accg == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-8));
}

TEST_CASE("integrate_moment: gaussian closed forms") {
    auto g = make_grid(GridScheme::gauss_composite, 128, 16.0);
    auto f = sample_function(g, SampleFamily::gaussian, {1.0}, schr);
    CHECK(integrate_moment(f, schr, MomentKind::mass) ==
          doctest::Approx(std::pow(M_PI, 1.5)).epsilon(1e-10));
    CHECK(integrate_moment(f, schr, MomentKind::energy) ==
          doctest::Approx(1.5 * std::pow(M_PI, 1.5)).epsilon(1e-10));
    CHECK(integrate_moment(f, schr, MomentKind::momentum) == 0.0);

    auto zero = make_state(g, std::vector<double>(g->size(), 0.0));
    CHECK(integrate_moment(zero, schr, MomentKind::mass) == 0.0);
    CHECK_THROWS_AS(integrate_moment(zero, schr, MomentKind::entropy_arg), std::domain_error);
}

TEST_CASE("weighted_norm: identity cancellation, zero state, gaussian L2") {
    auto g = make_grid(GridScheme::gauss_composite, 128, 16.0);
    const double s = 2.5;
    auto f = sample_function(g, SampleFamily::weighted_power, {s}, schr);
    CHECK(weighted_norm(f, {NormSpace::sup_weighted, s, 0.0}, schr) ==
          doctest::Approx(1.0).epsilon(1e-12));

    auto zero = make_state(g, std::vector<double>(g->size(), 0.0));
    for (auto space : {NormSpace::sup_weighted, NormSpace::l2_weighted, NormSpace::energy_l1})
        CHECK(weighted_norm(zero, {space, 1.0, 0.0}, schr) == 0.0);

    auto gauss = sample_function(g, SampleFamily::gaussian, {1.0}, schr);
    const double expected = std::sqrt(std::pow(M_PI, 1.5) / (2.0 * std::sqrt(2.0)));
    CHECK(weighted_norm(gauss, {NormSpace::l2_weighted, 0.0, 0.0}, schr) ==
          doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("sample_function: closed-form values on the nodes") {
    auto g = make_grid(GridScheme::gauss_composite, 64, 8.0);
    auto rj = sample_function(g, SampleFamily::rayleigh_jeans, {1.0, 1.0}, schr);
    auto rj2 = sample_function(g, SampleFamily::rayleigh_jeans, {0.5, 2.0}, schr);
    auto gauss = sample_function(g, SampleFamily::gaussian, {1.0}, schr);
    for (std::size_t i = 0; i < g->size(); i += 7) {
        const double r = g->nodes[i];
        CHECK(rj.values[i] == doctest::Approx(1.0 / (1.0 + r * r)).epsilon(1e-14));
        CHECK(rj2.values[i] == doctest::Approx(1.0 / (0.5 + 2.0 * r * r)).epsilon(1e-14));
        CHECK(gauss.values[i] == doctest::Approx(std::exp(-r * r)).epsilon(1e-14));
    }
    // Substitution anchors of the family formulas.
    CHECK(1.0 / (1.0 + schr.omega(1.0)) == doctest::Approx(0.5));
    CHECK(1.0 / (0.5 + 2.0 * schr.omega(2.0)) == doctest::Approx(1.0 / 8.5));
    CHECK(interpolate(rj, 1.0) == doctest::Approx(0.5).epsilon(1e-6));

    CHECK_THROWS_AS(sample_function(g, SampleFamily::rayleigh_jeans, {-100.0, 1.0}, schr),
                    std::invalid_argument);
}

TEST_CASE("interpolate: node reproduction, truncation, closed-form accuracy") {
    auto g = make_grid(GridScheme::gauss_composite, 128, 6.0);
    auto f = sample_function(g, SampleFamily::gaussian, {1.0}, schr);
    for (std::size_t i = 0; i < g->size(); i += 17)
        CHECK(interpolate(f, g->nodes[i]) == f.values[i]);
    CHECK(interpolate(f, 6.0001) == 0.0);
    CHECK(interpolate(f, 100.0) == 0.0);
    CHECK(std::abs(interpolate(f, 1.234) - std::exp(-1.234 * 1.234)) < 1e-6);
    // Left clamp below the first node
    CHECK(interpolate(f, 0.0) == f.values[0]);
    CHECK_THROWS_AS(interpolate(f, -0.5), std::domain_error);
}

TEST_CASE("interpolation error decays at order >= 3 under refinement") {
    auto err_for = [](int n) {
        auto g = make_grid(GridScheme::gauss_composite, n, 8.0);
        auto f = sample_function(g, SampleFamily::gaussian, {1.0}, schr);
        StateEvaluator fe(f);
        double m = 0.0;
        for (int k = 0; k < 400; ++k) {
            const double r = 0.3 + (6.0 - 0.3) * k / 399.0;
            m = std::max(m, std::abs(fe(r) - std::exp(-r * r)));
        }
        return m;
    };
    const double e1 = err_for(32), e2 = err_for(64), e3 = err_for(128);
    const double order12 = std::log2(e1 / e2);
    const double order23 = std::log2(e2 / e3);
    CHECK(order12 >= 2.5);
    CHECK(order23 >= 2.5);
}

TEST_CASE("pchip interpolation of nonnegative data never dips negative") {
    auto g = make_grid(GridScheme::gauss_composite, 48, 10.0);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> v(g->size());
    for (auto& x : v) {
        const double u = dist(rng);
        x = u < 0.3 ? 0.0 : u;  // plateaus of zeros next to bumps
    }
    auto f = make_state(g, v);
    StateEvaluator fe(f);
    for (int k = 0; k <= 2000; ++k) {
        const double r = 10.0 * k / 2000.0;
        CHECK(fe(r) >= 0.0);
    }
}

TEST_CASE("state construction guards") {
    auto g = make_grid(GridScheme::gauss_composite, 16, 4.0);
    CHECK_THROWS_AS(make_state(g, std::vector<double>(3, 1.0)), std::invalid_argument);
    std::vector<double> bad(g->size(), 1.0);
    bad[2] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(make_state(g, bad), std::invalid_argument);
}
