#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "dsa/geometry.hpp"
#include "dsa/rng.hpp"
#include "support/oracles.hpp"

using namespace dsa;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("in_range: zero distance") {
    CHECK(in_range({50, 50}, {50, 50}, RadioParams{1.0}));
}

TEST_CASE("in_range: 3-4-5 triangle, boundary inclusive") {
    CHECK(in_range({0, 0}, {3, 4}, RadioParams{5.0}));
    CHECK_FALSE(in_range({0, 0}, {3, 4}, RadioParams{4.999}));
}

TEST_CASE("in_range: just past the boundary") {
    CHECK_FALSE(in_range({50, 50}, {50, 60.0001}, RadioParams{10.0}));
}

TEST_CASE("in_range is symmetric") {
    std::mt19937_64 gen(11);
    for (int i = 0; i < 500; ++i) {
        const Position a{uniform_unit(gen) * 100, uniform_unit(gen) * 100};
        const Position b{uniform_unit(gen) * 100, uniform_unit(gen) * 100};
        const RadioParams radio{uniform_unit(gen) * 30 + 0.001};
        CHECK(in_range(a, b, radio) == in_range(b, a, radio));
    }
}

TEST_CASE("clipped_coverage_area: disc fully inside") {
    const double area = clipped_coverage_area({50, 50}, RadioParams{10}, Region{100});
    CHECK(area == doctest::Approx(kPi * 100.0).epsilon(1e-12));
}

TEST_CASE("clipped_coverage_area: exact corner gives a quarter disc") {
    const double area = clipped_coverage_area({0, 0}, RadioParams{10}, Region{100});
    CHECK(area == doctest::Approx(kPi * 100.0 / 4.0).epsilon(1e-12));
}

TEST_CASE("clipped_coverage_area: edge midpoint gives a half disc") {
    const double area = clipped_coverage_area({0, 50}, RadioParams{10}, Region{100});
    CHECK(area == doctest::Approx(kPi * 100.0 / 2.0).epsilon(1e-12));
}

TEST_CASE("clipped_coverage_area: near-edge position matches the Monte Carlo oracle") {
    // Bounding-box sampling keeps the oracle noise at 10^7 samples well under
    // the 0.1% gate (about 7 standard errors).
    std::mt19937_64 gen(202);
    const double exact = clipped_coverage_area({5, 50}, RadioParams{10}, Region{100});
    const double estimate = test::mc_clipped_area_boxed({5, 50}, 10, 100, 10'000'000, gen);
    CHECK(std::abs(estimate - exact) / exact < 1e-3);
}

TEST_CASE("clipped_coverage_area: random positions against the Monte Carlo oracle") {
    std::mt19937_64 gen(303);
    for (int i = 0; i < 8; ++i) {
        const Position c{uniform_unit(gen) * 100, uniform_unit(gen) * 100};
        const double delta = 2.0 + uniform_unit(gen) * 38.0;
        const double exact = clipped_coverage_area(c, RadioParams{delta}, Region{100});
        const double estimate = test::mc_clipped_area(c, delta, 100, 400'000, gen);
        // 3 binomial standard errors on the hit fraction.
        const double p = exact / 1e4;
        const double tol = 3.0 * std::sqrt(p * (1 - p) / 400'000) * 1e4;
        CHECK(std::abs(estimate - exact) <= tol);
    }
}

TEST_CASE("clipped_coverage_area: bounded by the full disc, equality iff inside") {
    std::mt19937_64 gen(404);
    for (int i = 0; i < 300; ++i) {
        const Position c{uniform_unit(gen) * 100, uniform_unit(gen) * 100};
        const double delta = 0.5 + uniform_unit(gen) * 60.0;
        const double area = clipped_coverage_area(c, RadioParams{delta}, Region{100});
        const double full = kPi * delta * delta;
        CHECK(area > 0.0);
        CHECK(area <= full + 1e-9);
        const bool fully_inside = c.x >= delta && c.x <= 100 - delta && c.y >= delta &&
                                  c.y <= 100 - delta;
        if (fully_inside) CHECK(area == doctest::Approx(full).epsilon(1e-12));
        if (area >= full - 1e-9) CHECK(fully_inside);
    }
}

TEST_CASE("clipped_coverage_area respects the square's symmetries exactly") {
    std::mt19937_64 gen(606);
    for (int i = 0; i < 200; ++i) {
        const Position c{uniform_unit(gen) * 100, uniform_unit(gen) * 100};
        const RadioParams radio{0.5 + uniform_unit(gen) * 50.0};
        const Region region{100};
        const double base = clipped_coverage_area(c, radio, region);
        const double mirrored_x = clipped_coverage_area({100 - c.x, c.y}, radio, region);
        const double mirrored_y = clipped_coverage_area({c.x, 100 - c.y}, radio, region);
        const double rotated = clipped_coverage_area({c.y, 100 - c.x}, radio, region);
        CHECK(mirrored_x == doctest::Approx(base).epsilon(1e-12));
        CHECK(mirrored_y == doctest::Approx(base).epsilon(1e-12));
        CHECK(rotated == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("clipped_coverage_area rejects a center outside the region") {
    CHECK_THROWS_AS(clipped_coverage_area({-1, 50}, RadioParams{10}, Region{100}),
                    std::invalid_argument);
    CHECK_THROWS_AS(clipped_coverage_area({50, 50}, RadioParams{0}, Region{100}),
                    std::invalid_argument);
}

TEST_CASE("empirical in-range fraction converges to area / L^2") {
    // Uniform sensors against a fixed storage position, 10^6 samples,
    // 3 standard errors.
    std::mt19937_64 gen(505);
    const Position storage{12.5, 80.0};
    const double p = clipped_coverage_area(storage, RadioParams{10}, Region{100}) / 1e4;
    std::size_t hits = 0;
    constexpr std::size_t kSamples = 1'000'000;
    for (std::size_t i = 0; i < kSamples; ++i) {
        const Position s{uniform_unit(gen) * 100, uniform_unit(gen) * 100};
        if (in_range(storage, s, RadioParams{10})) ++hits;
    }
    const double freq = static_cast<double>(hits) / kSamples;
    CHECK(std::abs(freq - p) <= 3.0 * std::sqrt(p * (1 - p) / kSamples));
}
