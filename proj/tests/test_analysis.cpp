#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "dsa/analysis.hpp"
#include "dsa/rng.hpp"
#include "support/oracles.hpp"

using namespace dsa;

namespace {
constexpr double kPi = std::numbers::pi;

AnalyticalParams base_params() {
    // Reference scale: n=1000, k=800, delta=10, L=100, eps=160, disc fully inside.
    return AnalyticalParams{1000, 800, 10.0, 100.0, 160, 0.0};
}
}  // namespace

TEST_CASE("buffer_condition: boundary and large-buffer configuration") {
    AnalyticalParams p = base_params();
    p.epsilon = 4;  // 4 >= 800/200
    CHECK(buffer_condition(p));
    p.epsilon = 3;
    CHECK_FALSE(buffer_condition(p));
    p.epsilon = 160;
    CHECK(buffer_condition(p));
}

TEST_CASE("buffer_condition: monotone in epsilon, antitone in k") {
    AnalyticalParams p = base_params();
    bool previous = false;
    for (std::size_t eps = 1; eps <= 10; ++eps) {
        p.epsilon = eps;
        const bool now = buffer_condition(p);
        if (previous) CHECK(now);  // once true, stays true
        previous = now;
    }
    // Decreasing k (same n, epsilon) can only turn the condition on.
    p.epsilon = 4;
    previous = false;
    for (std::size_t k = 950; k >= 50; k -= 50) {
        p.k = k;
        const bool now = buffer_condition(p);
        if (previous) CHECK(now);
        previous = now;
    }
    CHECK(previous);  // smallest k satisfies it
}

TEST_CASE("p_sensor_at_storage: central disc at reference scale") {
    const AnalyticalParams p = base_params();
    CHECK(geometric_coverage_factor(p) == doctest::Approx(kPi * 100.0 / 1e4).epsilon(1e-12));
    CHECK(p_sensor_at_storage(p) == doctest::Approx(kPi * 100.0 / 1e4 / 800.0).epsilon(1e-12));
    CHECK(p_sensor_at_storage(p) == doctest::Approx(3.9269908169872414e-05).epsilon(1e-9));
}

TEST_CASE("p_sensor_at_storage: vanishing radio range") {
    AnalyticalParams p = base_params();
    p.delta = 1e-6;
    CHECK(p_sensor_at_storage(p) < 1e-12);
}

TEST_CASE("AnalyticalParams: disc fully outside is rejected") {
    AnalyticalParams p = base_params();
    p.outside_area = kPi * p.delta * p.delta;  // a == pi delta^2
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    // Approaching the boundary drives the value to zero.
    p.outside_area = kPi * p.delta * p.delta * (1.0 - 1e-12);
    CHECK(p_sensor_at_storage(p) < 1e-12);
}

TEST_CASE("p_sensor_at_all_storage: power identities") {
    AnalyticalParams p = base_params();
    p.n = p.k + 1;  // n-k = 1
    CHECK(p_sensor_at_all_storage(p) == doctest::Approx(p_sensor_at_storage(p)).epsilon(1e-12));
    p.n = p.k + 2;
    const double v = p_sensor_at_storage(p);
    CHECK(p_sensor_at_all_storage(p) == doctest::Approx(v * v).epsilon(1e-12));
}

TEST_CASE("p_sensor_at_all_storage: reference configuration underflows, log stays finite") {
    const AnalyticalParams p = base_params();
    CHECK(p_sensor_at_all_storage(p) == 0.0);
    const double expected_log = 200.0 * std::log(3.9269908169872414e-05);
    CHECK(log_p_sensor_at_all_storage(p) == doctest::Approx(expected_log).epsilon(1e-9));
}

TEST_CASE("p_all_sensors_at_storage: power identities and monotonicity in k") {
    AnalyticalParams p{10, 1, 10.0, 100.0, 4, 0.0};
    CHECK(p_all_sensors_at_storage(p) == doctest::Approx(p_sensor_at_storage(p)).epsilon(1e-12));

    AnalyticalParams p2{10, 2, 10.0, 100.0, 4, 0.0};
    const double v = p_sensor_at_storage(p2);
    CHECK(p_all_sensors_at_storage(p2) == doctest::Approx(v * v).epsilon(1e-12));

    double previous = 1.0;
    for (std::size_t k = 1; k <= 8; ++k) {
        AnalyticalParams pk{20, k, 10.0, 100.0, 4, 0.0};
        const double now = p_all_sensors_at_storage(pk);
        CHECK(now < previous);
        previous = now;
    }
}

TEST_CASE("log-space forms agree with linear forms at moderate scale") {
    const AnalyticalParams p{12, 6, 30.0, 100.0, 4, 0.0};
    CHECK(std::exp(log_p_sensor_at_all_storage(p)) ==
          doctest::Approx(p_sensor_at_all_storage(p)).epsilon(1e-9));
    CHECK(std::exp(log_p_all_sensors_at_storage(p)) ==
          doctest::Approx(p_all_sensors_at_storage(p)).epsilon(1e-9));
}

TEST_CASE("params_at_position: geometric factor in (0,1] and corner/center values") {
    const AnalyticalParams center = params_at_position(1000, 800, 10, 100, 160, {50, 50});
    CHECK(center.outside_area == doctest::Approx(0.0).epsilon(1e-9));
    const AnalyticalParams corner = params_at_position(1000, 800, 10, 100, 160, {0, 0});
    CHECK(geometric_coverage_factor(corner) ==
          doctest::Approx(kPi * 100.0 / 4.0 / 1e4).epsilon(1e-9));
    CHECK(geometric_coverage_factor(center) > 0.0);
    CHECK(geometric_coverage_factor(center) <= 1.0);
}

TEST_CASE("geometric factor matches Monte Carlo coverage within 3 standard errors") {
    std::mt19937_64 gen(1234);
    const Position pos{7.0, 33.0};
    const AnalyticalParams p = params_at_position(1000, 800, 10, 100, 160, pos);
    const double factor = geometric_coverage_factor(p);
    constexpr std::size_t kSamples = 1'000'000;
    const double estimate = test::mc_clipped_area(pos, 10, 100, kSamples, gen) / 1e4;
    CHECK(std::abs(estimate - factor) <= 3.0 * std::sqrt(factor * (1 - factor) / kSamples));
}
