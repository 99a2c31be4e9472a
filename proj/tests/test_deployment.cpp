#include <doctest.h>

#include <random>
#include <stdexcept>

#include "dsa/deployment.hpp"
#include "dsa/errors.hpp"

using namespace dsa;

TEST_CASE("deploy: n=1000 split and bounds") {
    const Deployment d = deploy(1000, 0.2, Region{100}, 1);
    CHECK(d.sensor_count() == 800);
    CHECK(d.storage_count() == 200);
    for (const auto& p : d.sensor_positions) CHECK(contains(d.region, p));
    for (const auto& p : d.storage_positions) CHECK(contains(d.region, p));
}

TEST_CASE("deploy: minimal deployment") {
    const Deployment d = deploy(2, 0.5, Region{100}, 99);
    CHECK(d.sensor_count() == 1);
    CHECK(d.storage_count() == 1);
}

TEST_CASE("deploy: same seed, bitwise-identical positions") {
    const Deployment a = deploy(1000, 0.2, Region{100}, 7);
    const Deployment b = deploy(1000, 0.2, Region{100}, 7);
    REQUIRE(a.sensor_count() == b.sensor_count());
    for (std::size_t i = 0; i < a.sensor_count(); ++i) {
        CHECK(a.sensor_positions[i].x == b.sensor_positions[i].x);
        CHECK(a.sensor_positions[i].y == b.sensor_positions[i].y);
    }
    for (std::size_t i = 0; i < a.storage_count(); ++i) {
        CHECK(a.storage_positions[i].x == b.storage_positions[i].x);
        CHECK(a.storage_positions[i].y == b.storage_positions[i].y);
    }
}

TEST_CASE("deploy: different seeds differ") {
    const Deployment a = deploy(100, 0.2, Region{100}, 1);
    const Deployment b = deploy(100, 0.2, Region{100}, 2);
    bool all_equal = true;
    for (std::size_t i = 0; i < a.sensor_count(); ++i)
        if (a.sensor_positions[i].x != b.sensor_positions[i].x) all_equal = false;
    CHECK_FALSE(all_equal);
}

TEST_CASE("deploy: invalid fractions") {
    CHECK_THROWS_AS(deploy(10, 0.05, Region{100}, 1), InvalidFractionError);  // zero storage
    CHECK_THROWS_AS(deploy(10, 0.0, Region{100}, 1), InvalidFractionError);
    CHECK_THROWS_AS(deploy(10, 1.0, Region{100}, 1), InvalidFractionError);
    CHECK_THROWS_AS(deploy(1, 0.5, Region{100}, 1), InvalidFractionError);  // n too small
}

TEST_CASE("neighbors_of_storage: trivial memberships") {
    Deployment d;
    d.region = Region{100};
    d.sensor_positions = {{50, 50}};
    d.storage_positions = {{50, 50}};
    CHECK(neighbors_of_storage(d, 0, RadioParams{1}) == std::vector<std::uint32_t>{0});

    d.sensor_positions = {{0, 0}};
    d.storage_positions = {{100, 100}};
    CHECK(neighbors_of_storage(d, 0, RadioParams{10}).empty());
}

TEST_CASE("neighbors_of_storage: index out of bounds") {
    const Deployment d = deploy(10, 0.2, Region{100}, 3);
    CHECK_THROWS_AS(neighbors_of_storage(d, d.storage_count(), RadioParams{10}),
                    IndexOutOfBoundsError);
}

TEST_CASE("neighbors_of_storage equals a pairwise distance scan") {
    const Deployment d = deploy(300, 0.2, Region{100}, 17);
    const RadioParams radio{12.0};
    for (std::size_t j = 0; j < d.storage_count(); ++j) {
        std::vector<std::uint32_t> expected;
        for (std::size_t i = 0; i < d.sensor_count(); ++i) {
            const double dist = distance(d.storage_positions[j], d.sensor_positions[i]);
            if (dist <= radio.delta) expected.push_back(static_cast<std::uint32_t>(i));
        }
        CHECK(neighbors_of_storage(d, j, radio) == expected);
    }
}
