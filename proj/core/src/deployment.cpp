#include "dsa/deployment.hpp"

#include <cmath>
#include <random>
#include <string>

#include "dsa/errors.hpp"
#include "dsa/rng.hpp"

namespace dsa {

Deployment deploy(std::size_t n, double storage_fraction, Region region, std::uint64_t seed) {
    if (region.side_length <= 0.0) throw std::invalid_argument("region side length must be positive");
    if (n < 2) throw InvalidFractionError("need at least 2 nodes, got " + std::to_string(n));
    if (!(storage_fraction > 0.0 && storage_fraction < 1.0))
        throw InvalidFractionError("storage_fraction must lie in (0,1), got " +
                                   std::to_string(storage_fraction));

    const auto storage = static_cast<std::size_t>(
        std::floor(static_cast<double>(n) * storage_fraction));
    if (storage == 0)
        throw InvalidFractionError("storage_fraction " + std::to_string(storage_fraction) +
                                   " yields zero storage nodes for n=" + std::to_string(n));
    if (storage >= n)
        throw InvalidFractionError("storage_fraction " + std::to_string(storage_fraction) +
                                   " yields zero sensors for n=" + std::to_string(n));
    const std::size_t sensors = n - storage;

    std::mt19937_64 gen(seed);
    const double L = region.side_length;
    auto draw = [&gen, L]() -> Position { return {uniform_unit(gen) * L, uniform_unit(gen) * L}; };

    Deployment d;
    d.region = region;
    d.seed = seed;
    d.sensor_positions.reserve(sensors);
    for (std::size_t i = 0; i < sensors; ++i) d.sensor_positions.push_back(draw());
    d.storage_positions.reserve(storage);
    for (std::size_t i = 0; i < storage; ++i) d.storage_positions.push_back(draw());
    return d;
}

std::vector<std::uint32_t> neighbors_of_storage(const Deployment& d, std::size_t storage_index,
                                                RadioParams radio) {
    if (storage_index >= d.storage_count())
        throw IndexOutOfBoundsError("storage index " + std::to_string(storage_index) +
                                    " out of range (have " + std::to_string(d.storage_count()) + ")");
    const Position r = d.storage_positions[storage_index];
    std::vector<std::uint32_t> result;
    for (std::size_t i = 0; i < d.sensor_count(); ++i)
        if (in_range(r, d.sensor_positions[i], radio)) result.push_back(static_cast<std::uint32_t>(i));
    return result;
}

}  // namespace dsa
