#pragma once

#include <cstdint>
#include <vector>

#include "dsa/geometry.hpp"

namespace dsa {

// One random placement of k sensors and n-k storage nodes, reproducible from
// its seed.
struct Deployment {
    Region region;
    std::vector<Position> sensor_positions;   // k entries
    std::vector<Position> storage_positions;  // n-k entries
    std::uint64_t seed = 0;

    std::size_t sensor_count() const { return sensor_positions.size(); }
    std::size_t storage_count() const { return storage_positions.size(); }
    std::size_t total_count() const { return sensor_count() + storage_count(); }
};

/// Uniform i.i.d. placement over the region. Storage count is
/// floor(n * storage_fraction); the rest are sensors. Sensor positions are
/// drawn first, then storage positions, from a single generator seeded with
/// `seed`, so the whole deployment is a pure function of its arguments.
/// Throws InvalidFractionError if either side would be empty.
Deployment deploy(std::size_t n, double storage_fraction, Region region, std::uint64_t seed);

/// Sensor indices within radio range of the given storage node (ascending).
/// Throws IndexOutOfBoundsError.
std::vector<std::uint32_t> neighbors_of_storage(const Deployment& d, std::size_t storage_index,
                                                RadioParams radio);

}  // namespace dsa
