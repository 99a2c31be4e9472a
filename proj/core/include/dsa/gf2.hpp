#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dsa/bitvector.hpp"

namespace dsa {

// One buffer-slot equation: the payload accumulator together with the GF(2)
// coefficient vector over the k sensors. The payload always equals the XOR of
// the current values of exactly the sensors whose coefficient bit is set.
struct Equation {
    BitVector coeffs;   // length k
    BitVector payload;  // length c

    bool is_empty() const { return coeffs.none() && payload.none(); }
};

// Union of the slot equations collected from queried storage nodes.
struct LinearSystem {
    std::size_t unknowns = 0;  // k
    std::vector<Equation> rows;
};

/// XOR-accumulate one sensor packet into an equation: flips the sensor's
/// coefficient bit and XORs the payload. Throws LengthMismatchError or
/// std::out_of_range for a bad sensor index.
Equation xor_accumulate(Equation eq, std::size_t sensor_index, const BitVector& payload);

struct EliminationResult {
    std::size_t rank = 0;
    std::vector<std::uint32_t> recovered;  // sorted sensor indices
    std::vector<BitVector> payloads;       // parallel to `recovered`

    std::optional<BitVector> payload_for(std::uint32_t sensor) const;
};

/// Gauss-Jordan elimination over GF(2), carrying payloads through every row
/// operation. A sensor is recovered iff the reduced system contains its unit
/// row. Throws CorruptSystemError if reduction exposes an inconsistent row
/// (zero coefficients, nonzero payload).
EliminationResult eliminate(const LinearSystem& sys);

/// Number of sensors recoverable from the system (the k' of the revealed
/// sensors ratio).
std::size_t recoverable_count(const LinearSystem& sys);

}  // namespace dsa
