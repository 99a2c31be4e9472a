#include "dsa/gf2.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dsa/errors.hpp"

namespace dsa {

Equation xor_accumulate(Equation eq, std::size_t sensor_index, const BitVector& payload) {
    if (sensor_index >= eq.coeffs.size())
        throw std::out_of_range("sensor index " + std::to_string(sensor_index) +
                                " exceeds coefficient width " + std::to_string(eq.coeffs.size()));
    eq.coeffs.flip(sensor_index);
    eq.payload ^= payload;
    return eq;
}

std::optional<BitVector> EliminationResult::payload_for(std::uint32_t sensor) const {
    const auto it = std::lower_bound(recovered.begin(), recovered.end(), sensor);
    if (it == recovered.end() || *it != sensor) return std::nullopt;
    return payloads[static_cast<std::size_t>(it - recovered.begin())];
}

EliminationResult eliminate(const LinearSystem& sys) {
    std::vector<Equation> rows = sys.rows;  // working copy
    const std::size_t k = sys.unknowns;

    for (const auto& row : rows)
        if (row.coeffs.size() != k)
            throw LengthMismatchError("row coefficient width " + std::to_string(row.coeffs.size()) +
                                      " does not match unknown count " + std::to_string(k));

    // Forward pass with full (Jordan) elimination: after processing column c,
    // exactly one row carries bit c.
    std::size_t pivot_rows = 0;
    std::vector<std::size_t> pivot_col;  // column of rows[0..pivot_rows)
    for (std::size_t col = 0; col < k && pivot_rows < rows.size(); ++col) {
        std::size_t found = rows.size();
        for (std::size_t r = pivot_rows; r < rows.size(); ++r) {
            if (rows[r].coeffs.test(col)) {
                found = r;
                break;
            }
        }
        if (found == rows.size()) continue;
        std::swap(rows[pivot_rows], rows[found]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != pivot_rows && rows[r].coeffs.test(col)) {
                rows[r].coeffs ^= rows[pivot_rows].coeffs;
                rows[r].payload ^= rows[pivot_rows].payload;
            }
        }
        pivot_col.push_back(col);
        ++pivot_rows;
    }

    // Rows past the pivots were reduced to zero coefficients; a surviving
    // payload there means the input rows contradicted each other.
    for (std::size_t r = pivot_rows; r < rows.size(); ++r)
        if (rows[r].payload.any())
            throw CorruptSystemError("inconsistent system: zero row with nonzero payload");

    EliminationResult result;
    result.rank = pivot_rows;
    for (std::size_t r = 0; r < pivot_rows; ++r) {
        if (rows[r].coeffs.count() == 1) {
            result.recovered.push_back(static_cast<std::uint32_t>(pivot_col[r]));
            result.payloads.push_back(std::move(rows[r].payload));
        }
    }
    // Pivot columns are produced in increasing order, so `recovered` is sorted.
    return result;
}

std::size_t recoverable_count(const LinearSystem& sys) { return eliminate(sys).recovered.size(); }

}  // namespace dsa
