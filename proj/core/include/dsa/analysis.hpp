#pragma once

#include <cstddef>

#include "dsa/geometry.hpp"

namespace dsa {

// Inputs to the closed-form results: network sizes, radio range, region side,
// buffer count, and the clipped outside-area a of a representative storage
// node (a = pi*delta^2 - clipped_coverage_area).
struct AnalyticalParams {
    std::size_t n = 0;
    std::size_t k = 0;
    double delta = 0.0;
    double side_length = 0.0;  // L
    std::size_t epsilon = 0;
    double outside_area = 0.0;  // a, in [0, pi*delta^2)

    // Throws std::invalid_argument on any violated invariant.
    void validate() const;
};

/// Params with `outside_area` derived from the exact clipped coverage area of
/// a storage node at the given position.
AnalyticalParams params_at_position(std::size_t n, std::size_t k, double delta, double side_length,
                                    std::size_t epsilon, Position storage_position);

/// Buffer-sufficiency condition: epsilon >= k/(n-k), compared as reals.
bool buffer_condition(const AnalyticalParams& p);

/// (pi*delta^2 - a) / L^2 — the in-region fraction of one storage node's
/// radio disc; equals the probability that a uniform sensor lands in range.
double geometric_coverage_factor(const AnalyticalParams& p);

/// (pi*delta^2 - a) / (L^2 k) — the geometric factor times the uniform
/// sensor-choice probability 1/k.
double p_sensor_at_storage(const AnalyticalParams& p);

/// p_sensor_at_storage to the power n-k, and its natural log. The linear form
/// underflows to 0 at realistic sizes; the log form stays finite.
double p_sensor_at_all_storage(const AnalyticalParams& p);
double log_p_sensor_at_all_storage(const AnalyticalParams& p);

/// p_sensor_at_storage to the power k, and its natural log.
double p_all_sensors_at_storage(const AnalyticalParams& p);
double log_p_all_sensors_at_storage(const AnalyticalParams& p);

}  // namespace dsa
