#include "dsa/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dsa {

void AnalyticalParams::validate() const {
    if (n < 2 || k == 0 || k >= n) throw std::invalid_argument("need 1 <= k < n with n >= 2");
    if (delta <= 0.0) throw std::invalid_argument("delta must be positive");
    if (side_length <= 0.0) throw std::invalid_argument("side length must be positive");
    if (epsilon == 0) throw std::invalid_argument("epsilon must be at least 1");
    const double disc_area = std::numbers::pi * delta * delta;
    if (outside_area < 0.0 || outside_area >= disc_area)
        throw std::invalid_argument("outside area a must lie in [0, pi*delta^2)");
}

AnalyticalParams params_at_position(std::size_t n, std::size_t k, double delta, double side_length,
                                    std::size_t epsilon, Position storage_position) {
    AnalyticalParams p{n, k, delta, side_length, epsilon, 0.0};
    const double covered =
        clipped_coverage_area(storage_position, RadioParams{delta}, Region{side_length});
    p.outside_area = std::numbers::pi * delta * delta - covered;
    if (p.outside_area < 0.0) p.outside_area = 0.0;  // guard rounding
    p.validate();
    return p;
}

bool buffer_condition(const AnalyticalParams& p) {
    p.validate();
    return static_cast<double>(p.epsilon) >=
           static_cast<double>(p.k) / static_cast<double>(p.n - p.k);
}

double geometric_coverage_factor(const AnalyticalParams& p) {
    p.validate();
    const double disc_area = std::numbers::pi * p.delta * p.delta;
    return (disc_area - p.outside_area) / (p.side_length * p.side_length);
}

double p_sensor_at_storage(const AnalyticalParams& p) {
    return geometric_coverage_factor(p) / static_cast<double>(p.k);
}

double p_sensor_at_all_storage(const AnalyticalParams& p) {
    return std::pow(p_sensor_at_storage(p), static_cast<double>(p.n - p.k));
}

double log_p_sensor_at_all_storage(const AnalyticalParams& p) {
    return static_cast<double>(p.n - p.k) * std::log(p_sensor_at_storage(p));
}

double p_all_sensors_at_storage(const AnalyticalParams& p) {
    return std::pow(p_sensor_at_storage(p), static_cast<double>(p.k));
}

double log_p_all_sensors_at_storage(const AnalyticalParams& p) {
    return static_cast<double>(p.k) * std::log(p_sensor_at_storage(p));
}

}  // namespace dsa
