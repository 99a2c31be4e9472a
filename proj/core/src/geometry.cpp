#include "dsa/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dsa {

double distance(Position a, Position b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

bool in_range(Position a, Position b, RadioParams radio) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy <= radio.delta * radio.delta;
}

bool contains(const Region& region, Position p) {
    return p.x >= 0.0 && p.x <= region.side_length && p.y >= 0.0 && p.y <= region.side_length;
}

namespace {

struct Vec {
    double x, y;
};

double cross(Vec a, Vec b) { return a.x * b.y - a.y * b.x; }
double dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y; }

// Signed area swept from the origin along the circular arc of radius r from
// the direction of p to the direction of q. Both subtend < pi here because
// the origin lies inside the polygon. atan2(0, 0) == 0 covers the degenerate
// case of a vertex coinciding with the disc center.
double sector_area(double r, Vec p, Vec q) {
    return 0.5 * r * r * std::atan2(cross(p, q), dot(p, q));
}

// Contribution of one directed polygon edge a -> b (coordinates relative to
// the disc center) to the disc/polygon intersection area: the chord part of
// the edge inside the disc contributes a triangle, the rest circular sectors.
double edge_contribution(Vec a, Vec b, double r) {
    const Vec d{b.x - a.x, b.y - a.y};
    const double dd = dot(d, d);
    if (dd == 0.0) return 0.0;

    const double half_b = dot(a, d);
    const double c = dot(a, a) - r * r;
    const double disc = half_b * half_b - dd * c;
    if (disc <= 0.0) return sector_area(r, a, b);  // line misses the disc

    const double sq = std::sqrt(disc);
    const double t_enter = std::max((-half_b - sq) / dd, 0.0);
    const double t_exit = std::min((-half_b + sq) / dd, 1.0);
    if (t_enter >= t_exit) return sector_area(r, a, b);  // chord outside the segment

    const Vec p{a.x + t_enter * d.x, a.y + t_enter * d.y};
    const Vec q{a.x + t_exit * d.x, a.y + t_exit * d.y};
    return sector_area(r, a, p) + 0.5 * cross(p, q) + sector_area(r, q, b);
}

}  // namespace

double clipped_coverage_area(Position center, RadioParams radio, const Region& region) {
    if (region.side_length <= 0.0) throw std::invalid_argument("region side length must be positive");
    if (radio.delta <= 0.0) throw std::invalid_argument("radio delta must be positive");
    if (!contains(region, center)) throw std::invalid_argument("disc center must lie inside the region");

    const double L = region.side_length;
    const double r = radio.delta;
    // Square corners counter-clockwise, relative to the disc center.
    const Vec corner[4] = {{0.0 - center.x, 0.0 - center.y},
                           {L - center.x, 0.0 - center.y},
                           {L - center.x, L - center.y},
                           {0.0 - center.x, L - center.y}};

    double area = 0.0;
    for (int i = 0; i < 4; ++i) area += edge_contribution(corner[i], corner[(i + 1) % 4], r);

    const double full = std::numbers::pi * r * r;
    return std::clamp(area, 0.0, full);
}

}  // namespace dsa
