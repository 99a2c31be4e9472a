#pragma once

#include <cstddef>

namespace dsa {

// Square deployment region [0, L] x [0, L].
struct Region {
    double side_length = 0.0;  // L > 0
};

struct Position {
    double x = 0.0;
    double y = 0.0;
};

// Covering radius delta shared by all storage nodes.
struct RadioParams {
    double delta = 0.0;  // > 0
};

double distance(Position a, Position b);

// Boundary-inclusive range test: Euclidean distance <= delta.
bool in_range(Position a, Position b, RadioParams radio);

bool contains(const Region& region, Position p);

/// Exact area of the intersection of the disc (center, radius delta) with the
/// region square, by circular-segment decomposition along the square's edges.
/// center must lie inside the region (boundary inclusive). Result is in
/// (0, pi*delta^2], with the maximum reached iff the disc is fully inside.
double clipped_coverage_area(Position center, RadioParams radio, const Region& region);

}  // namespace dsa
