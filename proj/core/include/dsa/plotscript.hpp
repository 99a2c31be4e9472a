#pragma once

#include <string>
#include <vector>

#include "dsa/harness.hpp"

namespace dsa {

/// Renders a self-contained gnuplot script for one sweep's points: inline
/// data blocks, P_s vs the sweep variable with error bars, one series per n.
/// Throws CsvError when the points are empty or mix sweep kinds.
std::string emit_plot_script(const std::vector<CurvePoint>& points, const std::string& output_png);

}  // namespace dsa
