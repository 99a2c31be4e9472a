#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dsa/harness.hpp"

namespace dsa {

inline constexpr std::string_view kCsvHeader = "sweep,x,ps,ps_stderr,rho_mean,trials,n,delta,epsilon,eta";

/// Stable CSV rendering: fixed column order, doubles at 9 significant digits,
/// every row newline-terminated.
std::string curve_to_csv(const std::vector<CurvePoint>& points);

/// Parses a CSV produced by curve_to_csv. Throws CsvError on a bad header,
/// malformed row, or empty body.
std::vector<CurvePoint> parse_curve_csv(std::string_view text);

}  // namespace dsa
