#include "dsa/plotscript.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "dsa/errors.hpp"

namespace dsa {

namespace {

const char* x_axis_label(SweepKind kind) {
    switch (kind) {
        case SweepKind::kEta: return "query ratio eta";
        case SweepKind::kRadio: return "delta / L";
        case SweepKind::kNodes: return "total nodes n";
    }
    return "x";
}

}  // namespace

std::string emit_plot_script(const std::vector<CurvePoint>& points, const std::string& output_png) {
    if (points.empty()) throw CsvError("no data points to plot");
    const SweepKind kind = points.front().sweep;
    for (const auto& p : points)
        if (p.sweep != kind) throw CsvError("plot input mixes sweep kinds");

    // One series per n, in first-appearance order.
    std::vector<std::size_t> series;
    for (const auto& p : points)
        if (std::find(series.begin(), series.end(), p.n) == series.end()) series.push_back(p.n);

    std::ostringstream out;
    out << "# gnuplot script generated by dsa-sim; run: gnuplot <this file>\n";
    out << "set terminal pngcairo size 960,640\n";
    out << "set output '" << output_png << "'\n";
    out << "set xlabel '" << x_axis_label(kind) << "'\n";
    out << "set ylabel 'successful decoding probability'\n";
    out << "set yrange [-0.05:1.05]\n";
    out << "set key bottom right\n";
    out << "set grid\n";

    char buf[128];
    for (std::size_t s = 0; s < series.size(); ++s) {
        out << "$series_" << s << " << EOD\n";
        for (const auto& p : points) {
            if (p.n != series[s]) continue;
            std::snprintf(buf, sizeof(buf), "%.9g %.9g %.9g\n", p.x, p.ps, p.ps_stderr);
            out << buf;
        }
        out << "EOD\n";
    }

    out << "plot ";
    for (std::size_t s = 0; s < series.size(); ++s) {
        if (s) out << ", \\\n     ";
        out << "$series_" << s << " using 1:2:3 with yerrorlines title 'n=" << series[s] << "'";
    }
    out << "\n";
    return out.str();
}

}  // namespace dsa
