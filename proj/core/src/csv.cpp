#include "dsa/csv.hpp"

#include <cstdio>
#include <sstream>

#include "dsa/errors.hpp"

namespace dsa {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    return fields;
}

}  // namespace

std::string curve_to_csv(const std::vector<CurvePoint>& points) {
    std::string out{kCsvHeader};
    out.push_back('\n');
    for (const auto& p : points) {
        out += sweep_name(p.sweep);
        out += ',';
        out += format_double(p.x);
        out += ',';
        out += format_double(p.ps);
        out += ',';
        out += format_double(p.ps_stderr);
        out += ',';
        out += format_double(p.rho_mean);
        out += ',';
        out += std::to_string(p.trials);
        out += ',';
        out += std::to_string(p.n);
        out += ',';
        out += format_double(p.delta);
        out += ',';
        out += std::to_string(p.epsilon);
        out += ',';
        out += format_double(p.eta);
        out += '\n';
    }
    return out;
}

std::vector<CurvePoint> parse_curve_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw CsvError("empty CSV input");
    if (line != kCsvHeader)
        throw CsvError("unexpected CSV header: '" + line + "'");

    std::vector<CurvePoint> points;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_row(line);
        if (fields.size() != 10)
            throw CsvError("line " + std::to_string(line_no) + ": expected 10 fields, got " +
                           std::to_string(fields.size()));
        CurvePoint p;
        try {
            if (fields[0] == "eta")
                p.sweep = SweepKind::kEta;
            else if (fields[0] == "radio")
                p.sweep = SweepKind::kRadio;
            else if (fields[0] == "n")
                p.sweep = SweepKind::kNodes;
            else
                throw CsvError("unknown sweep '" + fields[0] + "'");
            p.x = std::stod(fields[1]);
            p.ps = std::stod(fields[2]);
            p.ps_stderr = std::stod(fields[3]);
            p.rho_mean = std::stod(fields[4]);
            p.trials = std::stoul(fields[5]);
            p.n = std::stoul(fields[6]);
            p.delta = std::stod(fields[7]);
            p.epsilon = std::stoul(fields[8]);
            p.eta = std::stod(fields[9]);
        } catch (const CsvError&) {
            throw;
        } catch (const std::exception&) {
            throw CsvError("line " + std::to_string(line_no) + ": malformed numeric field");
        }
        points.push_back(p);
    }
    if (points.empty()) throw CsvError("CSV has a header but no data rows");
    return points;
}

}  // namespace dsa
