#include "dsa/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "dsa/errors.hpp"

namespace dsa {

namespace {

std::string trim(std::string_view s) {
    const auto* begin = s.data();
    const auto* end = s.data() + s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(end[-1]))) --end;
    return std::string(begin, end);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::string current;
    std::istringstream in(value);
    while (std::getline(in, current, ',')) {
        current = trim(current);
        if (!current.empty()) items.push_back(current);
    }
    return items;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key, "expected a number, got '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError(key, "expected a non-negative integer, got '" + value + "'");
    return v;
}

}  // namespace

std::string_view sweep_name(SweepKind kind) {
    switch (kind) {
        case SweepKind::kEta: return "eta";
        case SweepKind::kRadio: return "radio";
        case SweepKind::kNodes: return "n";
    }
    return "?";
}

void ExperimentConfig::validate() const {
    if (side_length <= 0.0) throw ConfigError("L", "must be positive");
    if (n_list.empty()) throw ConfigError("n_list", "must not be empty");
    for (const auto n : n_list)
        if (n < 2) throw ConfigError("n_list", "every n must be at least 2");
    if (!(storage_fraction > 0.0 && storage_fraction < 1.0))
        throw ConfigError("storage_fraction", "must lie in (0,1)");
    if (delta_list.empty()) throw ConfigError("delta_list", "must not be empty");
    for (const auto d : delta_list)
        if (d <= 0.0) throw ConfigError("delta_list", "every delta must be positive");
    if (epsilon == 0) throw ConfigError("epsilon", "must be at least 1");
    if (payload_bits == 0) throw ConfigError("payload_bits", "must be at least 1");
    if (eta_grid.empty()) throw ConfigError("eta_grid", "must not be empty");
    for (const auto e : eta_grid)
        if (!(e > 0.0 && e <= 1.0)) throw ConfigError("eta_grid", "every eta must lie in (0,1]");
    if (trials == 0) throw ConfigError("trials", "must be at least 1");
}

ExperimentConfig parse_config_text(std::string_view text) {
    ExperimentConfig config;
    bool sweep_seen = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + " is not a key = value entry");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key on line " + std::to_string(line_no));
        if (value.empty()) throw ConfigError(key, "empty value");

        if (key == "L") {
            config.side_length = parse_double(key, value);
        } else if (key == "n_list") {
            config.n_list.clear();
            for (const auto& item : split_list(value))
                config.n_list.push_back(parse_u64(key, item));
        } else if (key == "storage_fraction") {
            config.storage_fraction = parse_double(key, value);
        } else if (key == "delta_list") {
            config.delta_list.clear();
            for (const auto& item : split_list(value))
                config.delta_list.push_back(parse_double(key, item));
        } else if (key == "epsilon") {
            config.epsilon = parse_u64(key, value);
        } else if (key == "payload_bits") {
            config.payload_bits = parse_u64(key, value);
        } else if (key == "eta_grid") {
            config.eta_grid.clear();
            for (const auto& item : split_list(value))
                config.eta_grid.push_back(parse_double(key, item));
        } else if (key == "trials") {
            config.trials = parse_u64(key, value);
        } else if (key == "base_seed") {
            config.base_seed = parse_u64(key, value);
        } else if (key == "sweep") {
            if (value == "eta")
                config.sweep = SweepKind::kEta;
            else if (value == "radio")
                config.sweep = SweepKind::kRadio;
            else if (value == "n")
                config.sweep = SweepKind::kNodes;
            else
                throw ConfigError(key, "expected eta, radio, or n; got '" + value + "'");
            sweep_seen = true;
        } else if (key == "overflow_policy") {
            if (value == "xor_all")
                config.policy.overflow = OverflowPolicy::kXorAllSlots;
            else if (value == "xor_random_slot")
                config.policy.overflow = OverflowPolicy::kXorRandomSlot;
            else
                throw ConfigError(key, "expected xor_all or xor_random_slot; got '" + value + "'");
        } else {
            throw ConfigError(key, "unknown key");
        }
    }

    if (!sweep_seen) throw ConfigError("sweep", "missing (expected eta, radio, or n)");
    config.validate();
    return config;
}

ExperimentConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

std::string config_to_text(const ExperimentConfig& config) {
    std::ostringstream out;
    out.precision(17);
    out << "L = " << config.side_length << "\n";
    out << "n_list = ";
    for (std::size_t i = 0; i < config.n_list.size(); ++i)
        out << (i ? ", " : "") << config.n_list[i];
    out << "\n";
    out << "storage_fraction = " << config.storage_fraction << "\n";
    out << "delta_list = ";
    for (std::size_t i = 0; i < config.delta_list.size(); ++i)
        out << (i ? ", " : "") << config.delta_list[i];
    out << "\n";
    out << "epsilon = " << config.epsilon << "\n";
    out << "payload_bits = " << config.payload_bits << "\n";
    out << "eta_grid = ";
    for (std::size_t i = 0; i < config.eta_grid.size(); ++i)
        out << (i ? ", " : "") << config.eta_grid[i];
    out << "\n";
    out << "trials = " << config.trials << "\n";
    out << "base_seed = " << config.base_seed << "\n";
    out << "sweep = " << sweep_name(config.sweep) << "\n";
    out << "overflow_policy = "
        << (config.policy.overflow == OverflowPolicy::kXorAllSlots ? "xor_all" : "xor_random_slot")
        << "\n";
    return out.str();
}

}  // namespace dsa
