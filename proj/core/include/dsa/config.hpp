#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dsa/protocol.hpp"

namespace dsa {

enum class SweepKind : std::uint8_t {
    kEta = 0,    // P_s vs query ratio, one curve per n
    kRadio = 1,  // P_s vs delta/L at fixed eta, one curve per n
    kNodes = 2,  // P_s vs n at fixed eta and delta
};

std::string_view sweep_name(SweepKind kind);

// Full description of one Monte Carlo experiment. Everything a sweep produces
// is a pure function of this struct (base_seed included).
struct ExperimentConfig {
    double side_length = 100.0;                            // L
    std::vector<std::size_t> n_list = {250, 500, 1000, 1500};
    double storage_fraction = 0.2;
    std::vector<double> delta_list = {10.0};               // absolute distance units
    std::size_t epsilon = 160;
    std::size_t payload_bits = 64;
    std::vector<double> eta_grid = {0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.4, 0.5, 0.75, 1.0};
    std::size_t trials = 200;
    std::uint64_t base_seed = 0x0D5A'0001;
    SweepKind sweep = SweepKind::kEta;
    StoragePolicy policy;

    // Throws ConfigError naming the offending key.
    void validate() const;
};

/// Parses the flat `key = value` format (one key per line, `#` comments,
/// lists comma-separated). Unknown keys and malformed values raise
/// ConfigError with the key name. Keys not present keep their defaults;
/// `sweep` is required.
ExperimentConfig parse_config_text(std::string_view text);

/// Loads and parses a config file. A missing file raises ConfigError whose
/// message contains the path.
ExperimentConfig load_config_file(const std::filesystem::path& path);

/// Canonical key=value rendering of a config; parses back to an equal config.
std::string config_to_text(const ExperimentConfig& config);

}  // namespace dsa
