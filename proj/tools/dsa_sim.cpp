// dsa_sim: command line front end. Subcommands:
//   simulate   - run a sweep from a key=value config, write CSV + manifest
//   analyze    - evaluate the closed-form buffer/coverage results
//   emit-plots - turn a sweep CSV into a standalone gnuplot script

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsa/analysis.hpp"
#include "dsa/collector.hpp"
#include "dsa/csv.hpp"
#include "dsa/errors.hpp"
#include "dsa/harness.hpp"
#include "dsa/plotscript.hpp"
#include "dsa/rng.hpp"
#include "dsa/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dsa::ConfigError("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << content;
}

std::string payload_hex(const dsa::BitVector& v) {
    std::string hex;
    char buf[20];
    for (const auto word : v.words()) {
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(word));
        hex += buf;
    }
    return hex;
}

// Diagnostic dump of one trial of the first sweep point: deployment, cluster
// structure, buffer contents, and the metrics over the eta grid.
json dump_trial(const dsa::ExperimentConfig& config, std::size_t trial_index) {
    const std::size_t n = config.n_list.front();
    const double delta = config.delta_list.front();
    const std::uint64_t instance = dsa::instance_seed(config.base_seed, 0, trial_index);

    const dsa::Deployment d = dsa::deploy(n, config.storage_fraction,
                                          dsa::Region{config.side_length},
                                          dsa::derive_seed(instance, dsa::kDeployStream));
    const dsa::NetworkState state =
        dsa::run_dissemination(d, dsa::RadioParams{delta}, config.epsilon, config.payload_bits,
                               dsa::derive_seed(instance, dsa::kDisseminationStream), config.policy);

    json out;
    out["trial"] = trial_index;
    out["instance_seed"] = instance;
    out["n"] = n;
    out["k"] = state.sensor_count();
    out["storage_nodes"] = state.storage_count();
    out["delta"] = delta;
    out["epsilon"] = config.epsilon;
    out["orphans"] = state.orphan_count();

    json sensors = json::array();
    for (std::size_t i = 0; i < d.sensor_count(); ++i)
        sensors.push_back({{"x", d.sensor_positions[i].x},
                           {"y", d.sensor_positions[i].y},
                           {"storage_in_range", state.cluster_map.sensor_to_storage[i]}});
    out["sensors"] = std::move(sensors);

    json nodes = json::array();
    for (const auto& node : state.storage_states) {
        json slots = json::array();
        for (std::size_t s = 0; s < node.occupied(); ++s) {
            json coeffs = json::array();
            for (std::size_t i = 0; i < state.sensor_count(); ++i)
                if (node.slots[s].coeffs.test(i)) coeffs.push_back(i);
            slots.push_back({{"coeffs", std::move(coeffs)},
                             {"payload_hex", payload_hex(node.slots[s].payload)}});
        }
        nodes.push_back({{"node", node.node_index},
                         {"x", d.storage_positions[node.node_index].x},
                         {"y", d.storage_positions[node.node_index].y},
                         {"occupied", node.occupied()},
                         {"slots", std::move(slots)}});
    }
    out["storage"] = std::move(nodes);

    json metrics = json::array();
    const std::uint64_t query_seed = dsa::derive_seed(instance, dsa::kQueryStream);
    for (const double eta : config.eta_grid) {
        const dsa::QueryPlan plan = dsa::select_query(state.storage_count(), eta, query_seed);
        const dsa::TrialMetrics m = dsa::evaluate_trial(state, plan);
        metrics.push_back({{"eta", m.eta},
                           {"rho", m.rho},
                           {"all_recovered", m.all_recovered},
                           {"rank", m.rank},
                           {"queried", plan.selection}});
    }
    out["metrics"] = std::move(metrics);
    return out;
}

int cmd_simulate(const std::string& config_path, const std::string& manifest_path,
                 std::optional<std::uint64_t> seed_override,
                 std::optional<std::size_t> trials_override, const std::string& out_dir,
                 std::optional<std::size_t> dump_trial_index) {
    dsa::ExperimentConfig config;
    try {
        if (!manifest_path.empty()) {
            const json manifest = json::parse(read_file(manifest_path));
            if (!manifest.contains("config_text"))
                throw dsa::ConfigError("manifest has no config_text field: " + manifest_path);
            config = dsa::parse_config_text(manifest["config_text"].get<std::string>());
        } else {
            config = dsa::load_config_file(config_path);
        }
        if (seed_override) config.base_seed = *seed_override;
        if (trials_override) config.trials = *trials_override;
        config.validate();
    } catch (const dsa::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "config error: bad manifest: " << e.what() << "\n";
        return 1;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        const auto points = dsa::run_sweep(config);
        const double duration =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        fs::create_directories(out_dir);
        const std::string csv_name = "sweep_" + std::string(dsa::sweep_name(config.sweep)) + ".csv";
        const fs::path csv_path = fs::path(out_dir) / csv_name;
        write_file(csv_path, dsa::curve_to_csv(points));

        json manifest;
        manifest["tool"] = dsa::kToolName;
        manifest["version"] = dsa::kToolVersion;
        manifest["base_seed"] = config.base_seed;
        manifest["sweep"] = dsa::sweep_name(config.sweep);
        manifest["config_text"] = dsa::config_to_text(config);
        manifest["outputs"] = {{"csv", csv_name}};
        manifest["duration_seconds"] = duration;
        manifest["threads"] = dsa::worker_threads();
        write_file(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");

        if (dump_trial_index) {
            write_file(fs::path(out_dir) / "trial_dump.json",
                       dump_trial(config, *dump_trial_index).dump(2) + "\n");
        }

        std::cout << "wrote " << csv_path.string() << " (" << points.size() << " points, "
                  << config.trials << " trials/point)\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_analyze(std::size_t n, std::size_t k, double delta, double side_length,
                std::size_t epsilon, std::optional<double> x, std::optional<double> y) {
    try {
        const dsa::Position pos{x.value_or(side_length / 2.0), y.value_or(side_length / 2.0)};
        const dsa::AnalyticalParams params =
            dsa::params_at_position(n, k, delta, side_length, epsilon, pos);

        char buf[64];
        auto print = [&buf](const char* key, double v) {
            std::snprintf(buf, sizeof(buf), "%.9g", v);
            std::cout << key << "=" << buf << "\n";
        };
        std::cout << "buffer_condition=" << (dsa::buffer_condition(params) ? "true" : "false")
                  << "\n";
        print("clipped_coverage_area", dsa::geometric_coverage_factor(params) * side_length *
                                           side_length);
        print("outside_area", params.outside_area);
        print("coverage_factor", dsa::geometric_coverage_factor(params));
        print("p_sensor_at_storage", dsa::p_sensor_at_storage(params));
        print("p_sensor_at_all_storage", dsa::p_sensor_at_all_storage(params));
        print("log_p_sensor_at_all_storage", dsa::log_p_sensor_at_all_storage(params));
        print("p_all_sensors_at_storage", dsa::p_all_sensors_at_storage(params));
        print("log_p_all_sensors_at_storage", dsa::log_p_all_sensors_at_storage(params));
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 1;
    }
}

int cmd_emit_plots(const std::string& csv_path, const std::string& out_dir) {
    try {
        const auto points = dsa::parse_curve_csv(read_file(csv_path));
        const std::string stem = "plot_" + std::string(dsa::sweep_name(points.front().sweep));
        fs::create_directories(out_dir);
        const fs::path script_path = fs::path(out_dir) / (stem + ".gp");
        write_file(script_path, dsa::emit_plot_script(points, stem + ".png"));
        std::cout << "wrote " << script_path.string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "plot error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DSA-I distributed data collection simulator"};
    app.set_version_flag("--version", std::string(dsa::kToolName) + " " +
                                          std::string(dsa::kToolVersion));
    app.require_subcommand(1);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "run a sweep from a config file");
    std::string config_path;
    std::string manifest_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed_override;
    std::optional<std::size_t> trials_override;
    std::optional<std::size_t> dump_index;
    simulate->add_option("config", config_path, "key=value config file");
    simulate->add_option("--from-manifest", manifest_path,
                         "re-run the config embedded in a manifest.json");
    simulate->add_option("--seed", seed_override, "override base_seed");
    simulate->add_option("--trials", trials_override, "override trials per point");
    simulate->add_option("--out", out_dir, "output directory (default .)");
    simulate->add_option("--dump-trial", dump_index,
                         "also write trial_dump.json for this trial of the first point");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "evaluate the closed-form results");
    std::size_t a_n = 1000, a_k = 800, a_epsilon = 0;
    double a_delta = 10.0, a_side = 100.0;
    std::optional<double> a_x, a_y;
    analyze->add_option("--n", a_n, "total node count")->required();
    analyze->add_option("--k", a_k, "sensor count")->required();
    analyze->add_option("--delta", a_delta, "storage covering radius")->required();
    analyze->add_option("--epsilon", a_epsilon, "buffer slots per storage node")->required();
    analyze->add_option("--L", a_side, "region side length (default 100)");
    analyze->add_option("--x", a_x, "storage node x (default center)");
    analyze->add_option("--y", a_y, "storage node y (default center)");

    // emit-plots
    auto* plots = app.add_subcommand("emit-plots", "emit a gnuplot script for a sweep CSV");
    std::string csv_path;
    std::string plot_out = ".";
    plots->add_option("csv", csv_path, "CSV written by simulate")->required();
    plots->add_option("--out", plot_out, "output directory (default .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (simulate->parsed()) {
        if (config_path.empty() && manifest_path.empty()) {
            std::cerr << "config error: simulate needs a config file or --from-manifest\n";
            return 1;
        }
        return cmd_simulate(config_path, manifest_path, seed_override, trials_override, out_dir,
                            dump_index);
    }
    if (analyze->parsed()) return cmd_analyze(a_n, a_k, a_delta, a_side, a_epsilon, a_x, a_y);
    if (plots->parsed()) return cmd_emit_plots(csv_path, plot_out);
    return 1;
}
