#pragma once

#include <cstdint>
#include <vector>

#include "dsa/collector.hpp"
#include "dsa/config.hpp"

namespace dsa {

// One aggregated sweep point: the independent variable x, the estimated
// successful decoding probability with its binomial standard error, and the
// mean revealed sensors ratio. The fixed parameters of the point ride along
// so a point maps 1:1 onto a CSV row.
struct CurvePoint {
    SweepKind sweep = SweepKind::kEta;
    double x = 0.0;
    double ps = 0.0;
    double ps_stderr = 0.0;
    double rho_mean = 0.0;
    double rho_stderr = 0.0;  // sample stderr of rho; diagnostic, not in the CSV
    std::size_t trials = 0;
    std::size_t n = 0;
    double delta = 0.0;
    std::size_t epsilon = 0;
    double eta = 0.0;
};

/// Worker count for trial parallelism: DSA_SIM_THREADS, where unset or 0
/// means hardware concurrency.
unsigned worker_threads();

/// Metrics of every (trial, eta) pair for one n: trials x |eta_grid|, with
/// common random numbers across the eta grid — each trial runs deployment and
/// dissemination once and evaluates nested query prefixes, so rho is
/// non-decreasing in eta within a trial, exactly.
std::vector<std::vector<TrialMetrics>> eta_trial_matrix(const ExperimentConfig& config,
                                                        std::size_t n, std::size_t curve_index);

/// One sweep point at fixed (n, delta, eta): `trials` independent trials with
/// instance seeds base_seed + trial * stride + point_index.
CurvePoint run_point(const ExperimentConfig& config, std::size_t n, double delta, double eta,
                     SweepKind sweep, double x, std::uint64_t point_index);

/// One point per eta grid value per n.
std::vector<CurvePoint> sweep_eta(const ExperimentConfig& config);

/// One point per delta per n at fixed eta = eta_grid.front(); x is delta/L
/// (radio-range effect curves).
std::vector<CurvePoint> sweep_radio(const ExperimentConfig& config);

/// One point per n at fixed delta = delta_list.front(), eta = eta_grid.front().
std::vector<CurvePoint> sweep_nodes(const ExperimentConfig& config);

/// Dispatches on config.sweep.
std::vector<CurvePoint> run_sweep(const ExperimentConfig& config);

}  // namespace dsa
