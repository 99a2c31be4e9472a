#include "dsa/harness.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>

#include "dsa/rng.hpp"

namespace dsa {

namespace {

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const auto threads = std::min<std::size_t>(worker_threads(), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            try {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);  // drain remaining work
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

// Deployment + dissemination for one trial instance.
NetworkState build_trial_state(const ExperimentConfig& config, std::size_t n, double delta,
                               std::uint64_t instance) {
    const Deployment d = deploy(n, config.storage_fraction, Region{config.side_length},
                                derive_seed(instance, kDeployStream));
    return run_dissemination(d, RadioParams{delta}, config.epsilon, config.payload_bits,
                             derive_seed(instance, kDisseminationStream), config.policy);
}

CurvePoint aggregate(const std::vector<TrialMetrics>& metrics, const ExperimentConfig& config,
                     std::size_t n, double delta, double eta, SweepKind sweep, double x) {
    const auto trials = static_cast<double>(metrics.size());
    double rho_sum = 0.0;
    std::size_t all_count = 0;
    for (const auto& m : metrics) {
        rho_sum += m.rho;
        if (m.all_recovered) ++all_count;
    }
    const double rho_mean = rho_sum / trials;
    double rho_var = 0.0;
    for (const auto& m : metrics) rho_var += (m.rho - rho_mean) * (m.rho - rho_mean);
    rho_var = metrics.size() > 1 ? rho_var / (trials - 1.0) : 0.0;

    CurvePoint point;
    point.sweep = sweep;
    point.x = x;
    point.ps = static_cast<double>(all_count) / trials;
    point.ps_stderr = std::sqrt(point.ps * (1.0 - point.ps) / trials);
    point.rho_mean = rho_mean;
    point.rho_stderr = std::sqrt(rho_var / trials);
    point.trials = metrics.size();
    point.n = n;
    point.delta = delta;
    point.epsilon = config.epsilon;
    point.eta = eta;
    return point;
}

}  // namespace

unsigned worker_threads() {
    if (const char* env = std::getenv("DSA_SIM_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::vector<std::vector<TrialMetrics>> eta_trial_matrix(const ExperimentConfig& config,
                                                        std::size_t n, std::size_t curve_index) {
    config.validate();
    const double delta = config.delta_list.front();
    std::vector<std::vector<TrialMetrics>> matrix(config.trials);
    parallel_for(config.trials, [&](std::size_t t) {
        const std::uint64_t instance = instance_seed(config.base_seed, curve_index, t);
        const NetworkState state = build_trial_state(config, n, delta, instance);
        const std::uint64_t query_seed = derive_seed(instance, kQueryStream);
        auto& row = matrix[t];
        row.reserve(config.eta_grid.size());
        for (const double eta : config.eta_grid) {
            // Same query seed across the grid: selections are nested prefixes
            // of one permutation.
            const QueryPlan plan = select_query(state.storage_count(), eta, query_seed);
            row.push_back(evaluate_trial(state, plan));
        }
    });
    return matrix;
}

CurvePoint run_point(const ExperimentConfig& config, std::size_t n, double delta, double eta,
                     SweepKind sweep, double x, std::uint64_t point_index) {
    config.validate();
    std::vector<TrialMetrics> metrics(config.trials);
    parallel_for(config.trials, [&](std::size_t t) {
        const std::uint64_t instance = instance_seed(config.base_seed, point_index, t);
        const NetworkState state = build_trial_state(config, n, delta, instance);
        const QueryPlan plan =
            select_query(state.storage_count(), eta, derive_seed(instance, kQueryStream));
        metrics[t] = evaluate_trial(state, plan);
    });
    return aggregate(metrics, config, n, delta, eta, sweep, x);
}

std::vector<CurvePoint> sweep_eta(const ExperimentConfig& config) {
    config.validate();
    std::vector<CurvePoint> points;
    const double delta = config.delta_list.front();
    for (std::size_t ci = 0; ci < config.n_list.size(); ++ci) {
        const std::size_t n = config.n_list[ci];
        const auto matrix = eta_trial_matrix(config, n, ci);
        for (std::size_t ei = 0; ei < config.eta_grid.size(); ++ei) {
            std::vector<TrialMetrics> column(config.trials);
            for (std::size_t t = 0; t < config.trials; ++t) column[t] = matrix[t][ei];
            points.push_back(aggregate(column, config, n, delta, config.eta_grid[ei],
                                       SweepKind::kEta, config.eta_grid[ei]));
        }
    }
    return points;
}

std::vector<CurvePoint> sweep_radio(const ExperimentConfig& config) {
    config.validate();
    std::vector<CurvePoint> points;
    const double eta = config.eta_grid.front();
    for (std::size_t ci = 0; ci < config.n_list.size(); ++ci) {
        for (std::size_t di = 0; di < config.delta_list.size(); ++di) {
            const double delta = config.delta_list[di];
            const std::uint64_t point_index = ci * config.delta_list.size() + di;
            points.push_back(run_point(config, config.n_list[ci], delta, eta, SweepKind::kRadio,
                                       delta / config.side_length, point_index));
        }
    }
    return points;
}

std::vector<CurvePoint> sweep_nodes(const ExperimentConfig& config) {
    config.validate();
    std::vector<CurvePoint> points;
    const double eta = config.eta_grid.front();
    const double delta = config.delta_list.front();
    for (std::size_t ci = 0; ci < config.n_list.size(); ++ci) {
        points.push_back(run_point(config, config.n_list[ci], delta, eta, SweepKind::kNodes,
                                   static_cast<double>(config.n_list[ci]), ci));
    }
    return points;
}

std::vector<CurvePoint> run_sweep(const ExperimentConfig& config) {
    switch (config.sweep) {
        case SweepKind::kEta: return sweep_eta(config);
        case SweepKind::kRadio: return sweep_radio(config);
        case SweepKind::kNodes: return sweep_nodes(config);
    }
    return {};
}

}  // namespace dsa
