#pragma once

#include <cstdint>
#include <vector>

#include "dsa/gf2.hpp"
#include "dsa/protocol.hpp"

namespace dsa {

// Which h of the n' storage nodes the collector queries.
struct QueryPlan {
    std::size_t h = 0;
    std::vector<std::uint32_t> selection;  // distinct storage indices, query order
    std::uint64_t seed = 0;
};

// Per-trial results: query ratio eta = h/n', revealed sensors ratio
// rho = k'/k, and the all-recovered indicator behind P_s.
struct TrialMetrics {
    double eta = 0.0;
    double rho = 0.0;
    bool all_recovered = false;
    std::size_t rank = 0;
    std::size_t recovered_count = 0;
    std::size_t orphan_count = 0;
};

/// Chooses h = round(eta * nprime) storage nodes (at least 1) uniformly
/// without replacement. The selection is the h-prefix of one seeded
/// permutation, so plans with the same seed are nested across eta.
/// Throws InvalidEtaError unless 0 < eta <= 1.
QueryPlan select_query(std::size_t nprime, double eta, std::uint64_t seed);

/// All occupied slots of the queried nodes, in plan order then slot order.
LinearSystem assemble_system(const NetworkState& state, const QueryPlan& plan);

/// Assembles, decodes, and scores one query. Every recovered payload is
/// checked against the planted ground truth; a mismatch throws
/// PayloadMismatchError.
TrialMetrics evaluate_trial(const NetworkState& state, const QueryPlan& plan);

}  // namespace dsa
