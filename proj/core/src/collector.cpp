#include "dsa/collector.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "dsa/errors.hpp"
#include "dsa/rng.hpp"

namespace dsa {

QueryPlan select_query(std::size_t nprime, double eta, std::uint64_t seed) {
    if (nprime == 0) throw std::invalid_argument("no storage nodes to query");
    if (!(eta > 0.0 && eta <= 1.0))
        throw InvalidEtaError("eta must lie in (0,1], got " + std::to_string(eta));

    auto h = static_cast<std::size_t>(std::llround(eta * static_cast<double>(nprime)));
    h = std::max<std::size_t>(h, 1);
    h = std::min(h, nprime);

    // Fisher-Yates over the full index range; the plan is the h-prefix.
    std::vector<std::uint32_t> perm(nprime);
    std::iota(perm.begin(), perm.end(), 0u);
    std::mt19937_64 gen(seed);
    for (std::size_t i = nprime - 1; i > 0; --i)
        std::swap(perm[i], perm[uniform_below(gen, i + 1)]);
    perm.resize(h);

    return QueryPlan{h, std::move(perm), seed};
}

LinearSystem assemble_system(const NetworkState& state, const QueryPlan& plan) {
    LinearSystem sys;
    sys.unknowns = state.sensor_count();
    for (const std::uint32_t node_index : plan.selection) {
        if (node_index >= state.storage_count())
            throw IndexOutOfBoundsError("query plan names storage node " + std::to_string(node_index) +
                                        " but only " + std::to_string(state.storage_count()) + " exist");
        const StorageNodeState& node = state.storage_states[node_index];
        for (std::size_t s = 0; s < node.occupied(); ++s) sys.rows.push_back(node.slots[s]);
    }
    return sys;
}

TrialMetrics evaluate_trial(const NetworkState& state, const QueryPlan& plan) {
    const LinearSystem sys = assemble_system(state, plan);
    const EliminationResult res = eliminate(sys);

    for (std::size_t i = 0; i < res.recovered.size(); ++i) {
        if (res.payloads[i] != state.ground_truth[res.recovered[i]])
            throw PayloadMismatchError("decoded payload of sensor " +
                                       std::to_string(res.recovered[i]) +
                                       " disagrees with ground truth");
    }

    const auto k = static_cast<double>(state.sensor_count());
    TrialMetrics m;
    m.eta = static_cast<double>(plan.h) / static_cast<double>(state.storage_count());
    m.rho = static_cast<double>(res.recovered.size()) / k;
    m.all_recovered = res.recovered.size() == state.sensor_count();
    m.rank = res.rank;
    m.recovered_count = res.recovered.size();
    m.orphan_count = state.orphan_count();
    return m;
}

}  // namespace dsa
