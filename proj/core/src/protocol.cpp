#include "dsa/protocol.hpp"

#include <stdexcept>
#include <string>

#include "dsa/errors.hpp"
#include "dsa/rng.hpp"

namespace dsa {

StorageNodeState StorageNodeState::empty(std::uint32_t node_index, std::size_t epsilon,
                                         std::size_t sensor_count, std::size_t payload_bits) {
    if (epsilon == 0) throw std::invalid_argument("epsilon must be at least 1");
    if (payload_bits == 0) throw std::invalid_argument("payload_bits must be at least 1");
    StorageNodeState node;
    node.node_index = node_index;
    node.sensor_count = sensor_count;
    node.payload_bits = payload_bits;
    node.slots.assign(epsilon, Equation{BitVector(sensor_count), BitVector(payload_bits)});
    return node;
}

void StorageNodeState::accept(const Packet& packet, std::mt19937_64& slot_rng,
                              const StoragePolicy& policy) {
    if (packet.sensor_id >= sensor_count)
        throw UnknownSensorIdError("sensor id " + std::to_string(packet.sensor_id) +
                                   " unknown (k=" + std::to_string(sensor_count) + ")");
    if (packet.payload.size() != payload_bits)
        throw LengthMismatchError("payload length " + std::to_string(packet.payload.size()) +
                                  " does not match buffer cell size " + std::to_string(payload_bits));

    if (packet.flag == PacketFlag::kInitialization) {
        if (next_free < slots.size()) {
            slots[next_free].coeffs.set(packet.sensor_id);
            slots[next_free].payload ^= packet.payload;
            ++next_free;
            return;
        }
        switch (policy.overflow) {
            case OverflowPolicy::kXorAllSlots:
                for (auto& slot : slots) {
                    slot.coeffs.flip(packet.sensor_id);
                    slot.payload ^= packet.payload;
                }
                return;
            case OverflowPolicy::kXorRandomSlot: {
                auto& slot = slots[uniform_below(slot_rng, slots.size())];
                slot.coeffs.flip(packet.sensor_id);
                slot.payload ^= packet.payload;
                return;
            }
        }
        return;
    }

    // Update packet: XOR the delta into referencing slots, coefficients
    // untouched. An update nobody references is dropped and counted.
    bool applied = false;
    for (std::size_t s = 0; s < next_free; ++s) {
        if (slots[s].coeffs.test(packet.sensor_id)) {
            slots[s].payload ^= packet.payload;
            applied = true;
            if (policy.update == UpdatePolicy::kFirstReferencingSlot) break;
        }
    }
    if (!applied) ++dropped_updates;
}

StorageNodeState store_packet(StorageNodeState node, const Packet& packet, std::mt19937_64& slot_rng,
                              const StoragePolicy& policy) {
    node.accept(packet, slot_rng, policy);
    return node;
}

std::size_t ClusterMap::orphan_count() const {
    std::size_t count = 0;
    for (const auto& r : sensor_to_storage)
        if (r.empty()) ++count;
    return count;
}

ClusterMap clustering_phase(const Deployment& d, RadioParams radio) {
    if (radio.delta <= 0.0) throw std::invalid_argument("radio delta must be positive");
    ClusterMap map;
    map.sensor_to_storage.resize(d.sensor_count());
    map.storage_to_sensors.resize(d.storage_count());
    for (std::size_t j = 0; j < d.storage_count(); ++j) {
        for (std::size_t i = 0; i < d.sensor_count(); ++i) {
            if (in_range(d.storage_positions[j], d.sensor_positions[i], radio)) {
                map.sensor_to_storage[i].push_back(static_cast<std::uint32_t>(j));
                map.storage_to_sensors[j].push_back(static_cast<std::uint32_t>(i));
            }
        }
    }
    return map;
}

std::vector<Delivery> sensing_phase(const NetworkState& state) {
    std::vector<Delivery> deliveries;
    for (std::size_t i = 0; i < state.sensor_count(); ++i) {
        for (const std::uint32_t j : state.cluster_map.sensor_to_storage[i]) {
            deliveries.push_back({Packet{static_cast<std::uint32_t>(i), state.ground_truth[i],
                                         PacketFlag::kInitialization},
                                  j});
        }
    }
    return deliveries;
}

NetworkState run_dissemination(const Deployment& d, RadioParams radio, std::size_t epsilon,
                               std::size_t payload_bits, std::uint64_t seed,
                               const StoragePolicy& policy) {
    if (epsilon == 0) throw std::invalid_argument("epsilon must be at least 1");
    if (payload_bits == 0) throw std::invalid_argument("payload_bits must be at least 1");

    NetworkState state;
    state.deployment = d;
    state.radio = radio;
    state.seed = seed;
    state.policy = policy;
    state.cluster_map = clustering_phase(d, radio);

    std::mt19937_64 gen(seed);
    state.ground_truth.reserve(d.sensor_count());
    for (std::size_t i = 0; i < d.sensor_count(); ++i)
        state.ground_truth.push_back(BitVector::random(payload_bits, gen));

    state.storage_states.reserve(d.storage_count());
    for (std::size_t j = 0; j < d.storage_count(); ++j)
        state.storage_states.push_back(StorageNodeState::empty(static_cast<std::uint32_t>(j), epsilon,
                                                               d.sensor_count(), payload_bits));

    for (const Delivery& delivery : sensing_phase(state))
        state.storage_states[delivery.storage_index].accept(delivery.packet, gen, policy);
    return state;
}

}  // namespace dsa
