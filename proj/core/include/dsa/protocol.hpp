#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dsa/deployment.hpp"
#include "dsa/gf2.hpp"

namespace dsa {

enum class PacketFlag : std::uint8_t {
    kInitialization = 0,
    kUpdate = 1,
};

// packet(ID, x, flag): sensor ID, fixed-size payload, init/update flag.
struct Packet {
    std::uint32_t sensor_id = 0;
    BitVector payload;  // length c; an update carries the XOR-delta old^new
    PacketFlag flag = PacketFlag::kInitialization;
};

// What a storage node does with an initialization packet once all slots are
// occupied. The node accepts the packet either way; only the buffer update
// differs.
enum class OverflowPolicy : std::uint8_t {
    // Treat the whole buffer as the update target y_j: XOR the packet into
    // every slot. Default; reproduces the radio-range decoding falloff.
    kXorAllSlots = 0,
    // XOR the packet into one uniformly random slot.
    kXorRandomSlot = 1,
};

// Which referencing slots an update packet is applied to.
enum class UpdatePolicy : std::uint8_t {
    // Every slot whose coefficient bit for the sensor is set. Keeps all slot
    // equations consistent with the sensor's new value.
    kAllReferencingSlots = 0,
    // Only the first referencing slot; leaves later references stale.
    kFirstReferencingSlot = 1,
};

struct StoragePolicy {
    OverflowPolicy overflow = OverflowPolicy::kXorAllSlots;
    UpdatePolicy update = UpdatePolicy::kAllReferencingSlots;
};

// Buffer state of one storage node: epsilon slot equations, filled in order.
// Slots at index >= occupied are all-zero.
struct StorageNodeState {
    std::uint32_t node_index = 0;
    std::size_t sensor_count = 0;  // coefficient width k
    std::size_t payload_bits = 0;  // c
    std::vector<Equation> slots;   // length epsilon
    std::size_t next_free = 0;
    std::uint64_t dropped_updates = 0;  // updates that referenced no slot

    static StorageNodeState empty(std::uint32_t node_index, std::size_t epsilon,
                                  std::size_t sensor_count, std::size_t payload_bits);

    std::size_t epsilon() const { return slots.size(); }
    std::size_t occupied() const { return next_free; }

    // Applies one packet in place. `slot_rng` is consumed only by the
    // kXorRandomSlot overflow path. Throws UnknownSensorIdError /
    // LengthMismatchError.
    void accept(const Packet& packet, std::mt19937_64& slot_rng, const StoragePolicy& policy = {});
};

/// Value-returning form of StorageNodeState::accept.
StorageNodeState store_packet(StorageNodeState node, const Packet& packet, std::mt19937_64& slot_rng,
                              const StoragePolicy& policy = {});

// R_{s_i} per sensor and its inverse. Built once per deployment during the
// clustering (beacon) phase.
struct ClusterMap {
    std::vector<std::vector<std::uint32_t>> sensor_to_storage;  // R_{s_i}, ascending
    std::vector<std::vector<std::uint32_t>> storage_to_sensors;  // ascending

    bool is_orphan(std::size_t sensor) const { return sensor_to_storage[sensor].empty(); }
    std::size_t orphan_count() const;
};

ClusterMap clustering_phase(const Deployment& d, RadioParams radio);

// Everything one trial needs after dissemination: geometry, cluster map,
// loaded buffers, and the planted ground truth the decoder is checked against.
struct NetworkState {
    Deployment deployment;
    RadioParams radio;
    ClusterMap cluster_map;
    std::vector<StorageNodeState> storage_states;  // n-k entries
    std::vector<BitVector> ground_truth;           // k payloads
    std::uint64_t seed = 0;
    StoragePolicy policy;

    std::size_t sensor_count() const { return ground_truth.size(); }
    std::size_t storage_count() const { return storage_states.size(); }
    std::size_t payload_bits() const { return ground_truth.empty() ? 0 : ground_truth.front().size(); }
    std::size_t orphan_count() const { return cluster_map.orphan_count(); }
};

struct Delivery {
    Packet packet;
    std::uint32_t storage_index = 0;
};

/// Initialization packets of the sensing phase: each non-orphan sensor emits
/// one flag=0 packet carrying its ground-truth payload to every storage node
/// in R_{s_i}. Deliveries are ordered by sensor index, then storage index.
std::vector<Delivery> sensing_phase(const NetworkState& state);

/// Full clustering + sensing + storage pipeline over a deployment.
/// Ground-truth payloads and any overflow slot choices come from a single
/// generator seeded with `seed`, so the result is a pure function of its
/// arguments.
NetworkState run_dissemination(const Deployment& d, RadioParams radio, std::size_t epsilon,
                               std::size_t payload_bits, std::uint64_t seed,
                               const StoragePolicy& policy = {});

}  // namespace dsa
