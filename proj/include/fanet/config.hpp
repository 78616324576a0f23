#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fanet/metrics.hpp"
#include "fanet/mobility.hpp"
#include "fanet/protocol.hpp"

namespace fanet {

enum class ProtocolKind { BcDsr, AodvLite, DsrLite };
enum class Propagation { Ideal, LightSpeed };
enum class CollisionMode { Ideal, ReceiverOverlap };

std::string to_string(ProtocolKind k);
std::string to_string(MobilityModel m);
ProtocolKind protocol_from_string(const std::string& s);
MobilityModel mobility_from_string(const std::string& s);

struct LinkModel {
    double comm_range = 250.0;    // meters
    double data_rate_bps = 2e6;   // link speed
    Propagation propagation = Propagation::Ideal;
    CollisionMode collision = CollisionMode::ReceiverOverlap;
};

/// One constant-bit-rate flow. src/dst of -1 select random cross-group
/// endpoints under the scenario seed.
struct Flow {
    int src = -1;
    int dst = -1;
    double rate_bps = 100e3;
    std::size_t payload_bytes = 1000;
    double start = 1.0;
    double stop = 99.0;
};

struct TrafficSpec {
    std::vector<Flow> flows;
};

struct ScenarioConfig {
    ProtocolKind protocol = ProtocolKind::BcDsr;
    FormationConfig formation;
    MobilityModel mobility_model = MobilityModel::Gmg;
    RpgReferenceLaw rpg_reference_law = RpgReferenceLaw::GaussMarkov;
    MobilityParams mobility;
    LinkModel link;
    TrafficSpec traffic;
    ProtocolConfig protocol_params;
    std::size_t queue_capacity = 64; // per-node transmit queue, packets
    double sim_time = 100.0;
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    JitterMode jitter_mode = JitterMode::PaperLiteral;
    bool trace_mobility = false;
    bool trace_events = false;

    int node_count() const {
        return formation.groups * formation.nodes_per_group;
    }

    /// Throws ConfigError with every violated invariant itemized.
    void validate() const;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses and validates a scenario file (JSON). Unknown keys anywhere
/// are hard errors. Every field of the result is fully resolved, so
/// echoing it reproduces the identical run.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig parse_config(const std::string& json_text);

/// Self-describing echo with every default materialized; parse_config
/// on the result yields the identical configuration.
std::string config_echo(const ScenarioConfig& config);

} // namespace fanet
