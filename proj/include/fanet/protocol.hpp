#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "fanet/graph.hpp"
#include "fanet/metrics.hpp"
#include "fanet/packet.hpp"

namespace fanet {

struct HopRecord {
    int from = -1;
    int to = -1;
    double send_time = 0.0;
    double recv_time = 0.0;
    int send_tick = 0;
};

/// A data packet in flight. route is the full source route for the
/// source-routed protocols and {src, dst} under next-hop routing;
/// cursor indexes the node currently holding the packet within route.
struct DataPacket {
    std::uint64_t uid = 0;
    int flow_id = 0;
    std::uint8_t seq = 0;
    int src = 0;
    int dst = 0;
    std::size_t payload_bytes = 0;
    double emit_time = 0.0;
    double expiry_time = 0.0;
    std::vector<int> route;
    std::size_t cursor = 0;
    int traversed_hops = 0;
    std::vector<HopRecord> hops;

    std::size_t header_addresses() const { return route.size(); }
};

struct RreqFrame {
    int origin = 0;
    int target = 0;
    std::uint8_t id = 0;
    int hops = 0;
    std::vector<int> route; // DSR: accumulated [origin..current]; AODV: empty
};

struct RrepFrame {
    int origin = 0;
    int target = 0;
    std::vector<int> route; // DSR: full path origin..target; AODV: empty
    std::size_t cursor = 0; // DSR: index of current holder within route
};

struct RerrFrame {
    int broken_from = 0;
    int broken_to = 0;
    int src = 0; // endpoints of the failed data packet
    int dst = 0;
    std::vector<int> reverse_route; // detector .. src (BC-DSR / DSR)
    std::size_t cursor = 0;
};

struct BeaconFrame {
    int node = 0;
    std::size_t wire_bytes = 0;
};

struct Frame {
    std::variant<DataPacket, RreqFrame, RrepFrame, RerrFrame, BeaconFrame>
        payload;

    bool is_data() const {
        return std::holds_alternative<DataPacket>(payload);
    }
    PacketType type() const;
    /// Bytes on the wire; headers follow the Fig.-3 layout (4 bytes of
    /// fields plus 4 bytes per carried address), data frames add their
    /// payload, beacons use their configured size.
    std::size_t wire_bytes() const;
};

enum class IntraGroupWeights { Unit, Euclidean };

struct ProtocolConfig {
    int exp_ticks = 50;
    int max_hops = 32;
    bool beacons_enabled = true;
    double beacon_interval = 1.0; // seconds
    std::size_t beacon_bytes = 20;
    int retry_budget = 3;
    double discovery_timeout = 0.5; // seconds
    double bc_epsilon = 1e-6;
    IntraGroupWeights intra_weights = IntraGroupWeights::Unit;
    std::size_t dsr_max_routes = 4;
};

enum class ProtoEventKind {
    Emit,
    DataTx,
    Deliver,
    Drop,
    RreqTx,
    RrepTx,
    RerrTx,
    BeaconTx,
    RouteEstablished,
    RouteFailed,
};

const char* proto_event_name(ProtoEventKind k);

struct ProtoLogEvent {
    double time = 0.0;
    int tick = 0;
    int node = -1;
    ProtoEventKind kind = ProtoEventKind::Emit;
    int flow = -1;
    int seq = -1;
    std::uint64_t bytes = 0;
    double aux = 0.0; // Deliver: latency; Drop: the LossReason code
};

/// Engine services available to a protocol. All topology queries refer
/// to the current tick's positions.
class NetContext {
public:
    virtual ~NetContext() = default;

    virtual double now() const = 0;
    virtual int tick_index() const = 0;
    virtual double tick_duration() const = 0;
    virtual const ConnectivityGraph& snapshot() = 0;
    virtual bool in_range(int a, int b) const = 0;
    virtual int node_count() const = 0;
    virtual int group_count() const = 0;
    virtual int group_of(int node) const = 0;
    virtual int leader_of_group(int group) const = 0;

    virtual void send_unicast(int from, int to, Frame frame) = 0;
    virtual void send_broadcast(int from, Frame frame) = 0;
    virtual void deliver(int node, DataPacket packet) = 0;
    virtual void drop_data(DataPacket packet, LossReason reason) = 0;
    virtual void schedule_timer(double delay, int node,
                                std::uint64_t token) = 0;
    virtual void log_event(int node, ProtoEventKind kind, int flow, int seq,
                           double aux) = 0;

    virtual const ProtocolConfig& proto_config() const = 0;
};

/// Per-node route state machine, driven by the event engine. Calls are
/// strictly sequential.
class Protocol {
public:
    virtual ~Protocol() = default;

    virtual const char* name() const = 0;
    virtual void on_start(NetContext& ctx) {}
    /// A data packet became ready at its source.
    virtual void on_data(NetContext& ctx, DataPacket packet) = 0;
    /// A frame arrived at `node` from neighbor `from`.
    virtual void on_frame(NetContext& ctx, int node, int from, Frame frame) = 0;
    /// The engine found the designated next hop out of range at send
    /// time; the frame was not transmitted.
    virtual void on_send_failure(NetContext& ctx, int node, Frame frame) = 0;
    virtual void on_timer(NetContext& ctx, int node, std::uint64_t token) {}
    virtual void on_tick(NetContext& ctx, int tick) {}
};

/// Cached source routes keyed by (src, dst). Invalidated entries are
/// never returned.
class RouteCache {
public:
    struct Entry {
        std::vector<int> path;
        int created_tick = 0;
        bool valid = true;
    };

    /// First valid route for the pair, preferring the most recent.
    const Entry* lookup(int src, int dst) const;
    /// All valid routes for the pair, most recent first.
    std::vector<const Entry*> lookup_all(int src, int dst) const;
    void insert(int src, int dst, std::vector<int> path, int tick,
                std::size_t max_routes);
    /// Invalidates every cached route using the link in either direction.
    void invalidate_link(int u, int v);
    void invalidate_pair(int src, int dst);

private:
    std::map<std::pair<int, int>, std::deque<Entry>> entries_;
};

std::unique_ptr<Protocol> make_protocol(const std::string& name);

} // namespace fanet
