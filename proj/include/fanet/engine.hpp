#pragma once

#include <deque>
#include <memory>
#include <queue>
#include <vector>

#include "fanet/config.hpp"
#include "fanet/graph.hpp"
#include "fanet/metrics.hpp"
#include "fanet/mobility.hpp"
#include "fanet/protocol.hpp"

namespace fanet {

struct FlowStats {
    int flow_id = 0;
    int src = -1;
    int dst = -1;
    std::uint64_t sent = 0;
    std::uint64_t delivered = 0;
    LossCounts losses;
    std::uint64_t in_flight_at_end = 0;

    bool conserved() const {
        return sent == delivered + losses.total() + in_flight_at_end;
    }
};

struct DeliveredPacket {
    int flow_id = 0;
    std::uint8_t seq = 0;
    int src = 0;
    int dst = 0;
    double emit_time = 0.0;
    double deliver_time = 0.0;
    std::vector<int> path; // nodes actually traversed, src..dst
    std::vector<HopRecord> hops;
};

struct MobilitySample {
    int tick = 0;
    int node_id = 0;
    int group_id = 0;
    Role role = Role::Ordinary;
    Vec3 position;
};

struct RunResult {
    std::uint64_t seed = 0;
    MetricsRecord metrics;
    std::vector<FlowStats> flows;
    std::vector<DeliveredPacket> deliveries;
    std::vector<ProtoLogEvent> events;          // trace_events
    std::vector<MobilitySample> mobility_trace; // trace_mobility
    bool conservation_ok = true;
};

/// Deterministic event loop binding mobility, topology, the routing
/// protocol and per-node transmit queues. Identical (config, seed)
/// yields bit-identical results.
class Simulation : public NetContext {
public:
    Simulation(const ScenarioConfig& config, std::uint64_t seed);
    ~Simulation() override;

    RunResult run();

    // NetContext
    double now() const override { return now_; }
    int tick_index() const override { return current_tick_; }
    double tick_duration() const override { return config_.mobility.tick; }
    const ConnectivityGraph& snapshot() override;
    bool in_range(int a, int b) const override;
    int node_count() const override;
    int group_count() const override;
    int group_of(int node) const override;
    int leader_of_group(int group) const override;
    void send_unicast(int from, int to, Frame frame) override;
    void send_broadcast(int from, Frame frame) override;
    void deliver(int node, DataPacket packet) override;
    void drop_data(DataPacket packet, LossReason reason) override;
    void schedule_timer(double delay, int node, std::uint64_t token) override;
    void log_event(int node, ProtoEventKind kind, int flow, int seq,
                   double aux) override;
    const ProtocolConfig& proto_config() const override {
        return config_.protocol_params;
    }

private:
    enum class EventKind { MobilityTick, TrafficGen, TxEnd, Rx, Timer };

    struct Event {
        double time = 0.0;
        std::uint64_t order = 0;
        EventKind kind = EventKind::MobilityTick;
        int node = -1;  // TxEnd/Rx/Timer target; TrafficGen flow id
        int aux = 0;    // MobilityTick index; TrafficGen emission index; Rx sender
        std::uint64_t token = 0;
        std::shared_ptr<Frame> frame; // Rx payload
    };
    struct EventLater {
        bool operator()(const Event& a, const Event& b) const {
            if (a.time != b.time)
                return a.time > b.time;
            return a.order > b.order;
        }
    };

    struct QueuedFrame {
        Frame frame;
        int to = -1; // -1 = broadcast
    };
    struct TxState {
        std::deque<QueuedFrame> queue;
        bool busy = false;
        QueuedFrame current;
        double tx_start = 0.0;
        int tx_start_tick = 0;
    };
    struct ActiveTx {
        double start = 0.0;
        double end = 0.0;
        int sender = -1;
        Vec3 sender_pos;
    };

    void schedule(double time, EventKind kind, int node, int aux,
                  std::uint64_t token = 0, std::shared_ptr<Frame> frame = {});
    void dispatch(const Event& ev);
    void handle_mobility_tick(int tick);
    void handle_traffic(int flow_id, int emission_index);
    void service_queue(int node);
    void handle_tx_end(int node);
    void handle_rx(int node, int from, Frame frame);
    void record_mobility_trace(int tick);
    void enqueue_frame(int from, QueuedFrame qf);
    bool reception_collided(int receiver, double start, double end) const;

    ScenarioConfig config_;
    std::uint64_t seed_;
    std::unique_ptr<Protocol> protocol_;
    std::unique_ptr<MobilitySim> mobility_;
    std::vector<Flow> flows_; // endpoints resolved

    std::priority_queue<Event, std::vector<Event>, EventLater> events_;
    std::uint64_t next_order_ = 0;
    double now_ = 0.0;
    int current_tick_ = 0;

    std::unique_ptr<ConnectivityGraph> snapshot_;
    bool snapshot_valid_ = false;

    std::vector<TxState> tx_;
    std::deque<ActiveTx> active_tx_;

    // Packet accounting: uid -> flow, and whether it reached an outcome.
    std::vector<int> packet_flow_;
    std::vector<char> packet_resolved_;
    std::uint64_t next_uid_ = 0;

    RunResult result_;
};

/// Convenience wrapper: construct, run, return.
RunResult run_scenario(const ScenarioConfig& config, std::uint64_t seed);

/// Rebuilds the metrics record from a protocol event stream; with the
/// full stream this reproduces the in-run record exactly.
MetricsRecord metrics_from_events(const std::vector<ProtoLogEvent>& events);

} // namespace fanet
