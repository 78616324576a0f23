#pragma once

#include <map>
#include <set>

#include "fanet/protocol.hpp"

namespace fanet {

/// AODV-lite: RREQ flooding with duplicate suppression by (origin, id),
/// first RREQ at the target answered with a unicast RREP along the
/// reverse path, one next-hop entry per destination, RERR on break.
class AodvLiteProtocol : public Protocol {
public:
    const char* name() const override { return "aodv-lite"; }
    void on_data(NetContext& ctx, DataPacket packet) override;
    void on_frame(NetContext& ctx, int node, int from, Frame frame) override;
    void on_send_failure(NetContext& ctx, int node, Frame frame) override;
    void on_timer(NetContext& ctx, int node, std::uint64_t token) override;

private:
    struct NodeState {
        std::map<int, int> route_to;   // destination -> next hop
        std::map<int, int> reverse_to; // origin -> next hop toward origin
        std::map<int, std::uint8_t> rreq_seen; // origin -> freshest id
    };
    struct Discovery {
        std::deque<DataPacket> packets;
        std::uint8_t rreq_id = 0;
        int attempts = 0;
        bool active = false;
    };

    void start_discovery(NetContext& ctx, int src, int dst);
    void forward_data(NetContext& ctx, int node, DataPacket packet);
    void send_rerr_toward(NetContext& ctx, int node, int src, int dst,
                          int broken_from, int broken_to);

    std::map<int, NodeState> nodes_;
    std::map<std::pair<int, int>, Discovery> discoveries_; // (src, dst)
    std::map<int, std::uint8_t> next_rreq_id_;             // per origin
};

/// DSR-lite: RREQs accumulate the traversed route, the target answers
/// every arriving copy with an RREP carrying the full route, sources
/// cache several routes per destination and fail over before
/// re-flooding.
class DsrLiteProtocol : public Protocol {
public:
    const char* name() const override { return "dsr-lite"; }
    void on_data(NetContext& ctx, DataPacket packet) override;
    void on_frame(NetContext& ctx, int node, int from, Frame frame) override;
    void on_send_failure(NetContext& ctx, int node, Frame frame) override;
    void on_timer(NetContext& ctx, int node, std::uint64_t token) override;

private:
    struct Discovery {
        std::deque<DataPacket> packets;
        std::uint8_t rreq_id = 0;
        int attempts = 0;
        bool active = false;
    };

    void start_discovery(NetContext& ctx, int src, int dst);

    std::map<int, RouteCache> caches_; // per node
    std::map<int, std::map<int, std::uint8_t>> rreq_seen_; // node -> origin -> id
    std::map<std::pair<int, int>, Discovery> discoveries_;
    std::map<int, std::uint8_t> next_rreq_id_;
};

} // namespace fanet
