#pragma once

#include <map>
#include <optional>

#include "fanet/protocol.hpp"

namespace fanet {

struct RouteSearchConfig {
    double bc_epsilon = 1e-6;
    IntraGroupWeights intra_weights = IntraGroupWeights::Unit;
};

/// BC-DSR route computation over a topology snapshot.
///
/// Same group: least-cost path under the predefined intra-group weights,
/// restricted to the group's members.
///
/// Different groups: the graph is weighted by 1/(C_B(u)+C_B(v)) and the
/// path is searched segment by segment through the leader of every group
/// between the two (group indices walked in order), each leader-to-leader
/// segment restricted to the two groups involved; a final intra-group
/// extension under the predefined weights reaches a non-leader
/// destination. The returned path therefore contains the leader of every
/// group it traverses.
///
/// `scores` may carry precomputed centrality for this snapshot; when
/// null it is computed on demand. Returns nullopt when any segment has
/// no path.
std::optional<std::vector<int>>
establish_route(const ConnectivityGraph& graph, int src, int dst,
                const RouteSearchConfig& config,
                const CentralityScores* scores = nullptr);

/// BC-DSR: source-routed data with computed routes (no discovery
/// floods), a route cache, RERR recovery, and periodic position beacons
/// standing in for the distributed dissemination of topology state.
class BcDsrProtocol : public Protocol {
public:
    const char* name() const override { return "bc-dsr"; }
    void on_start(NetContext& ctx) override;
    void on_data(NetContext& ctx, DataPacket packet) override;
    void on_frame(NetContext& ctx, int node, int from, Frame frame) override;
    void on_send_failure(NetContext& ctx, int node, Frame frame) override;
    void on_timer(NetContext& ctx, int node, std::uint64_t token) override;

private:
    struct Pending {
        std::deque<DataPacket> packets;
        int retries_left = 0;
        bool timer_armed = false;
    };

    const CentralityScores* tick_scores(NetContext& ctx);
    std::optional<std::vector<int>> compute_route(NetContext& ctx, int src,
                                                  int dst);
    void handle_rerr(NetContext& ctx, int node, RerrFrame rerr);
    void buffer_for_retry(NetContext& ctx, DataPacket packet);

    std::map<int, RouteCache> caches_; // per node
    std::map<std::pair<int, int>, Pending> pending_; // keyed by (src, dst)
    CentralityScores scores_;
    int scores_tick_ = -1;
};

} // namespace fanet
