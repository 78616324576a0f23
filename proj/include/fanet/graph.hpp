#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "fanet/geom.hpp"
#include "fanet/mobility.hpp"

namespace fanet {

struct GraphNode {
    int node_id = 0;
    int group_id = 0;
    Role role = Role::Ordinary;
    Vec3 position;
};

/// Undirected connectivity snapshot at one instant. An edge (u, v) is
/// present iff the Euclidean distance at snapshot_time is <= comm_range
/// (boundary inclusive); never any self-edges. Node ids are the indices
/// 0..N-1.
class ConnectivityGraph {
public:
    static ConnectivityGraph build(const std::vector<NodeState>& states,
                                   double comm_range, double snapshot_time);

    int size() const { return static_cast<int>(nodes_.size()); }
    const GraphNode& node(int id) const { return nodes_[id]; }
    const std::vector<GraphNode>& nodes() const { return nodes_; }
    /// Neighbor lists are sorted ascending; traversals are deterministic.
    const std::vector<int>& neighbors(int id) const { return adjacency_[id]; }
    bool has_edge(int u, int v) const;
    int edge_count() const { return edge_count_; }
    double snapshot_time() const { return snapshot_time_; }
    double comm_range() const { return comm_range_; }

private:
    std::vector<GraphNode> nodes_;
    std::vector<std::vector<int>> adjacency_;
    int edge_count_ = 0;
    double snapshot_time_ = 0.0;
    double comm_range_ = 0.0;
};

constexpr int kUnreachable = -1;

/// Hop-count shortest-path data for one source: distances, number of
/// shortest paths, and precursor sets. Unreachable nodes carry
/// dist == kUnreachable, sigma == 0 and an empty precursor set.
struct PathCountRow {
    int source = 0;
    std::vector<int> dist;
    std::vector<double> sigma;
    std::vector<std::vector<int>> precursors;
};

/// BFS from `source` over unit edge weights, accumulating sigma and the
/// precursor sets. sigma_ij equals the sum of sigma_im over the
/// precursors m of j.
PathCountRow shortest_path_counts(const ConnectivityGraph& graph, int source);

/// Normalized betweenness per node, each value in [0, 1].
struct CentralityScores {
    std::vector<double> cb;
    int graph_size = 0;
};

/// C_B(n) = sum over ordered pairs (i, j), i != n != j, of
/// sigma_ij(n)/sigma_ij, divided by (N-1)(N-2). sigma_ij(n) is
/// sigma_in * sigma_nj when d(i,n) + d(n,j) = d(i,j) and 0 otherwise;
/// pairs with sigma_ij == 0 contribute nothing.
/// Throws std::invalid_argument when N < 3 (undefined normalizer).
CentralityScores betweenness(const ConnectivityGraph& graph);

/// Same topology as the snapshot with one positive finite weight per
/// edge: 1 / max(C_B(u) + C_B(v), epsilon).
class WeightedGraph {
public:
    static WeightedGraph from_centrality(const ConnectivityGraph& graph,
                                         const CentralityScores& scores,
                                         double epsilon = 1e-6);
    /// Unit weight on every edge (hop-count routing).
    static WeightedGraph unit(const ConnectivityGraph& graph);
    /// Euclidean distance on every edge.
    static WeightedGraph euclidean(const ConnectivityGraph& graph);

    int size() const { return graph_ ? graph_->size() : 0; }
    const ConnectivityGraph& topology() const { return *graph_; }
    double weight(int u, int v) const;

private:
    const ConnectivityGraph* graph_ = nullptr;
    // Weights stored per (node, neighbor-list slot).
    std::vector<std::vector<double>> weights_;
};

/// Minimum-total-weight path from src to dst passing through the given
/// waypoints in order. Each segment runs Dijkstra over nonnegative
/// weights; nullopt when any segment has no path. src == dst with no
/// waypoints yields the single-node path.
std::optional<std::vector<int>>
least_cost_path(const WeightedGraph& graph, int src, int dst,
                std::span<const int> waypoints = {});

/// Dijkstra restricted to the nodes with allowed[id] != 0. Endpoints
/// must be allowed. Returns nullopt when dst is not reachable.
std::optional<std::vector<int>>
least_cost_segment(const WeightedGraph& graph, int src, int dst,
                   const std::vector<char>& allowed);

/// Cost of a path under the graph's weights.
double path_cost(const WeightedGraph& graph, std::span<const int> path);

} // namespace fanet
