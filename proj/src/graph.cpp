#include "fanet/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>

namespace fanet {

ConnectivityGraph ConnectivityGraph::build(const std::vector<NodeState>& states,
                                           double comm_range,
                                           double snapshot_time) {
    ConnectivityGraph g;
    g.comm_range_ = comm_range;
    g.snapshot_time_ = snapshot_time;
    g.nodes_.reserve(states.size());
    for (const NodeState& s : states)
        g.nodes_.push_back({s.node_id, s.group_id, s.role, s.position});
    const int n = g.size();
    g.adjacency_.assign(n, {});
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (distance(g.nodes_[u].position, g.nodes_[v].position) <=
                comm_range) {
                g.adjacency_[u].push_back(v);
                g.adjacency_[v].push_back(u);
                ++g.edge_count_;
            }
        }
    }
    return g;
}

bool ConnectivityGraph::has_edge(int u, int v) const {
    if (u == v)
        return false;
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

PathCountRow shortest_path_counts(const ConnectivityGraph& graph, int source) {
    const int n = graph.size();
    PathCountRow row;
    row.source = source;
    row.dist.assign(n, kUnreachable);
    row.sigma.assign(n, 0.0);
    row.precursors.assign(n, {});

    row.dist[source] = 0;
    row.sigma[source] = 1.0;
    std::queue<int> frontier;
    frontier.push(source);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v : graph.neighbors(u)) {
            if (row.dist[v] == kUnreachable) {
                row.dist[v] = row.dist[u] + 1;
                frontier.push(v);
            }
            if (row.dist[v] == row.dist[u] + 1) {
                row.sigma[v] += row.sigma[u];
                row.precursors[v].push_back(u);
            }
        }
    }
    return row;
}

CentralityScores betweenness(const ConnectivityGraph& graph) {
    const int n = graph.size();
    if (n < 3)
        throw std::invalid_argument(
            "betweenness requires at least 3 nodes; the (N-1)(N-2) "
            "normalizer is undefined for N = " +
            std::to_string(n));

    std::vector<PathCountRow> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i)
        rows.push_back(shortest_path_counts(graph, i));

    CentralityScores scores;
    scores.graph_size = n;
    scores.cb.assign(n, 0.0);
    const double normalizer =
        static_cast<double>(n - 1) * static_cast<double>(n - 2);
    for (int node = 0; node < n; ++node) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            if (i == node)
                continue;
            const PathCountRow& from_i = rows[i];
            const PathCountRow& from_node = rows[node];
            if (from_i.dist[node] == kUnreachable)
                continue;
            for (int j = 0; j < n; ++j) {
                if (j == i || j == node || from_i.sigma[j] == 0.0)
                    continue;
                if (from_i.dist[node] + from_node.dist[j] == from_i.dist[j])
                    total += from_i.sigma[node] * from_node.sigma[j] /
                             from_i.sigma[j];
            }
        }
        scores.cb[node] = total / normalizer;
    }
    return scores;
}

WeightedGraph WeightedGraph::from_centrality(const ConnectivityGraph& graph,
                                             const CentralityScores& scores,
                                             double epsilon) {
    WeightedGraph w;
    w.graph_ = &graph;
    w.weights_.resize(graph.size());
    for (int u = 0; u < graph.size(); ++u) {
        const auto& adj = graph.neighbors(u);
        w.weights_[u].resize(adj.size());
        for (std::size_t k = 0; k < adj.size(); ++k) {
            const double denom =
                std::max(scores.cb[u] + scores.cb[adj[k]], epsilon);
            w.weights_[u][k] = 1.0 / denom;
        }
    }
    return w;
}

WeightedGraph WeightedGraph::unit(const ConnectivityGraph& graph) {
    WeightedGraph w;
    w.graph_ = &graph;
    w.weights_.resize(graph.size());
    for (int u = 0; u < graph.size(); ++u)
        w.weights_[u].assign(graph.neighbors(u).size(), 1.0);
    return w;
}

WeightedGraph WeightedGraph::euclidean(const ConnectivityGraph& graph) {
    WeightedGraph w;
    w.graph_ = &graph;
    w.weights_.resize(graph.size());
    for (int u = 0; u < graph.size(); ++u) {
        const auto& adj = graph.neighbors(u);
        w.weights_[u].resize(adj.size());
        for (std::size_t k = 0; k < adj.size(); ++k)
            w.weights_[u][k] = distance(graph.node(u).position,
                                        graph.node(adj[k]).position);
    }
    return w;
}

double WeightedGraph::weight(int u, int v) const {
    const auto& adj = graph_->neighbors(u);
    const auto it = std::lower_bound(adj.begin(), adj.end(), v);
    if (it == adj.end() || *it != v)
        throw std::out_of_range("no such edge");
    return weights_[u][static_cast<std::size_t>(it - adj.begin())];
}

std::optional<std::vector<int>>
least_cost_segment(const WeightedGraph& graph, int src, int dst,
                   const std::vector<char>& allowed) {
    if (!allowed[src] || !allowed[dst])
        return std::nullopt;
    if (src == dst)
        return std::vector<int>{src};

    const int n = graph.size();
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, kInf);
    std::vector<int> prev(n, -1);
    std::vector<char> done(n, 0);
    // (distance, node): ties resolve to the smaller node id.
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    dist[src] = 0.0;
    pq.push({0.0, src});
    const ConnectivityGraph& topo = graph.topology();
    while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (done[u])
            continue;
        done[u] = 1;
        if (u == dst)
            break;
        const auto& adj = topo.neighbors(u);
        for (std::size_t k = 0; k < adj.size(); ++k) {
            const int v = adj[k];
            if (!allowed[v] || done[v])
                continue;
            const double nd = d + graph.weight(u, v);
            if (nd < dist[v]) {
                dist[v] = nd;
                prev[v] = u;
                pq.push({nd, v});
            }
        }
    }
    if (dist[dst] == kInf)
        return std::nullopt;
    std::vector<int> path;
    for (int v = dst; v != -1; v = prev[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

std::optional<std::vector<int>> least_cost_path(const WeightedGraph& graph,
                                                int src, int dst,
                                                std::span<const int> waypoints) {
    std::vector<char> all(graph.size(), 1);
    std::vector<int> stops;
    stops.push_back(src);
    stops.insert(stops.end(), waypoints.begin(), waypoints.end());
    stops.push_back(dst);

    std::vector<int> path{src};
    for (std::size_t k = 0; k + 1 < stops.size(); ++k) {
        auto segment = least_cost_segment(graph, stops[k], stops[k + 1], all);
        if (!segment)
            return std::nullopt;
        path.insert(path.end(), segment->begin() + 1, segment->end());
    }
    return path;
}

double path_cost(const WeightedGraph& graph, std::span<const int> path) {
    double cost = 0.0;
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
        cost += graph.weight(path[k], path[k + 1]);
    return cost;
}

} // namespace fanet
