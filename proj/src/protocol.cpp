#include "fanet/protocol.hpp"

#include <algorithm>
#include <stdexcept>

#include "fanet/baselines.hpp"
#include "fanet/bcdsr.hpp"

namespace fanet {

PacketType Frame::type() const {
    if (std::holds_alternative<DataPacket>(payload))
        return PacketType::Data;
    if (std::holds_alternative<RreqFrame>(payload))
        return PacketType::Rreq;
    if (std::holds_alternative<RrepFrame>(payload))
        return PacketType::Rrep;
    if (std::holds_alternative<RerrFrame>(payload))
        return PacketType::Rerr;
    return PacketType::Data; // beacons ride outside the four wire types
}

std::size_t Frame::wire_bytes() const {
    return std::visit(
        [](const auto& f) -> std::size_t {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, DataPacket>) {
                return 4 + 4 * f.route.size() + f.payload_bytes;
            } else if constexpr (std::is_same_v<T, RreqFrame>) {
                // DSR carries the accumulated route plus the target;
                // AODV carries just (origin, target).
                const std::size_t addrs =
                    f.route.empty() ? 2 : f.route.size() + 1;
                return 4 + 4 * addrs;
            } else if constexpr (std::is_same_v<T, RrepFrame>) {
                const std::size_t addrs =
                    f.route.empty() ? 2 : f.route.size();
                return 4 + 4 * addrs;
            } else if constexpr (std::is_same_v<T, RerrFrame>) {
                const std::size_t addrs =
                    f.reverse_route.empty() ? 2 : f.reverse_route.size() + 1;
                return 4 + 4 * addrs;
            } else {
                return f.wire_bytes; // BeaconFrame
            }
        },
        payload);
}

const char* proto_event_name(ProtoEventKind k) {
    switch (k) {
    case ProtoEventKind::Emit:
        return "emit";
    case ProtoEventKind::DataTx:
        return "data_tx";
    case ProtoEventKind::Deliver:
        return "deliver";
    case ProtoEventKind::Drop:
        return "drop";
    case ProtoEventKind::RreqTx:
        return "rreq_tx";
    case ProtoEventKind::RrepTx:
        return "rrep_tx";
    case ProtoEventKind::RerrTx:
        return "rerr_tx";
    case ProtoEventKind::BeaconTx:
        return "beacon_tx";
    case ProtoEventKind::RouteEstablished:
        return "route_established";
    case ProtoEventKind::RouteFailed:
        return "route_failed";
    }
    return "unknown";
}

const RouteCache::Entry* RouteCache::lookup(int src, int dst) const {
    const auto it = entries_.find({src, dst});
    if (it == entries_.end())
        return nullptr;
    for (const Entry& e : it->second)
        if (e.valid)
            return &e;
    return nullptr;
}

std::vector<const RouteCache::Entry*> RouteCache::lookup_all(int src,
                                                             int dst) const {
    std::vector<const Entry*> out;
    const auto it = entries_.find({src, dst});
    if (it == entries_.end())
        return out;
    for (const Entry& e : it->second)
        if (e.valid)
            out.push_back(&e);
    return out;
}

void RouteCache::insert(int src, int dst, std::vector<int> path, int tick,
                        std::size_t max_routes) {
    if (path.empty() || path.front() != src || path.back() != dst)
        throw std::invalid_argument("cached path endpoints must match key");
    auto& routes = entries_[{src, dst}];
    // Identical valid route: refresh instead of duplicating.
    for (Entry& e : routes) {
        if (e.valid && e.path == path) {
            e.created_tick = tick;
            return;
        }
    }
    routes.push_front({std::move(path), tick, true});
    while (routes.size() > max_routes)
        routes.pop_back();
}

void RouteCache::invalidate_link(int u, int v) {
    for (auto& [key, routes] : entries_) {
        for (Entry& e : routes) {
            if (!e.valid)
                continue;
            for (std::size_t k = 0; k + 1 < e.path.size(); ++k) {
                const int a = e.path[k];
                const int b = e.path[k + 1];
                if ((a == u && b == v) || (a == v && b == u)) {
                    e.valid = false;
                    break;
                }
            }
        }
    }
}

void RouteCache::invalidate_pair(int src, int dst) {
    const auto it = entries_.find({src, dst});
    if (it == entries_.end())
        return;
    for (Entry& e : it->second)
        e.valid = false;
}

std::unique_ptr<Protocol> make_protocol(const std::string& name) {
    if (name == "bc-dsr")
        return std::make_unique<BcDsrProtocol>();
    if (name == "aodv-lite")
        return std::make_unique<AodvLiteProtocol>();
    if (name == "dsr-lite")
        return std::make_unique<DsrLiteProtocol>();
    throw std::invalid_argument("unknown protocol: " + name);
}

} // namespace fanet
