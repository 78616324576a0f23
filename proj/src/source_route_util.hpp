#pragma once

#include <cstdint>

#include "fanet/protocol.hpp"

namespace fanet::detail {

// Timer token layout: tag(16) | a(24) | b(24).
constexpr int kBeaconTag = 1;
constexpr int kRetryTag = 2;
constexpr int kDiscoveryTag = 3;

inline std::uint64_t timer_token(int tag, int a, int b = 0) {
    return (static_cast<std::uint64_t>(tag) << 48) |
           ((static_cast<std::uint64_t>(a) & 0xFFFFFF) << 24) |
           (static_cast<std::uint64_t>(b) & 0xFFFFFF);
}
inline int token_tag(std::uint64_t t) { return static_cast<int>(t >> 48); }
inline int token_a(std::uint64_t t) {
    return static_cast<int>((t >> 24) & 0xFFFFFF);
}
inline int token_b(std::uint64_t t) { return static_cast<int>(t & 0xFFFFFF); }

// route[cursor] is the node currently holding the packet. Advances the
// cursor and hands the frame to the next listed address.
inline void relay_data(NetContext& ctx, int node, DataPacket p) {
    const int next = p.route[p.cursor + 1];
    ++p.cursor;
    ++p.traversed_hops;
    ctx.send_unicast(node, next, Frame{std::move(p)});
}

// Receive-side half of forwarding: deliver at the destination, police
// lifetime and hop budget, otherwise relay. The destination check comes
// first; a packet that reaches its destination is delivered.
inline void receive_data(NetContext& ctx, int node, DataPacket p) {
    if (p.route[p.cursor] != node) {
        ctx.drop_data(std::move(p), LossReason::ProtocolViolation);
        return;
    }
    if (p.cursor + 1 == p.route.size()) {
        ctx.deliver(node, std::move(p));
        return;
    }
    if (ctx.now() >= p.expiry_time) {
        ctx.drop_data(std::move(p), LossReason::Expired);
        return;
    }
    if (p.traversed_hops + 1 > ctx.proto_config().max_hops) {
        ctx.drop_data(std::move(p), LossReason::HopExceeded);
        return;
    }
    relay_data(ctx, node, std::move(p));
}

// RERR for a send failure: the frame's cursor designates the intended
// receiver, so the broken link is (route[cursor-1], route[cursor]) and
// the reverse route walks the already-traversed prefix back to the
// source.
inline RerrFrame make_rerr(const DataPacket& p) {
    RerrFrame rerr;
    rerr.broken_from = p.route[p.cursor - 1];
    rerr.broken_to = p.route[p.cursor];
    rerr.src = p.src;
    rerr.dst = p.dst;
    for (std::size_t k = p.cursor; k-- > 0;)
        rerr.reverse_route.push_back(p.route[k]);
    rerr.cursor = 0;
    return rerr;
}

// Passes the RERR one hop upstream. Returns true when `node` is the
// packet's source (end of the reverse route).
inline bool forward_rerr(NetContext& ctx, int node, RerrFrame rerr) {
    if (rerr.cursor + 1 >= rerr.reverse_route.size())
        return node == rerr.src;
    const int next = rerr.reverse_route[rerr.cursor + 1];
    ++rerr.cursor;
    ctx.send_unicast(node, next, Frame{std::move(rerr)});
    return false;
}

} // namespace fanet::detail
