#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fanet {

enum class PacketType : std::uint8_t {
    Data = 0,
    Rreq = 1,
    Rrep = 2,
    Rerr = 3,
};

/// Source-routed packet header. On the wire:
///   Type(8) | Hop(8) | Seq(8) | Exp(8) | Address[0..n] (32 bits each,
/// big-endian). Address[0] is the source, the last address the
/// destination; Hop is the total hop count of the route.
struct PacketHeader {
    PacketType type = PacketType::Data;
    std::uint8_t hop = 0;
    std::uint8_t seq = 0;
    std::uint8_t exp = 0;
    std::vector<std::uint32_t> addresses;

    std::size_t encoded_size() const { return 4 + 4 * addresses.size(); }

    /// Throws std::invalid_argument when the invariants do not hold
    /// (addresses non-empty, hop <= len(addresses) - 1).
    void validate() const;
};

/// Fixed layout, 4 bytes of fields then 4 bytes per address.
/// Throws std::length_error for more than 255 addresses (the 8-bit hop
/// counter cannot police longer routes) and std::invalid_argument when
/// the header invariants do not hold.
std::vector<std::byte> encode_header(const PacketHeader& header);

/// Inverse of encode_header; throws std::invalid_argument on malformed
/// input (short buffer, trailing bytes, empty address list).
PacketHeader decode_header(std::span<const std::byte> bytes);

/// Modulo-256 sequence comparison with a half-window rule: a is newer
/// than b iff 0 < (a - b) mod 256 < 128.
bool seq_newer(std::uint8_t a, std::uint8_t b);

} // namespace fanet
