#include "fanet/packet.hpp"

#include <stdexcept>

namespace fanet {

void PacketHeader::validate() const {
    if (addresses.empty())
        throw std::invalid_argument("header address list must not be empty");
    if (hop > addresses.size() - 1)
        throw std::invalid_argument("hop exceeds route length");
}

std::vector<std::byte> encode_header(const PacketHeader& header) {
    header.validate();
    if (header.addresses.size() > 255)
        throw std::length_error("route longer than 255 addresses");

    std::vector<std::byte> out;
    out.reserve(header.encoded_size());
    out.push_back(static_cast<std::byte>(header.type));
    out.push_back(static_cast<std::byte>(header.hop));
    out.push_back(static_cast<std::byte>(header.seq));
    out.push_back(static_cast<std::byte>(header.exp));
    for (std::uint32_t addr : header.addresses) {
        out.push_back(static_cast<std::byte>((addr >> 24) & 0xFF));
        out.push_back(static_cast<std::byte>((addr >> 16) & 0xFF));
        out.push_back(static_cast<std::byte>((addr >> 8) & 0xFF));
        out.push_back(static_cast<std::byte>(addr & 0xFF));
    }
    return out;
}

PacketHeader decode_header(std::span<const std::byte> bytes) {
    if (bytes.size() < 8 || bytes.size() % 4 != 0)
        throw std::invalid_argument("malformed header: bad length");
    PacketHeader h;
    const auto type = static_cast<std::uint8_t>(bytes[0]);
    if (type > 3)
        throw std::invalid_argument("malformed header: unknown type code");
    h.type = static_cast<PacketType>(type);
    h.hop = static_cast<std::uint8_t>(bytes[1]);
    h.seq = static_cast<std::uint8_t>(bytes[2]);
    h.exp = static_cast<std::uint8_t>(bytes[3]);
    for (std::size_t i = 4; i < bytes.size(); i += 4) {
        std::uint32_t addr = (static_cast<std::uint32_t>(bytes[i]) << 24) |
                             (static_cast<std::uint32_t>(bytes[i + 1]) << 16) |
                             (static_cast<std::uint32_t>(bytes[i + 2]) << 8) |
                             static_cast<std::uint32_t>(bytes[i + 3]);
        h.addresses.push_back(addr);
    }
    h.validate();
    return h;
}

bool seq_newer(std::uint8_t a, std::uint8_t b) {
    const std::uint8_t delta = static_cast<std::uint8_t>(a - b);
    return delta != 0 && delta < 128;
}

} // namespace fanet
