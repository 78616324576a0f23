#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace fanet {

/// Terminal outcomes of a data packet other than delivery.
enum class LossReason {
    Range,             // next hop out of communication range at send time
    Collision,         // overlapping reception under receiver-overlap-loss
    Congestion,        // transmit queue overflow
    Expired,           // Exp lifetime ran out in flight
    HopExceeded,       // traversed hops passed the maximum
    ProtocolViolation, // packet arrived at a node not on its route
    RouteFailure,      // no route could be established within the retry budget
};
constexpr int kLossReasonCount = 7;

struct LossCounts {
    std::uint64_t counts[kLossReasonCount] = {};

    std::uint64_t& operator[](LossReason r) {
        return counts[static_cast<int>(r)];
    }
    std::uint64_t operator[](LossReason r) const {
        return counts[static_cast<int>(r)];
    }
    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (std::uint64_t c : counts)
            t += c;
        return t;
    }
};

const char* loss_reason_name(LossReason r);

/// Eq. (15) as printed divides by (N_R - 1) outside the square root;
/// Conventional selects the usual sample standard deviation instead.
enum class JitterMode { PaperLiteral, Conventional };

/// Per-run accumulators. Latency samples are kept individually so the
/// jitter estimators are exact and recomputable from exported traces.
struct MetricsRecord {
    std::uint64_t sent = 0;
    std::uint64_t delivered = 0;
    std::vector<double> latencies; // seconds, one per delivered packet
    std::uint64_t control_bytes = 0;
    std::uint64_t data_bytes = 0;
    LossCounts losses;
    std::uint64_t in_flight_at_end = 0;
};

/// Mean of t_recv - t_send over delivered packets; nullopt when none
/// was delivered (undefined, never zero).
std::optional<double> avg_e2e(const MetricsRecord& record);

/// delivered / sent; nullopt when nothing was sent.
std::optional<double> pdr(const MetricsRecord& record);

/// sqrt(sum (D_i - mean)^2) / (N_R - 1) in PaperLiteral mode,
/// sqrt(sum (D_i - mean)^2 / (N_R - 1)) in Conventional mode;
/// nullopt when fewer than two packets were delivered.
std::optional<double> jitter(const MetricsRecord& record,
                             JitterMode mode = JitterMode::PaperLiteral);

/// control bytes / data bytes; nullopt when no data bytes were sent.
std::optional<double> ror(const MetricsRecord& record);

} // namespace fanet
