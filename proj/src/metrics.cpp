#include "fanet/metrics.hpp"

#include <cmath>

namespace fanet {

const char* loss_reason_name(LossReason r) {
    switch (r) {
    case LossReason::Range:
        return "range";
    case LossReason::Collision:
        return "collision";
    case LossReason::Congestion:
        return "congestion";
    case LossReason::Expired:
        return "expired";
    case LossReason::HopExceeded:
        return "hop_exceeded";
    case LossReason::ProtocolViolation:
        return "protocol_violation";
    case LossReason::RouteFailure:
        return "route_failure";
    }
    return "unknown";
}

std::optional<double> avg_e2e(const MetricsRecord& record) {
    if (record.latencies.empty())
        return std::nullopt;
    double sum = 0.0;
    for (double d : record.latencies)
        sum += d;
    return sum / static_cast<double>(record.latencies.size());
}

std::optional<double> pdr(const MetricsRecord& record) {
    if (record.sent == 0)
        return std::nullopt;
    return static_cast<double>(record.delivered) /
           static_cast<double>(record.sent);
}

std::optional<double> jitter(const MetricsRecord& record, JitterMode mode) {
    const std::size_t n = record.latencies.size();
    if (n < 2)
        return std::nullopt;
    double mean = 0.0;
    for (double d : record.latencies)
        mean += d;
    mean /= static_cast<double>(n);
    double sq = 0.0;
    for (double d : record.latencies)
        sq += (d - mean) * (d - mean);
    const double denom = static_cast<double>(n - 1);
    if (mode == JitterMode::PaperLiteral)
        return std::sqrt(sq) / denom;
    return std::sqrt(sq / denom);
}

std::optional<double> ror(const MetricsRecord& record) {
    if (record.data_bytes == 0)
        return std::nullopt;
    return static_cast<double>(record.control_bytes) /
           static_cast<double>(record.data_bytes);
}

} // namespace fanet
