#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dpic/types.hpp"

namespace dpic {

enum class Regime { theorem_covered, out_of_theorem };

std::string to_string(Regime r);

/// Closed message interval [start, end] held by one client.
struct SideInfoInterval {
    ClientId client;
    MessageId start;
    MessageId end;

    std::uint32_t size() const { return end.value - start.value + 1; }
    bool contains(MessageId m) const { return start <= m && m <= end; }

    friend bool operator==(const SideInfoInterval&, const SideInfoInterval&) = default;
};

enum class SegmentKind { first, last, unique };

/// An LPS-FO side-information instance.
///
/// Client i holds the consecutive block of K + (i-1) messages starting at
/// 1 + (i-1)(K-P) + (i-1)(i-2)/2, so that the last P messages of client i
/// are the first P messages of client i+1. Every client is expected to end
/// with exactly T = K + C messages.
class Instance {
public:
    std::uint32_t clients() const { return clients_; }
    std::uint32_t base_size() const { return base_size_; }
    std::uint32_t overlap() const { return overlap_; }
    std::uint32_t universe_size() const { return universe_size_; }
    std::uint32_t target() const { return clients_ + base_size_; }
    Regime regime() const { return regime_; }

    /// Scheduling hypotheses that fail for this instance, as readable
    /// conditions ("C ≥ 3", "K ≥ 2P", "P ≥ r_max − 2"). Empty iff covered.
    const std::vector<std::string>& violated_hypotheses() const { return violated_; }

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.clients_ == b.clients_ && a.base_size_ == b.base_size_ && a.overlap_ == b.overlap_;
    }

private:
    friend Instance build_instance(std::uint32_t, std::uint32_t, std::uint32_t);

    std::uint32_t clients_ = 0;
    std::uint32_t base_size_ = 0;
    std::uint32_t overlap_ = 0;
    std::uint32_t universe_size_ = 0;
    Regime regime_ = Regime::out_of_theorem;
    std::vector<std::string> violated_;
};

/// Throws ParameterError when C < 2, K < 1, P < 1 or P > K.
Instance build_instance(std::uint32_t clients, std::uint32_t base_size, std::uint32_t overlap);

SideInfoInterval side_info(const Instance& inst, ClientId i);

/// F_j, L_j or U_j of client i (1-based j). Throws SegmentError when j
/// falls outside the segment.
MessageId segment(const Instance& inst, ClientId i, SegmentKind kind, std::uint32_t j);

/// Number of messages in the U segment of client i (0 when |I_i| <= 2P).
std::uint32_t unique_count(const Instance& inst, ClientId i);

MessageId last_unique(const Instance& inst, ClientId i);

std::vector<SideInfoInterval> all_intervals(const Instance& inst);

/// True iff the intervals grow by one starting at `first_size` and each
/// consecutive pair shares exactly `overlap` messages, last-P to first-P.
bool validate_lpsfo(std::span<const SideInfoInterval> intervals, std::uint32_t first_size,
                    std::uint32_t overlap);

}  // namespace dpic
