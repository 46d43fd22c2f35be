#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace dpic {

/// 1-based index of a message x_id in the universe [1, M].
struct MessageId {
    std::uint32_t value = 0;

    constexpr MessageId() = default;
    constexpr explicit MessageId(std::uint32_t v) : value(v) {}

    friend constexpr auto operator<=>(MessageId, MessageId) = default;
};

/// 1-based index of a client C_i in original (level-1) numbering.
struct ClientId {
    std::uint32_t value = 0;

    constexpr ClientId() = default;
    constexpr explicit ClientId(std::uint32_t v) : value(v) {}

    friend constexpr auto operator<=>(ClientId, ClientId) = default;
};

/// Raised for invalid instance parameters or out-of-range accessors.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a segment lookup falls outside the segment, e.g. an empty U.
class SegmentError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Raised when a scheduling routine cannot emit a valid transmission.
/// `hypothesis()` names the violated condition when one is known.
class ScheduleError : public std::runtime_error {
public:
    explicit ScheduleError(const std::string& what, std::string hypothesis = {})
        : std::runtime_error(what), hypothesis_(std::move(hypothesis)) {}

    const std::string& hypothesis() const noexcept { return hypothesis_; }

private:
    std::string hypothesis_;
};

inline std::string to_string(MessageId m) { return "x" + std::to_string(m.value); }

}  // namespace dpic

template <>
struct std::hash<dpic::MessageId> {
    std::size_t operator()(dpic::MessageId m) const noexcept { return std::hash<std::uint32_t>{}(m.value); }
};
