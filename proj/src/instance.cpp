#include "dpic/instance.hpp"

#include "dpic/scheduler.hpp"

namespace dpic {

namespace {

std::uint64_t interval_start(std::uint64_t base, std::uint64_t overlap, std::uint64_t i) {
    return 1 + (i - 1) * (base - overlap) + (i - 1) * (i - 2) / 2;
}

void check_client(const Instance& inst, ClientId i) {
    if (i.value < 1 || i.value > inst.clients())
        throw ParameterError("client index " + std::to_string(i.value) + " outside [1, " +
                             std::to_string(inst.clients()) + "]");
}

}  // namespace

std::string to_string(Regime r) {
    return r == Regime::theorem_covered ? "theorem-covered" : "out-of-theorem";
}

Instance build_instance(std::uint32_t clients, std::uint32_t base_size, std::uint32_t overlap) {
    if (clients < 2) throw ParameterError("C ≥ 2 required (got C=" + std::to_string(clients) + ")");
    if (base_size < 1) throw ParameterError("K ≥ 1 required");
    if (overlap < 1) throw ParameterError("P ≥ 1 required");
    if (overlap > base_size)
        throw ParameterError("P ≤ K required (got K=" + std::to_string(base_size) +
                             ", P=" + std::to_string(overlap) + ")");

    const std::uint64_t last_start = interval_start(base_size, overlap, clients);
    const std::uint64_t universe = last_start + base_size + clients - 2;
    if (universe > UINT32_MAX) throw ParameterError("message universe exceeds 32-bit ids");

    Instance inst;
    inst.clients_ = clients;
    inst.base_size_ = base_size;
    inst.overlap_ = overlap;
    inst.universe_size_ = static_cast<std::uint32_t>(universe);

    if (clients < 3) inst.violated_.emplace_back("C ≥ 3");
    if (base_size < 2 * overlap) inst.violated_.emplace_back("K ≥ 2P");
    if (overlap + 2 < r_max(clients)) inst.violated_.emplace_back("P ≥ r_max − 2");
    inst.regime_ = inst.violated_.empty() ? Regime::theorem_covered : Regime::out_of_theorem;
    return inst;
}

SideInfoInterval side_info(const Instance& inst, ClientId i) {
    check_client(inst, i);
    const auto start =
        static_cast<std::uint32_t>(interval_start(inst.base_size(), inst.overlap(), i.value));
    const std::uint32_t size = inst.base_size() + i.value - 1;
    return {i, MessageId{start}, MessageId{start + size - 1}};
}

std::uint32_t unique_count(const Instance& inst, ClientId i) {
    const auto size = side_info(inst, i).size();
    return size > 2 * inst.overlap() ? size - 2 * inst.overlap() : 0;
}

MessageId segment(const Instance& inst, ClientId i, SegmentKind kind, std::uint32_t j) {
    const auto iv = side_info(inst, i);
    const std::uint32_t p = inst.overlap();
    const std::uint32_t limit = kind == SegmentKind::unique ? unique_count(inst, i) : p;
    if (j < 1 || j > limit) {
        static constexpr const char* names[] = {"F", "L", "U"};
        throw SegmentError(std::string(names[static_cast<int>(kind)]) + "_" + std::to_string(j) +
                           " of client " + std::to_string(i.value) + " outside [1, " +
                           std::to_string(limit) + "]");
    }
    switch (kind) {
        case SegmentKind::first: return MessageId{iv.start.value + j - 1};
        case SegmentKind::last: return MessageId{iv.end.value - p + j};
        case SegmentKind::unique: return MessageId{iv.start.value + p + j - 1};
    }
    return {};
}

MessageId last_unique(const Instance& inst, ClientId i) {
    const auto n = unique_count(inst, i);
    if (n == 0)
        throw SegmentError("client " + std::to_string(i.value) + " has an empty U segment");
    return segment(inst, i, SegmentKind::unique, n);
}

std::vector<SideInfoInterval> all_intervals(const Instance& inst) {
    std::vector<SideInfoInterval> out;
    out.reserve(inst.clients());
    for (std::uint32_t i = 1; i <= inst.clients(); ++i) out.push_back(side_info(inst, ClientId{i}));
    return out;
}

bool validate_lpsfo(std::span<const SideInfoInterval> intervals, std::uint32_t first_size,
                    std::uint32_t overlap) {
    if (intervals.empty()) return false;
    for (std::size_t k = 0; k < intervals.size(); ++k) {
        const auto& iv = intervals[k];
        if (iv.end < iv.start) return false;
        if (iv.size() != first_size + k) return false;
        if (k == 0) continue;
        const auto& prev = intervals[k - 1];
        // Consecutive blocks: overlap is exactly [next.start, prev.end].
        if (iv.start < prev.start || prev.end > iv.end) return false;
        if (iv.start.value + overlap != prev.end.value + 1) return false;
    }
    return true;
}

}  // namespace dpic
