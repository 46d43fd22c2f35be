#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dpic/gf2.hpp"
#include "dpic/scheduler.hpp"

namespace dpic {

/// Per-client known-message sets, dense over [1, M]. Starts from each
/// client's side-information and only grows.
class KnowledgeState {
public:
    explicit KnowledgeState(const Instance& inst);

    bool knows(ClientId c, MessageId m) const { return known_[c.value - 1].test(m.value); }
    void learn(ClientId c, MessageId m) { known_[c.value - 1].set(m.value); }
    std::size_t count(ClientId c) const { return known_[c.value - 1].popcount(); }
    const gf2::BitRow& row(ClientId c) const { return known_[c.value - 1]; }

private:
    std::vector<gf2::BitRow> known_;
};

struct PeelResult {
    /// Newly decoded messages, ascending.
    std::vector<MessageId> decoded;
    /// One cell per transmission: the message attributed to it, if any.
    std::vector<std::optional<MessageId>> row;
};

/// Fixpoint peeling over the client's full received history. A message is
/// attributed to the transmission that resolved it, including transmissions
/// resolved retroactively once a later one supplied the missing operand.
PeelResult peel(const Instance& inst, std::span<const Transmission> txs, ClientId client);
PeelResult peel(const Schedule& sched, ClientId client);

/// Messages outside the client's side-information whose unit vectors lie in
/// the GF(2) span of its side-information singletons and the received
/// supports. Ascending.
std::vector<MessageId> span_decodable(const Instance& inst, std::span<const Transmission> txs,
                                      ClientId client);
std::vector<MessageId> span_decodable(const Schedule& sched, ClientId client);

/// Side-information plus everything span-decodable from the whole schedule.
KnowledgeState final_knowledge(const Schedule& sched);

/// Clients × transmissions grid of attributed messages.
struct DecodeTrace {
    std::vector<std::vector<std::optional<MessageId>>> cells;

    std::size_t clients() const { return cells.size(); }
    std::size_t columns() const { return cells.empty() ? 0 : cells.front().size(); }

    friend bool operator==(const DecodeTrace&, const DecodeTrace&) = default;
};

DecodeTrace decode_trace(const Schedule& sched);

/// Draws M random payloads of `bits` bits from std::mt19937_64(seed),
/// materialises every transmission as the XOR of its operands' payloads and
/// replays peeling on the values. True iff each client recovers exactly the
/// index-level decoded set and every recovered payload matches the original.
bool simulate_payloads(const Schedule& sched, unsigned bits, std::uint64_t seed);

}  // namespace dpic
