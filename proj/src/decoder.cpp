#include "dpic/decoder.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace dpic {

KnowledgeState::KnowledgeState(const Instance& inst) {
    known_.reserve(inst.clients());
    for (const auto& iv : all_intervals(inst)) {
        gf2::BitRow row(inst.universe_size() + 1);
        for (auto m = iv.start.value; m <= iv.end.value; ++m) row.set(m);
        known_.push_back(std::move(row));
    }
}

namespace {

gf2::BitRow side_info_row(const Instance& inst, ClientId client) {
    gf2::BitRow row(inst.universe_size() + 1);
    const auto iv = side_info(inst, client);
    for (auto m = iv.start.value; m <= iv.end.value; ++m) row.set(m);
    return row;
}

}  // namespace

PeelResult peel(const Instance& inst, std::span<const Transmission> txs, ClientId client) {
    auto known = side_info_row(inst, client);
    PeelResult res;
    res.row.assign(txs.size(), std::nullopt);

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t k = 0; k < txs.size(); ++k) {
            std::optional<MessageId> unknown;
            int missing = 0;
            for (auto m : txs[k].support) {
                if (!known.test(m.value)) {
                    unknown = m;
                    ++missing;
                }
            }
            if (missing != 1) continue;
            known.set(unknown->value);
            res.row[k] = unknown;
            res.decoded.push_back(*unknown);
            progress = true;
        }
    }
    std::sort(res.decoded.begin(), res.decoded.end());
    return res;
}

PeelResult peel(const Schedule& sched, ClientId client) {
    return peel(sched.instance(), sched.transmissions(), client);
}

std::vector<MessageId> span_decodable(const Instance& inst, std::span<const Transmission> txs,
                                      ClientId client) {
    const auto iv = side_info(inst, client);

    // Erase known coordinates, then compact the columns that remain.
    std::vector<std::uint32_t> ids;
    for (const auto& tx : txs)
        for (auto m : tx.support)
            if (!iv.contains(m)) ids.push_back(m.value);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) return {};

    std::unordered_map<std::uint32_t, std::size_t> column;
    for (std::size_t c = 0; c < ids.size(); ++c) column.emplace(ids[c], c);

    std::vector<gf2::BitRow> rows;
    rows.reserve(txs.size());
    for (const auto& tx : txs) {
        gf2::BitRow row(ids.size());
        for (auto m : tx.support)
            if (!iv.contains(m)) row.flip(column.at(m.value));
        if (!row.none()) rows.push_back(std::move(row));
    }

    std::vector<MessageId> out;
    for (auto c : gf2::unit_vectors_in_span(std::move(rows))) out.emplace_back(ids[c]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MessageId> span_decodable(const Schedule& sched, ClientId client) {
    return span_decodable(sched.instance(), sched.transmissions(), client);
}

KnowledgeState final_knowledge(const Schedule& sched) {
    KnowledgeState state(sched.instance());
    for (std::uint32_t c = 1; c <= sched.instance().clients(); ++c)
        for (auto m : span_decodable(sched, ClientId{c})) state.learn(ClientId{c}, m);
    return state;
}

DecodeTrace decode_trace(const Schedule& sched) {
    DecodeTrace trace;
    const auto n = sched.instance().clients();
    trace.cells.reserve(n);
    for (std::uint32_t c = 1; c <= n; ++c) trace.cells.push_back(peel(sched, ClientId{c}).row);
    return trace;
}

bool simulate_payloads(const Schedule& sched, unsigned bits, std::uint64_t seed) {
    if (bits == 0) return false;
    const auto& inst = sched.instance();
    const std::size_t words = (bits + 63) / 64;
    const std::uint64_t top_mask =
        bits % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (bits % 64)) - 1;

    using Payload = std::vector<std::uint64_t>;
    std::mt19937_64 rng(seed);
    std::vector<Payload> truth(inst.universe_size() + 1);
    for (std::uint32_t m = 1; m <= inst.universe_size(); ++m) {
        Payload p(words);
        for (auto& w : p) w = rng();
        p.back() &= top_mask;
        truth[m] = std::move(p);
    }

    const auto txs = sched.transmissions();
    std::vector<Payload> coded;
    coded.reserve(txs.size());
    for (const auto& tx : txs) {
        Payload p(words, 0);
        for (auto m : tx.support)
            for (std::size_t w = 0; w < words; ++w) p[w] ^= truth[m.value][w];
        coded.push_back(std::move(p));
    }

    for (std::uint32_t c = 1; c <= inst.clients(); ++c) {
        const ClientId client{c};
        const auto iv = side_info(inst, client);
        std::unordered_map<std::uint32_t, Payload> have;
        for (auto m = iv.start.value; m <= iv.end.value; ++m) have.emplace(m, truth[m]);

        std::vector<MessageId> recovered;
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t k = 0; k < txs.size(); ++k) {
                const MessageId* unknown = nullptr;
                int missing = 0;
                for (const auto& m : txs[k].support)
                    if (!have.contains(m.value)) {
                        unknown = &m;
                        ++missing;
                    }
                if (missing != 1) continue;
                Payload value = coded[k];
                for (auto m : txs[k].support)
                    if (m != *unknown)
                        for (std::size_t w = 0; w < words; ++w) value[w] ^= have.at(m.value)[w];
                if (value != truth[unknown->value]) return false;
                have.emplace(unknown->value, std::move(value));
                recovered.push_back(*unknown);
                progress = true;
            }
        }
        std::sort(recovered.begin(), recovered.end());
        if (recovered != peel(sched, client).decoded) return false;
    }
    return true;
}

}  // namespace dpic
