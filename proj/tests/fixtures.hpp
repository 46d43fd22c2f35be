#pragma once

// Golden data for the C=9, K=7, P=3 worked example and test-only oracles
// that do not share code paths with the library.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "dpic/decoder.hpp"
#include "dpic/scheduler.hpp"

namespace fixtures {

struct GoldenColumn {
    std::uint32_t transmitter;
    std::vector<std::uint32_t> support;
};

inline const std::vector<GoldenColumn>& example_columns() {
    static const std::vector<GoldenColumn> cols{
        {2, {5, 10}},  {3, {10, 16}}, {3, {10, 13}}, {4, {16, 23}},     {4, {16, 19}},
        {4, {23, 24}}, {5, {23, 26}}, {5, {23, 27}}, {5, {23, 28}},     {7, {40, 41, 50}},
        {8, {50, 61}}, {9, {61, 64}}, {9, {61, 65}},
    };
    return cols;
}

// Decoding table for the example; 0 marks an empty cell.
inline const std::array<std::array<std::uint32_t, 13>, 9>& example_trace() {
    static const std::array<std::array<std::uint32_t, 13>, 9> t{{
        {10, 16, 13, 23, 19, 24, 26, 27, 28, 0, 0, 0, 0},
        {0, 16, 13, 23, 19, 24, 26, 27, 28, 0, 0, 0, 0},
        {5, 0, 0, 23, 19, 24, 26, 27, 28, 0, 0, 0, 0},
        {5, 10, 13, 0, 0, 0, 26, 27, 28, 0, 0, 0, 0},
        {5, 10, 13, 16, 19, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 50, 61, 64, 65},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 61, 64, 65},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 64, 65},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 50, 0, 0},
    }};
    return t;
}

// Side-information intervals from the example's client table.
inline const std::vector<std::pair<std::uint32_t, std::uint32_t>>& example_intervals() {
    static const std::vector<std::pair<std::uint32_t, std::uint32_t>> iv{
        {1, 7}, {5, 12}, {10, 18}, {16, 25}, {23, 33}, {31, 42}, {40, 52}, {50, 63}, {61, 75}};
    return iv;
}

// Intervals built by the recurrence start(i+1) = end(i) - P + 1.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> iterative_intervals(std::uint32_t c, std::uint32_t k,
                                                                                std::uint32_t p) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    std::uint32_t start = 1;
    for (std::uint32_t i = 1; i <= c; ++i) {
        const std::uint32_t end = start + k + i - 2;
        out.emplace_back(start, end);
        start = end - p + 1;
    }
    return out;
}

// Span decodability by enumerating every subset of received transmissions
// and XOR-ing their unknown residues. Exponential; only for short schedules.
inline std::vector<std::uint32_t> brute_force_span(const dpic::Instance& inst,
                                                   std::span<const dpic::Transmission> txs,
                                                   dpic::ClientId client) {
    const auto iv = dpic::side_info(inst, client);
    std::vector<std::set<std::uint32_t>> residues;
    for (const auto& tx : txs) {
        std::set<std::uint32_t> r;
        for (auto m : tx.support)
            if (!iv.contains(m)) r.insert(m.value);
        residues.push_back(std::move(r));
    }
    std::set<std::uint32_t> found;
    const std::uint64_t subsets = std::uint64_t{1} << residues.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        std::set<std::uint32_t> acc;
        for (std::size_t k = 0; k < residues.size(); ++k) {
            if (!((mask >> k) & 1)) continue;
            for (auto m : residues[k])
                if (!acc.erase(m)) acc.insert(m);
        }
        if (acc.size() == 1) found.insert(*acc.begin());
    }
    return {found.begin(), found.end()};
}

inline std::vector<std::uint32_t> ids(const std::vector<dpic::MessageId>& v) {
    std::vector<std::uint32_t> out;
    for (auto m : v) out.push_back(m.value);
    return out;
}

struct SweepPoint {
    std::uint32_t c, k, p;
};

// C in [3, 40] with P = max(1, r_max - 2), K = 2P and with P = r_max, K = 2P + 3.
inline std::vector<SweepPoint> sweep_points(std::uint32_t lo = 3, std::uint32_t hi = 40) {
    std::vector<SweepPoint> out;
    for (std::uint32_t c = lo; c <= hi; ++c) {
        const auto r = dpic::r_max(c);
        const std::uint32_t p_min = r > 3 ? r - 2 : 1;
        out.push_back({c, 2 * p_min, p_min});
        out.push_back({c, 2 * r + 3, r});
    }
    return out;
}

}  // namespace fixtures
