#include "dpic/gf2.hpp"

#include <utility>

namespace dpic::gf2 {

std::vector<std::size_t> reduce(std::vector<BitRow>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t width = rows.front().width();
    std::size_t next = 0;
    for (std::size_t col = 0; col < width && next < rows.size(); ++col) {
        std::size_t pick = next;
        while (pick < rows.size() && !rows[pick].test(col)) ++pick;
        if (pick == rows.size()) continue;
        std::swap(rows[next], rows[pick]);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != next && rows[k].test(col)) rows[k] ^= rows[next];
        pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    return pivots;
}

std::size_t rank(std::vector<BitRow> rows) { return reduce(rows).size(); }

std::vector<std::size_t> unit_vectors_in_span(std::vector<BitRow> rows) {
    // In RREF a vector with a single 1 at a pivot column can only be that
    // pivot's row; non-pivot unit vectors are never in the span.
    const auto pivots = reduce(rows);
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (rows[k].popcount() == 1) out.push_back(pivots[k]);
    return out;
}

}  // namespace dpic::gf2
