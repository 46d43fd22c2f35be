#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace dpic::gf2 {

/// Fixed-width row vector over GF(2), packed 64 coordinates per word.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

    std::size_t width() const { return width_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitRow& operator^=(const BitRow& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Index of the lowest set coordinate, or width() if none.
    std::size_t first() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return width_;
    }

    friend bool operator==(const BitRow&, const BitRow&) = default;

private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Brings `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
std::vector<std::size_t> reduce(std::vector<BitRow>& rows);

/// Rank of the row set (rows are copied).
std::size_t rank(std::vector<BitRow> rows);

/// Coordinates c whose unit vector e_c lies in the span of `rows`.
std::vector<std::size_t> unit_vectors_in_span(std::vector<BitRow> rows);

}  // namespace dpic::gf2
