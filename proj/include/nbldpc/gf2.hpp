#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace nbldpc {

// Dense GF(2) row vectors packed into 64-bit words, plus a tiny incremental
// eliminator. Everything here is desk-scale; no attempt at blocking.
using BitRow = std::vector<uint64_t>;

inline BitRow make_bitrow(int cols) {
    return BitRow(static_cast<size_t>((cols + 63) / 64), 0);
}

inline bool bit_get(const BitRow& r, int i) {
    return (r[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
}

inline void bit_set(BitRow& r, int i) {
    r[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63);
}

inline void bit_flip(BitRow& r, int i) {
    r[static_cast<size_t>(i) >> 6] ^= uint64_t{1} << (i & 63);
}

inline void bit_xor(BitRow& a, const BitRow& b) {
    for (size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
}

inline bool bit_is_zero(const BitRow& r) {
    for (uint64_t w : r)
        if (w) return false;
    return true;
}

inline int bit_popcount(const BitRow& r) {
    int n = 0;
    for (uint64_t w : r) n += std::popcount(w);
    return n;
}

inline std::vector<int32_t> bit_support(const BitRow& r) {
    std::vector<int32_t> out;
    for (size_t w = 0; w < r.size(); ++w) {
        uint64_t x = r[w];
        while (x) {
            out.push_back(static_cast<int32_t>(w * 64 + std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

// Row basis in echelon form; insert() returns false when the row was already
// in the span.
class Gf2Basis {
public:
    explicit Gf2Basis(int cols) : cols_(cols) {}

    bool insert(BitRow row) {
        reduce(row);
        if (bit_is_zero(row)) return false;
        const int p = leading(row);
        rows_.push_back(std::move(row));
        pivots_.push_back(p);
        return true;
    }

    bool contains(BitRow row) const {
        reduce(row);
        return bit_is_zero(row);
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

private:
    void reduce(BitRow& row) const {
        for (size_t k = 0; k < rows_.size(); ++k)
            if (bit_get(row, pivots_[k])) bit_xor(row, rows_[k]);
    }

    static int leading(const BitRow& r) {
        for (size_t w = 0; w < r.size(); ++w)
            if (r[w]) return static_cast<int>(w * 64 + std::countr_zero(r[w]));
        return -1;
    }

    int cols_;
    std::vector<BitRow> rows_;
    std::vector<int> pivots_;
};

} // namespace nbldpc
