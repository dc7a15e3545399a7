#pragma once

#include "nbldpc/gf2.hpp"

#include <cstdint>

namespace nbldpc {

// Small dense binary matrix. Holds the b x b multiplication images and the
// simplex generator; parity-check matrices live in SparseBinaryMatrix.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows), make_bitrow(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return bit_get(data_[static_cast<size_t>(r)], c); }
    void set(int r, int c, bool v = true) {
        if (v)
            bit_set(data_[static_cast<size_t>(r)], c);
        else if (get(r, c))
            bit_flip(data_[static_cast<size_t>(r)], c);
    }

    const BitRow& row(int r) const { return data_[static_cast<size_t>(r)]; }

    // Row as an integer mask (cols <= 64); bit (i-1) is column i.
    uint64_t row_mask(int r) const { return data_[static_cast<size_t>(r)][0]; }

    bool invertible() const {
        if (rows_ != cols_) return false;
        Gf2Basis basis(cols_);
        for (const auto& r : data_) basis.insert(r);
        return basis.rank() == rows_;
    }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BitRow> data_;
};

} // namespace nbldpc
