#pragma once

#include "nbldpc/errors.hpp"
#include "nbldpc/gf2.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace nbldpc {

// Sparse binary parity-check matrix with both row and column adjacency.
// Supports (sorted, duplicate-free) are the canonical representation; all
// indices are 0-based in memory, 1-based only in file formats.
class SparseBinaryMatrix {
public:
    SparseBinaryMatrix() = default;
    SparseBinaryMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          row_support_(static_cast<size_t>(rows)),
          col_support_(static_cast<size_t>(cols)) {}

    static SparseBinaryMatrix from_rows(int cols, const std::vector<std::vector<int32_t>>& rows) {
        SparseBinaryMatrix m(0, cols);
        for (const auto& r : rows) m.append_row(r);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const std::vector<int32_t>& row(int r) const { return row_support_[static_cast<size_t>(r)]; }
    const std::vector<int32_t>& col(int c) const { return col_support_[static_cast<size_t>(c)]; }

    void set(int r, int c) {
        check_bounds(r, c);
        auto& rs = row_support_[static_cast<size_t>(r)];
        auto it = std::lower_bound(rs.begin(), rs.end(), c);
        if (it != rs.end() && *it == c) return;
        rs.insert(it, c);
        auto& cs = col_support_[static_cast<size_t>(c)];
        cs.insert(std::lower_bound(cs.begin(), cs.end(), r), r);
    }

    int append_row(std::vector<int32_t> support) {
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        const int r = rows_++;
        for (int32_t c : support) {
            if (c < 0 || c >= cols_) throw StructuralError("row support out of bounds");
            col_support_[static_cast<size_t>(c)].push_back(r);
        }
        row_support_.push_back(std::move(support));
        return r;
    }

    // Vertical stack: rows of `other` appended below this matrix.
    void stack_below(const SparseBinaryMatrix& other) {
        if (other.cols_ != cols_) throw StructuralError("column count mismatch in stack");
        for (int r = 0; r < other.rows_; ++r) append_row(other.row(r));
    }

    BitRow row_bits(int r) const {
        BitRow out = make_bitrow(cols_);
        for (int32_t c : row(r)) bit_set(out, c);
        return out;
    }

    int max_row_degree() const {
        size_t d = 0;
        for (const auto& r : row_support_) d = std::max(d, r.size());
        return static_cast<int>(d);
    }

    int max_col_degree() const {
        size_t d = 0;
        for (const auto& c : col_support_) d = std::max(d, c.size());
        return static_cast<int>(d);
    }

    int rank() const {
        Gf2Basis basis(cols_);
        for (int r = 0; r < rows_; ++r) basis.insert(row_bits(r));
        return basis.rank();
    }

    friend bool operator==(const SparseBinaryMatrix& a, const SparseBinaryMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_support_ == b.row_support_;
    }

private:
    void check_bounds(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw StructuralError("matrix index out of bounds");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<std::vector<int32_t>> row_support_;
    std::vector<std::vector<int32_t>> col_support_;
};

} // namespace nbldpc
