#pragma once

#include <utility>
#include <vector>

#include "skewpbw/field.hpp"

namespace skewpbw {

/// Dense matrix of exact field elements.
class ExactMatrix {
  public:
    ExactMatrix(size_t rows, size_t cols, const Field &f)
        : rows_(rows), cols_(cols),
          data_(rows, std::vector<FieldElement>(cols, FieldElement::zero(f))), field_(f) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Field &field() const { return field_; }

    FieldElement &at(size_t r, size_t c) { return data_[r][c]; }
    const FieldElement &at(size_t r, size_t c) const { return data_[r][c]; }

    std::vector<FieldElement> &row(size_t r) { return data_[r]; }

  private:
    size_t rows_, cols_;
    std::vector<std::vector<FieldElement>> data_;
    Field field_;
};

/// In-place reduced row echelon form with first-nonzero pivoting.
/// Returns the pivot columns. Zero rows end up at the bottom and are dropped.
inline std::vector<size_t> rref(std::vector<std::vector<FieldElement>> &rows, const Field &f) {
    std::vector<size_t> pivots;
    size_t lead = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t r = 0; r < rows.size() && lead < cols; ++r) {
        size_t pr = r, pc = cols;
        for (size_t c = lead; c < cols && pc == cols; ++c)
            for (size_t i = r; i < rows.size(); ++i)
                if (!rows[i][c].is_zero()) {
                    pr = i;
                    pc = c;
                    break;
                }
        if (pc == cols)
            break;
        std::swap(rows[r], rows[pr]);
        FieldElement inv = rows[r][pc].inverse();
        for (size_t c = pc; c < cols; ++c)
            rows[r][c] = rows[r][c] * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][pc].is_zero())
                continue;
            FieldElement m = rows[i][pc];
            for (size_t c = pc; c < cols; ++c)
                rows[i][c] = rows[i][c] - m * rows[r][c];
        }
        pivots.push_back(pc);
        lead = pc + 1;
    }
    rows.resize(pivots.size(), std::vector<FieldElement>(cols, FieldElement::zero(f)));
    return pivots;
}

/// Basis of the right nullspace {v : m v = 0}, canonicalized by a final rref.
inline std::vector<std::vector<FieldElement>> nullspace(const ExactMatrix &m) {
    const Field &f = m.field();
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(m.rows());
    for (size_t r = 0; r < m.rows(); ++r) {
        std::vector<FieldElement> row;
        row.reserve(m.cols());
        for (size_t c = 0; c < m.cols(); ++c)
            row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    std::vector<size_t> pivots = rref(rows, f);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots)
        is_pivot[c] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<FieldElement> v(m.cols(), FieldElement::zero(f));
        v[free] = FieldElement::one(f);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    rref(basis, f);
    return basis;
}

} // namespace skewpbw
