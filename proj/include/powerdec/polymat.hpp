#pragma once

#include <cstddef>
#include <vector>

#include "powerdec/poly.hpp"

namespace powerdec {

/// Per-column non-negative degree shifts; length must equal the column count.
using ShiftVector = std::vector<int>;

struct RowStats {
    int degree;     // max_j deg(row_j) + s_j over nonzero entries
    size_t pivot;   // rightmost column attaining the max
};

/// Rectangular matrix of polynomials over one field; rows are candidate
/// solution tuples of the key equations.
class PolyMatrix {
  public:
    PolyMatrix(size_t rows, size_t cols, const FieldPtr& field);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    Poly& at(size_t r, size_t c) { return cells_[r * cols_ + c]; }
    const Poly& at(size_t r, size_t c) const { return cells_[r * cols_ + c]; }

    std::vector<Poly> row(size_t r) const;

  private:
    size_t rows_, cols_;
    FieldPtr field_;
    std::vector<Poly> cells_;
};

/// Shifted degree and rightmost-max pivot of one row.
/// Throws std::invalid_argument on an all-zero row or shift size mismatch.
RowStats shifted_row_stats(const std::vector<Poly>& row, const ShiftVector& shifts);

struct ReductionTrace {
    size_t transformations = 0;
    /// True iff the total shifted row degree never increased at any step.
    bool degree_sum_monotone = true;
};

/// Mulders-Storjohann reduction to shifted weak Popov form: repeatedly
/// cancels the pivot clash between two rows with a simple transformation
/// row_i -= c * x^delta * row_j until pivots are pairwise distinct.
/// Row space is preserved. Throws std::runtime_error when a row collapses
/// to zero (rank-deficient input).
PolyMatrix weak_popov(PolyMatrix m, const ShiftVector& shifts,
                      ReductionTrace* trace = nullptr);

/// The unique row of a weak-Popov-form matrix whose pivot is `pivot_wanted`.
/// With the decoder shifts, pivot 0 selects the minimal solution row.
std::vector<Poly> minimal_row(const PolyMatrix& reduced, const ShiftVector& shifts,
                              size_t pivot_wanted);

}  // namespace powerdec
