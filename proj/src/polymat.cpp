#include "powerdec/polymat.hpp"

#include <stdexcept>

namespace powerdec {

PolyMatrix::PolyMatrix(size_t rows, size_t cols, const FieldPtr& field)
    : rows_(rows), cols_(cols), field_(field), cells_(rows * cols, Poly(field)) {
    if (!rows || !cols) throw std::invalid_argument("matrix dimensions must be positive");
}

std::vector<Poly> PolyMatrix::row(size_t r) const {
    std::vector<Poly> out;
    out.reserve(cols_);
    for (size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

namespace {

// Stats over a row stored inside a matrix; avoids copying Poly rows.
RowStats stats_of(const PolyMatrix& m, size_t r, const ShiftVector& shifts) {
    int best = Poly::kZeroDegree;
    size_t pivot = 0;
    bool any = false;
    for (size_t c = 0; c < m.cols(); ++c) {
        const Poly& p = m.at(r, c);
        if (p.is_zero()) continue;
        int d = p.degree() + shifts[c];
        if (!any || d >= best) {  // rightmost wins ties
            best = d;
            pivot = c;
            any = true;
        }
    }
    if (!any) throw std::invalid_argument("all-zero row has no shifted degree");
    return {best, pivot};
}

}  // namespace

RowStats shifted_row_stats(const std::vector<Poly>& row, const ShiftVector& shifts) {
    if (row.size() != shifts.size())
        throw std::invalid_argument("shift vector length must match column count");
    int best = Poly::kZeroDegree;
    size_t pivot = 0;
    bool any = false;
    for (size_t c = 0; c < row.size(); ++c) {
        if (row[c].is_zero()) continue;
        int d = row[c].degree() + shifts[c];
        if (!any || d >= best) {
            best = d;
            pivot = c;
            any = true;
        }
    }
    if (!any) throw std::invalid_argument("all-zero row has no shifted degree");
    return {best, pivot};
}

PolyMatrix weak_popov(PolyMatrix m, const ShiftVector& shifts, ReductionTrace* trace) {
    if (shifts.size() != m.cols())
        throw std::invalid_argument("shift vector length must match column count");

    const size_t rows = m.rows();
    std::vector<RowStats> stats(rows);
    for (size_t r = 0; r < rows; ++r) stats[r] = stats_of(m, r, shifts);

    long long degree_sum = 0;
    for (const auto& s : stats) degree_sum += s.degree;

    while (true) {
        // find a pivot clash
        size_t a = rows, b = rows;
        for (size_t i = 0; i < rows && a == rows; ++i)
            for (size_t j = i + 1; j < rows; ++j)
                if (stats[i].pivot == stats[j].pivot) {
                    a = i;
                    b = j;
                    break;
                }
        if (a == rows) break;

        // reducer = lower shifted degree; ties favour the lower row index
        size_t red = a, tgt = b;
        if (stats[b].degree < stats[a].degree) {
            red = b;
            tgt = a;
        }
        const size_t piv = stats[red].pivot;
        FieldElement ratio = m.at(tgt, piv).leading() / m.at(red, piv).leading();
        size_t delta = (size_t)(m.at(tgt, piv).degree() - m.at(red, piv).degree());

        bool zeroed = true;
        for (size_t c = 0; c < m.cols(); ++c) {
            m.at(tgt, c).sub_scaled_shifted(m.at(red, c), ratio, delta);
            if (!m.at(tgt, c).is_zero()) zeroed = false;
        }

        if (zeroed)
            throw std::runtime_error("rank-deficient matrix in weak Popov reduction");

        stats[tgt] = stats_of(m, tgt, shifts);
        long long new_sum = 0;
        for (const auto& s : stats) new_sum += s.degree;
        if (trace) {
            ++trace->transformations;
            if (new_sum > degree_sum) trace->degree_sum_monotone = false;
        }
        degree_sum = new_sum;
    }
    return m;
}

std::vector<Poly> minimal_row(const PolyMatrix& reduced, const ShiftVector& shifts,
                              size_t pivot_wanted) {
    for (size_t r = 0; r < reduced.rows(); ++r) {
        auto s = stats_of(reduced, r, shifts);
        if (s.pivot == pivot_wanted) return reduced.row(r);
    }
    throw std::runtime_error("no row with the requested pivot");
}

}  // namespace powerdec
