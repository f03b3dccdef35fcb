#include "sl2inv/linalg.hpp"

#include <algorithm>

namespace sl2inv {

size_t rref(FMatrix& m, std::vector<size_t>* pivot_cols) {
    size_t rank = 0;
    for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        size_t sel = rank;
        while (sel < m.rows && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows) continue;
        if (sel != rank)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(rank, j));
        FieldElem piv = inv(m.at(rank, col));
        for (size_t j = col; j < m.cols; ++j) m.at(rank, j) = mul(m.at(rank, j), piv);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col).is_zero()) continue;
            FieldElem f = m.at(i, col);
            for (size_t j = col; j < m.cols; ++j)
                m.at(i, j) = sub(m.at(i, j), mul(f, m.at(rank, j)));
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

std::vector<std::vector<FieldElem>> kernel_basis(const FMatrix& m0) {
    FMatrix m = m0;
    std::vector<size_t> pivots;
    size_t rank = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElem>> out;
    for (size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<FieldElem> v(m.cols, m.ctx->zero());
        v[f] = m.ctx->one();
        for (size_t i = 0; i < rank; ++i) v[pivots[i]] = neg(m.at(i, f));
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<FieldElem> EchelonBasis::reduce(std::vector<FieldElem> v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const FieldElem& c = v[pivots_[i]];
        if (c.is_zero()) continue;
        FieldElem f = c;
        for (size_t j = pivots_[i]; j < cols_; ++j)
            v[j] = sub(v[j], mul(f, rows_[i][j]));
    }
    return v;
}

std::vector<FieldElem> EchelonBasis::insert(std::vector<FieldElem> v) {
    v = reduce(std::move(v));
    size_t lead = cols_;
    for (size_t j = 0; j < cols_; ++j)
        if (!v[j].is_zero()) { lead = j; break; }
    if (lead == cols_) return {};
    FieldElem f = inv(v[lead]);
    for (size_t j = lead; j < cols_; ++j) v[j] = mul(v[j], f);
    // back-eliminate into existing rows to keep the basis reduced
    for (size_t i = 0; i < rows_.size(); ++i) {
        FieldElem c = rows_[i][lead];
        if (c.is_zero()) continue;
        for (size_t j = lead; j < cols_; ++j)
            rows_[i][j] = sub(rows_[i][j], mul(c, v[j]));
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, v);
    pivots_.insert(pivots_.begin() + pos, lead);
    return v;
}

} // namespace sl2inv
