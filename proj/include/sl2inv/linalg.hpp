#pragma once

#include <vector>

#include "sl2inv/gf.hpp"

namespace sl2inv {

/// Dense matrix over one field context. Exact Gaussian elimination with
/// deterministic pivoting: first nonzero column, least row index.
struct FMatrix {
    const FieldCtx* ctx = nullptr;
    size_t rows = 0, cols = 0;
    std::vector<FieldElem> a;

    FMatrix() = default;
    FMatrix(const FieldCtx* F, size_t r, size_t c)
        : ctx(F), rows(r), cols(c), a(r * c, F->zero()) {}

    FieldElem& at(size_t i, size_t j) { return a[i * cols + j]; }
    const FieldElem& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

/// Reduced row echelon form in place; returns the rank and, optionally, the
/// pivot column of each nonzero row.
size_t rref(FMatrix& m, std::vector<size_t>* pivot_cols = nullptr);

/// Canonical kernel basis: one vector per free column in ascending column
/// order, with 1 at the free column.
std::vector<std::vector<FieldElem>> kernel_basis(const FMatrix& m);

/// Incremental row space in reduced echelon form.
class EchelonBasis {
public:
    EchelonBasis(const FieldCtx* F, size_t cols) : ctx_(F), cols_(cols) {}

    /// Reduces v against the basis; the residue is empty-normalized to zero
    /// coefficients if v was dependent.
    std::vector<FieldElem> reduce(std::vector<FieldElem> v) const;

    /// Returns the normalized residue row if v enlarges the span, otherwise
    /// an empty vector. The stored basis stays fully reduced.
    std::vector<FieldElem> insert(std::vector<FieldElem> v);

    size_t rank() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    const std::vector<std::vector<FieldElem>>& rows() const { return rows_; }

private:
    const FieldCtx* ctx_;
    size_t cols_;
    std::vector<std::vector<FieldElem>> rows_; // sorted by pivot column
    std::vector<size_t> pivots_;
};

} // namespace sl2inv
