#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2inv/errors.hpp"

namespace sl2inv {

/// Dense integer matrix. Entries are 128-bit internally with checked
/// arithmetic; construction takes 64-bit values. Intermediate results
/// exceeding the magnitude cap raise CapError rather than wrapping.
class IntMat {
public:
    IntMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}
    IntMat(size_t rows, size_t cols, const std::vector<long long>& entries);

    static IntMat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    __int128& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const __int128& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    size_t rows_, cols_;
    std::vector<__int128> e_;
};

struct SnfResult {
    IntMat u, d, v; // u * a * v = d
};

/// Smith normal form by elementary row/column operations. Pivot selection is
/// the least absolute nonzero entry, ties broken row-major. U and V are
/// unimodular and D is diagonal with a nonnegative divisibility chain.
SnfResult smith_normal_form(const IntMat& a);

/// Finitely generated abelian group in invariant-factor normal form:
/// Z^rank x Z/d1 x ... x Z/ds with d1 | d2 | ... and all di >= 2.
struct AbelianGroup {
    size_t rank = 0;
    std::vector<long long> torsion;
    bool operator==(const AbelianGroup&) const = default;
    std::string to_string() const;
};

/// The quotient Z^rows / im(A).
AbelianGroup cokernel(const IntMat& a);

/// m = p^e * m' with p prime to m'; returns (p^e, m').
std::pair<long long, long long> p_part_split(long long m, long long p);

/// Character group of mu_r: Z/r for r >= 1, Z for r = 0 (the torus itself).
AbelianGroup char_group_of_mu(long long r);

/// Checked helpers shared with the SNF internals.
__int128 checked_add(__int128 a, __int128 b);
__int128 checked_mul(__int128 a, __int128 b);

std::string int128_to_string(__int128 v);

} // namespace sl2inv
