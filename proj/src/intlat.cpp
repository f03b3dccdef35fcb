#include "sl2inv/intlat.hpp"

#include <algorithm>
#include <cstdlib>

namespace sl2inv {

namespace {

const __int128 kMagnitudeCap = (__int128)1 << 120;

__int128 iabs(__int128 v) { return v < 0 ? -v : v; }

} // namespace

__int128 checked_add(__int128 a, __int128 b) {
    __int128 r = a + b;
    if (iabs(r) > kMagnitudeCap) throw CapError("integer overflow: magnitude cap exceeded");
    return r;
}

__int128 checked_mul(__int128 a, __int128 b) {
    if (a == 0 || b == 0) return 0;
    if (iabs(a) > kMagnitudeCap / iabs(b)) throw CapError("integer overflow: magnitude cap exceeded");
    return a * b;
}

std::string int128_to_string(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    if (neg) v = -v;
    std::string s;
    while (v > 0) {
        s += char('0' + int(v % 10));
        v /= 10;
    }
    if (neg) s += '-';
    std::reverse(s.begin(), s.end());
    return s;
}

IntMat::IntMat(size_t rows, size_t cols, const std::vector<long long>& entries)
    : rows_(rows), cols_(cols), e_(rows * cols, 0) {
    if (entries.size() != rows * cols) throw ValidationError("matrix entry count mismatch");
    for (size_t i = 0; i < entries.size(); ++i) e_[i] = entries[i];
}

IntMat IntMat::identity(size_t n) {
    IntMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

void row_axpy(IntMat& m, size_t dst, size_t src, __int128 f) {
    for (size_t j = 0; j < m.cols(); ++j)
        m.at(dst, j) = checked_add(m.at(dst, j), checked_mul(f, m.at(src, j)));
}

void col_axpy(IntMat& m, size_t dst, size_t src, __int128 f) {
    for (size_t i = 0; i < m.rows(); ++i)
        m.at(i, dst) = checked_add(m.at(i, dst), checked_mul(f, m.at(i, src)));
}

void row_swap(IntMat& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void col_swap(IntMat& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void row_negate(IntMat& m, size_t r) {
    for (size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

} // namespace

SnfResult smith_normal_form(const IntMat& a) {
    size_t r = a.rows(), c = a.cols();
    SnfResult res{IntMat::identity(r), a, IntMat::identity(c)};
    IntMat& b = res.d;
    IntMat& u = res.u;
    IntMat& v = res.v;

    size_t m = std::min(r, c);
    for (size_t t = 0; t < m; ++t) {
        for (;;) {
            // least |entry| pivot in the trailing submatrix, ties row-major
            size_t pi = t, pj = t;
            __int128 best = 0;
            for (size_t i = t; i < r; ++i)
                for (size_t j = t; j < c; ++j) {
                    __int128 x = iabs(b.at(i, j));
                    if (x != 0 && (best == 0 || x < best)) {
                        best = x;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) { t = m; break; } // submatrix is zero; done
            row_swap(b, t, pi);
            row_swap(u, t, pi);
            col_swap(b, t, pj);
            col_swap(v, t, pj);

            bool residue = false;
            for (size_t i = t + 1; i < r; ++i) {
                if (b.at(i, t) == 0) continue;
                __int128 qd = b.at(i, t) / b.at(t, t);
                if (qd != 0) { row_axpy(b, i, t, -qd); row_axpy(u, i, t, -qd); }
                if (b.at(i, t) != 0) residue = true;
            }
            for (size_t j = t + 1; j < c; ++j) {
                if (b.at(t, j) == 0) continue;
                __int128 qd = b.at(t, j) / b.at(t, t);
                if (qd != 0) { col_axpy(b, j, t, -qd); col_axpy(v, j, t, -qd); }
                if (b.at(t, j) != 0) residue = true;
            }
            if (residue) continue;

            // force divisibility of the remaining block by the pivot
            bool fixed = false;
            for (size_t i = t + 1; i < r && !fixed; ++i)
                for (size_t j = t + 1; j < c && !fixed; ++j)
                    if (b.at(i, j) % b.at(t, t) != 0) {
                        row_axpy(b, t, i, 1);
                        row_axpy(u, t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (t == m) break;
    }
    for (size_t t = 0; t < m; ++t)
        if (b.at(t, t) < 0) {
            row_negate(b, t);
            row_negate(u, t);
        }
    return res;
}

AbelianGroup cokernel(const IntMat& a) {
    SnfResult s = smith_normal_form(a);
    AbelianGroup g;
    size_t m = std::min(a.rows(), a.cols());
    size_t nonzero = 0;
    for (size_t t = 0; t < m; ++t) {
        __int128 d = s.d.at(t, t);
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) {
            if (d > (__int128)INT64_MAX) throw CapError("invariant factor exceeds 64 bits");
            g.torsion.push_back((long long)d);
        }
    }
    g.rank = a.rows() - nonzero;
    return g;
}

std::string AbelianGroup::to_string() const {
    if (rank == 0 && torsion.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < rank; ++i) {
        if (!s.empty()) s += " x ";
        s += "Z";
    }
    for (auto d : torsion) {
        if (!s.empty()) s += " x ";
        s += "Z/" + std::to_string(d);
    }
    return s;
}

std::pair<long long, long long> p_part_split(long long m, long long p) {
    if (m < 1) throw ValidationError("p_part_split requires m >= 1");
    if (p < 2) throw ValidationError("p_part_split requires a prime p");
    long long pe = 1;
    while (m % p == 0) {
        m /= p;
        pe *= p;
    }
    return {pe, m};
}

AbelianGroup char_group_of_mu(long long r) {
    if (r < 0) throw ValidationError("mu_r requires r >= 0");
    if (r == 0) return AbelianGroup{1, {}};
    if (r == 1) return AbelianGroup{0, {}};
    return AbelianGroup{0, {r}};
}

} // namespace sl2inv
