#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sl2inv/gf.hpp"

namespace sl2inv {

/// 2x2 matrix over a single field context.
struct Mat2 {
    FieldElem a, b, c, d; // [[a, b], [c, d]]

    Mat2() = default;
    Mat2(FieldElem a_, FieldElem b_, FieldElem c_, FieldElem d_);

    const FieldCtx* ctx() const { return a.ctx(); }
    std::array<uint64_t, 4> code() const { return {a.code(), b.code(), c.code(), d.code()}; }

    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator!=(const Mat2& o) const { return !(*this == o); }
};

Mat2 mat2_identity(const FieldCtx* F);
Mat2 mat2_diag(const FieldElem& x, const FieldElem& y);
Mat2 mat2_scalar(const FieldElem& x);

Mat2 mul(const Mat2& x, const Mat2& y);
FieldElem det(const Mat2& m);
FieldElem trace(const Mat2& m);
Mat2 inverse(const Mat2& m);
Mat2 mat2_pow(const Mat2& m, uint64_t e);
Mat2 embed(const Mat2& m, const FieldCtx* dst);

bool is_diagonal(const Mat2& m);
bool is_antidiagonal(const Mat2& m);
bool is_scalar(const Mat2& m);

/// rank(g - 1) = 1.
bool is_pseudo_reflection(const Mat2& g);

/// Pseudo-reflection with (g - 1)^2 = 0.
bool is_transvection(const Mat2& g);

/// Multiplicative order, or CapError beyond the cap.
uint64_t element_order(const Mat2& g, uint64_t cap = 1000000);

/// A finite matrix group, listed explicitly. Element order is deterministic:
/// breadth-first layers from the identity, each layer sorted by entry code.
struct GroupClosure {
    const FieldCtx* ctx = nullptr;
    std::vector<Mat2> elements;
    std::vector<size_t> gen_indices; // positions of the original generators

    size_t size() const { return elements.size(); }
    bool contains(const Mat2& m) const;
};

constexpr size_t kDefaultClosureCap = 10000;

/// Closure of the generated group; CapError if it exceeds cap. With
/// require_sl2, every generator must have determinant 1.
GroupClosure close_group(const std::vector<Mat2>& gens, size_t cap = kDefaultClosureCap,
                         bool require_sl2 = false);

bool is_abelian(const GroupClosure& g);
bool is_cyclic(const GroupClosure& g);
std::vector<Mat2> center(const GroupClosure& g);

/// For an abelian group of semisimple elements: T with det 1 such that
/// T g T^-1 is diagonal for every g, possibly over a field extension.
Mat2 simultaneous_diagonalize(const GroupClosure& g);

/// Element-wise T g T^-1; embeds the group into T's context first.
GroupClosure conjugate(const Mat2& t, const GroupClosure& g);

} // namespace sl2inv
