#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sl2inv/mat2.hpp"

using namespace sl2inv;

namespace {

Mat2 m2(const FieldCtx* F, long long a, long long b, long long c, long long d) {
    return Mat2(F->from_int(a), F->from_int(b), F->from_int(c), F->from_int(d));
}

} // namespace

TEST_CASE("closure examples") {
    const FieldCtx* F7 = build_field(7, 1);
    // diag(2,4) has determinant 1 and multiplicative order 3
    auto g = close_group({m2(F7, 2, 0, 0, 4)}, kDefaultClosureCap, true);
    CHECK(g.size() == 3);

    auto triv = close_group({mat2_identity(F7)});
    CHECK(triv.size() == 1);

    // [[0, z4], [z4, 0]] over F_5 with z4 = 2: square is -I, order 4
    const FieldCtx* F5 = build_field(5, 1);
    FieldElem z4 = primitive_root_of_unity(F5, 4);
    CHECK(z4 == F5->from_int(2));
    Mat2 sigma(F5->zero(), z4, z4, F5->zero());
    auto gs = close_group({sigma}, kDefaultClosureCap, true);
    CHECK(gs.size() == 4);
    CHECK(mul(sigma, sigma) == mat2_scalar(F5->from_int(-1)));

    CHECK_THROWS_AS(close_group({m2(F7, 1, 0, 0, 0)}), ValidationError);
    // transvection group in char p is huge only modulo p; cap handles runaway inputs
    CHECK_THROWS_AS(close_group({m2(F7, 1, 1, 0, 1)}, 5), CapError);
}

TEST_CASE("closure is deterministic and idempotent") {
    const FieldCtx* F5 = build_field(5, 1);
    FieldElem z4 = primitive_root_of_unity(F5, 4);
    Mat2 sigma(F5->zero(), z4, z4, F5->zero());
    Mat2 rot = mat2_diag(z4, inv(z4));
    auto g1 = close_group({rot, sigma});
    auto g2 = close_group({rot, sigma});
    REQUIRE(g1.size() == g2.size());
    for (size_t i = 0; i < g1.size(); ++i) CHECK(g1.elements[i] == g2.elements[i]);

    // closing the full element list reproduces the same group
    auto g3 = close_group(g1.elements);
    CHECK(g3.size() == g1.size());
    for (const auto& e : g1.elements) CHECK(g3.contains(e));

    // element orders divide the group order
    for (const auto& e : g1.elements) CHECK(g1.size() % element_order(e) == 0);
}

TEST_CASE("pseudo-reflections and transvections") {
    const FieldCtx* F7 = build_field(7, 1);
    CHECK(is_pseudo_reflection(m2(F7, 1, 1, 0, 1)));
    CHECK(is_transvection(m2(F7, 1, 1, 0, 1)));
    CHECK_FALSE(is_pseudo_reflection(mat2_identity(F7)));
    CHECK_FALSE(is_transvection(mat2_identity(F7)));
    CHECK_FALSE(is_pseudo_reflection(m2(F7, -1, 0, 0, -1)));
    // diag(z, z^-1) with z != +-1 moves both basis vectors
    FieldElem z = primitive_root_of_unity(F7, 3);
    CHECK_FALSE(is_pseudo_reflection(mat2_diag(z, inv(z))));
    CHECK_FALSE(is_transvection(mat2_diag(z, inv(z))));
    // a reflection-like diag(1, -1) is a pseudo-reflection but not a transvection
    CHECK(is_pseudo_reflection(m2(F7, 1, 0, 0, -1)));
    CHECK_FALSE(is_transvection(m2(F7, 1, 0, 0, -1)));
}

TEST_CASE("group structure predicates") {
    const FieldCtx* F5 = build_field(5, 1);
    FieldElem z4 = primitive_root_of_unity(F5, 4);
    Mat2 sigma(F5->zero(), z4, z4, F5->zero());
    Mat2 rot = mat2_diag(z4, inv(z4));

    auto cyc = close_group({rot});
    CHECK(is_abelian(cyc));
    CHECK(is_cyclic(cyc));

    auto q8 = close_group({rot, sigma}); // quaternion group of order 8
    CHECK(q8.size() == 8);
    CHECK_FALSE(is_abelian(q8));
    CHECK_FALSE(is_cyclic(q8));
    auto z = center(q8);
    CHECK(z.size() == 2); // {I, -I}
}

TEST_CASE("simultaneous diagonalization") {
    const FieldCtx* F5 = build_field(5, 1);
    FieldElem z4 = primitive_root_of_unity(F5, 4);

    // already diagonal
    auto diag_group = close_group({mat2_diag(z4, inv(z4))});
    Mat2 t0 = simultaneous_diagonalize(diag_group);
    CHECK(t0 == mat2_identity(F5));

    // rotation [[0,1],[-1,0]] over F_5 diagonalizes to diag(+-2)
    auto rotg = close_group({m2(F5, 0, 1, -1, 0)});
    Mat2 t = simultaneous_diagonalize(rotg);
    CHECK(det(t) == t.ctx()->one());
    auto conj = conjugate(t, rotg);
    for (const auto& e : conj.elements) CHECK(is_diagonal(e));

    // non-semisimple input is rejected
    const FieldCtx* F7 = build_field(7, 1);
    auto unip = close_group({m2(F7, 1, 1, 0, 1)});
    CHECK_THROWS_AS(simultaneous_diagonalize(unip), ValidationError);

    // non-abelian input is rejected
    Mat2 sigma(F5->zero(), z4, z4, F5->zero());
    auto q8 = close_group({mat2_diag(z4, inv(z4)), sigma});
    CHECK_THROWS_AS(simultaneous_diagonalize(q8), ValidationError);

    // an abelian group needing an extension: order-3 rotation over F_2
    const FieldCtx* F2 = build_field(2, 1);
    auto r3 = close_group({m2(F2, 0, 1, 1, 1)});
    CHECK(r3.size() == 3);
    Mat2 t3 = simultaneous_diagonalize(r3);
    CHECK(t3.ctx()->k == 2);
    auto c3 = conjugate(t3, r3);
    for (const auto& e : c3.elements) CHECK(is_diagonal(e));

    // char 2 with extension inside a bigger field: order-5 element over F_4
    const FieldCtx* F16 = build_field(2, 4);
    FieldElem z5 = primitive_root_of_unity(F16, 5);
    Mat2 m(F16->zero(), F16->one(), neg(F16->one()), add(z5, inv(z5)));
    auto g5 = close_group({m});
    CHECK(g5.size() == 5);
    Mat2 t5 = simultaneous_diagonalize(g5);
    auto c5 = conjugate(t5, g5);
    for (const auto& e : c5.elements) CHECK(is_diagonal(e));
}

TEST_CASE("conjugation") {
    const FieldCtx* F7 = build_field(7, 1);
    FieldElem z3 = primitive_root_of_unity(F7, 3);
    auto g = close_group({mat2_diag(z3, inv(z3))});
    Mat2 t = m2(F7, 1, 1, 0, 1);
    auto h = conjugate(t, g);
    CHECK(h.size() == g.size());
    // conjugation preserves order and determinant
    for (size_t i = 0; i < g.size(); ++i) {
        CHECK(det(h.elements[i]) == det(g.elements[i]));
        CHECK(element_order(h.elements[i]) == element_order(g.elements[i]));
    }
}
