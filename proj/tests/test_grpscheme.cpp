#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sl2inv/grpscheme.hpp"

using namespace sl2inv;

TEST_CASE("catalog constructors") {
    // A_3 at p = 2: fully infinitesimal (4 = 2^2), trivial reduced part
    auto a3 = make_catalog(AdeType::A(3), 2);
    CHECK(a3.r == 4);
    CHECK(a3.p_e == 4);
    CHECK(reduced_part(a3).size() == 1);
    CHECK(order(a3) == 4);

    // D_5 at p = 3: r = 6, connected part mu_3, order 12 = 4*5 - 8
    auto d5 = make_catalog(AdeType::D(5), 3);
    CHECK(d5.r == 6);
    CHECK(connected_component(d5) == 3);
    CHECK(d5.extra_gens.size() == 1);
    CHECK(is_antidiagonal(d5.extra_gens[0]));
    CHECK(reduced_part(d5).size() == 4);
    CHECK(order(d5) == 12);

    CHECK_THROWS_AS(make_catalog(AdeType::E(8), 5), GateError);
    CHECK_THROWS_AS(make_catalog(AdeType::D(4), 2), GateError);
    CHECK_THROWS_AS(make_catalog(AdeType::E(6), 3), GateError);
    CHECK_THROWS_AS(make_catalog(AdeType::E(7), 2), GateError);
}

TEST_CASE("order table") {
    for (uint64_t p : {2, 3, 5, 7, 11}) {
        for (int n = 1; n <= 10; ++n) {
            auto g = make_catalog(AdeType::A(n), p);
            CHECK(order(g) == n + 1);
        }
        if (p >= 3)
            for (int n = 4; n <= 10; ++n) CHECK(order(make_catalog(AdeType::D(n), p)) == 4 * n - 8);
        if (p >= 5) {
            CHECK(order(make_catalog(AdeType::E(6), p)) == 24);
            CHECK(order(make_catalog(AdeType::E(7), p)) == 48);
        }
        if (p >= 7) CHECK(order(make_catalog(AdeType::E(8), p)) == 120);
    }
}

TEST_CASE("connected and reduced parts") {
    auto a1p2 = make_catalog(AdeType::A(1), 2);
    CHECK(connected_component(a1p2) == 2);
    CHECK(reduced_part(a1p2).size() == 1);

    auto d4p5 = make_catalog(AdeType::D(4), 5);
    CHECK(connected_component(d4p5) == 1);
    CHECK(reduced_part(d4p5).size() == 8); // reduced case: the full quaternion group

    auto a4p3 = make_catalog(AdeType::A(4), 3);
    CHECK(connected_component(a4p3) == 1);
    CHECK(reduced_part(a4p3).size() == 5);

    // schemes are reduced iff p does not divide r
    CHECK(order(d4p5) == (long long)reduced_part(d4p5).size());
    CHECK(order(a1p2) != (long long)reduced_part(a1p2).size());
}

TEST_CASE("sigma squared is -I inside the mu points") {
    for (uint64_t p : {3, 5, 7, 11})
        for (int n : {4, 5, 7, 10}) {
            auto d = make_catalog(AdeType::D(n), p);
            Mat2 s2 = mul(d.extra_gens[0], d.extra_gens[0]);
            CHECK(s2 == mat2_scalar(neg(d.ctx->one())));
            CHECK(reduced_part(d).contains(s2));
        }
}

TEST_CASE("no catalog reduced element is a pseudo-reflection") {
    for (uint64_t p : {5, 7, 11}) {
        for (auto t : {AdeType::A(4), AdeType::D(4), AdeType::E(6), AdeType::E(7)}) {
            if (p < t.min_char()) continue;
            auto g = make_catalog(t, p);
            for (const auto& e : reduced_part(g).elements) {
                CHECK(det(e) == g.ctx->one());
                CHECK_FALSE(is_pseudo_reflection(e));
            }
        }
    }
}

TEST_CASE("catalog point sets are Frobenius stable") {
    // coefficientwise Frobenius permutes each catalog group; this is what
    // makes the canonical invariant bases live over the prime field
    for (auto [t, p] : std::vector<std::pair<AdeType, uint64_t>>{
             {AdeType::E(6), 5}, {AdeType::E(7), 5}, {AdeType::E(8), 7}, {AdeType::D(6), 3}}) {
        auto g = make_catalog(t, p);
        const auto& els = reduced_part(g).elements;
        for (const auto& e : els) {
            Mat2 f(pow(e.a, p), pow(e.b, p), pow(e.c, p), pow(e.d, p));
            CHECK(reduced_part(g).contains(f));
        }
    }
}

TEST_CASE("validate") {
    const FieldCtx* F5 = build_field(5, 1);
    auto ok = make_catalog(AdeType::D(4), 5);
    CHECK(validate(ok).empty());

    // non-(anti)diagonal generator with r >= 3
    Mat2 shear(F5->one(), F5->one(), F5->zero(), F5->one());
    auto badshape = make_scheme(build_field(5, ext_degree_for_root(5, 4)), 4,
                                {embed(shear, build_field(5, ext_degree_for_root(5, 4)))});
    auto v = validate(badshape);
    CHECK(!v.empty());

    // transvection group: reduced order divisible by p
    const FieldCtx* F2 = build_field(2, 1);
    Mat2 tv(F2->one(), F2->one(), F2->zero(), F2->one());
    auto badred = make_scheme(F2, 1, {tv});
    v = validate(badred);
    REQUIRE(!v.empty());
    CHECK(v[0].find("divisible") != std::string::npos);

    // r = p = 2 with non-abelian reduced part (scalar-case contradiction)
    const FieldCtx* F4 = build_field(2, 2);
    FieldElem z3 = primitive_root_of_unity(F4, 3);
    Mat2 rot(F4->zero(), F4->one(), F4->one(), add(z3, inv(z3))); // order 3
    Mat2 w(F4->zero(), z3, inv(z3), F4->zero());                  // det 1, order 2
    auto sc = make_scheme(F4, 2, {rot, w});
    v = validate(sc);
    CHECK(!v.empty());

    // determinant check
    Mat2 notdet1 = mat2_diag(F5->from_int(2), F5->from_int(2));
    auto baddet = make_scheme(F5, 1, {notdet1});
    v = validate(baddet);
    CHECK(!v.empty());
}

TEST_CASE("scheme file round trip") {
    for (auto [t, p] : std::vector<std::pair<AdeType, uint64_t>>{
             {AdeType::A(3), 2}, {AdeType::A(5), 3}, {AdeType::D(5), 3}, {AdeType::E(6), 5},
             {AdeType::E(8), 11}}) {
        auto g = make_catalog(t, p);
        std::string text = emit_scheme(g);
        auto h = parse_scheme(text);
        CHECK(emit_scheme(h) == text); // byte-identical re-emission
        CHECK(scheme_equal(g, h));
        CHECK(order(g) == order(h));
    }

    // integer shortcut entries and '#' comments parse fine
    auto g = parse_scheme("# a comment\n5 1 4\ngen: [[0,2],[2,0]]\n");
    CHECK(g.r == 4);
    CHECK(g.extra_gens.size() == 1);

    CHECK_THROWS_AS(parse_scheme("5 1 4\nmodulus: 1 1\n"), ValidationError);
    CHECK_THROWS_AS(parse_scheme("5 1 4\ngen: [[0,2],[2]]\n"), ValidationError);
    CHECK_THROWS_AS(parse_scheme(""), ValidationError);
}

TEST_CASE("scheme conjugation and equality") {
    // reduced scheme: arbitrary conjugation is fine
    auto d4 = make_catalog(AdeType::D(4), 5);
    const FieldCtx* F = d4.ctx;
    Mat2 t(F->one(), F->one(), F->zero(), F->one());
    auto c = scheme_conjugate(t, d4);
    CHECK(order(c) == order(d4));
    CHECK(c.p_e == 1);

    // non-scalar infinitesimal part: only monomial conjugators are allowed
    auto a5 = make_catalog(AdeType::A(5), 3); // r = 6, p_e = 3
    const FieldCtx* F6 = a5.ctx;
    CHECK_THROWS_AS(scheme_conjugate(Mat2(F6->one(), F6->one(), F6->zero(), F6->one()), a5),
                    ValidationError);
    FieldElem u = F6->from_int(2);
    auto diagconj = scheme_conjugate(mat2_diag(u, inv(u)), a5);
    CHECK(scheme_equal(diagconj, a5));
    // antidiagonal conjugation flips the weights but keeps the same subscheme
    Mat2 anti(F6->zero(), F6->one(), neg(F6->one()), F6->zero());
    auto anticonj = scheme_conjugate(anti, a5);
    CHECK(scheme_equal(anticonj, a5));

    CHECK_FALSE(scheme_equal(make_catalog(AdeType::A(3), 2), make_catalog(AdeType::A(3), 5)));
    CHECK_FALSE(scheme_equal(make_catalog(AdeType::A(3), 5), make_catalog(AdeType::A(4), 5)));
}
