#include "sl2inv/mat2.hpp"

#include <algorithm>
#include <map>

namespace sl2inv {

Mat2::Mat2(FieldElem a_, FieldElem b_, FieldElem c_, FieldElem d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a.ctx() == nullptr || a.ctx() != b.ctx() || a.ctx() != c.ctx() || a.ctx() != d.ctx())
        throw ValidationError("matrix entries must share one field context");
}

Mat2 mat2_identity(const FieldCtx* F) {
    return Mat2(F->one(), F->zero(), F->zero(), F->one());
}

Mat2 mat2_diag(const FieldElem& x, const FieldElem& y) {
    return Mat2(x, x.ctx()->zero(), x.ctx()->zero(), y);
}

Mat2 mat2_scalar(const FieldElem& x) { return mat2_diag(x, x); }

Mat2 mul(const Mat2& x, const Mat2& y) {
    return Mat2(add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
                add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d)));
}

FieldElem det(const Mat2& m) { return sub(mul(m.a, m.d), mul(m.b, m.c)); }

FieldElem trace(const Mat2& m) { return add(m.a, m.d); }

Mat2 inverse(const Mat2& m) {
    FieldElem dt = det(m);
    if (dt.is_zero()) throw ValidationError("matrix is singular");
    FieldElem di = inv(dt);
    return Mat2(mul(m.d, di), mul(neg(m.b), di), mul(neg(m.c), di), mul(m.a, di));
}

Mat2 mat2_pow(const Mat2& m, uint64_t e) {
    Mat2 r = mat2_identity(m.ctx());
    Mat2 base = m;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Mat2 embed(const Mat2& m, const FieldCtx* dst) {
    return Mat2(embed(m.a, dst), embed(m.b, dst), embed(m.c, dst), embed(m.d, dst));
}

bool is_diagonal(const Mat2& m) { return m.b.is_zero() && m.c.is_zero(); }

bool is_antidiagonal(const Mat2& m) { return m.a.is_zero() && m.d.is_zero(); }

bool is_scalar(const Mat2& m) { return is_diagonal(m) && m.a == m.d; }

bool is_pseudo_reflection(const Mat2& g) {
    const FieldCtx* F = g.ctx();
    Mat2 h(sub(g.a, F->one()), g.b, g.c, sub(g.d, F->one()));
    bool zero = h.a.is_zero() && h.b.is_zero() && h.c.is_zero() && h.d.is_zero();
    if (zero) return false;
    return det(h).is_zero();
}

bool is_transvection(const Mat2& g) {
    if (!is_pseudo_reflection(g)) return false;
    const FieldCtx* F = g.ctx();
    Mat2 h(sub(g.a, F->one()), g.b, g.c, sub(g.d, F->one()));
    Mat2 h2 = mul(h, h);
    return h2.a.is_zero() && h2.b.is_zero() && h2.c.is_zero() && h2.d.is_zero();
}

uint64_t element_order(const Mat2& g, uint64_t cap) {
    if (det(g).is_zero()) throw ValidationError("element of a group must be invertible");
    Mat2 id = mat2_identity(g.ctx());
    Mat2 x = g;
    for (uint64_t n = 1; n <= cap; ++n) {
        if (x == id) return n;
        x = mul(x, g);
    }
    throw CapError("element order exceeds cap");
}

bool GroupClosure::contains(const Mat2& m) const {
    for (const auto& e : elements)
        if (e == m) return true;
    return false;
}

GroupClosure close_group(const std::vector<Mat2>& gens, size_t cap, bool require_sl2) {
    if (gens.empty()) throw ValidationError("close_group needs at least one generator");
    const FieldCtx* F = gens[0].ctx();
    for (const auto& g : gens) {
        if (g.ctx() != F) throw ValidationError("generators must share one field context");
        if (det(g).is_zero()) throw ValidationError("singular generator");
        if (require_sl2 && det(g) != F->one())
            throw ValidationError("generator is not in SL2");
    }

    GroupClosure out;
    out.ctx = F;
    std::map<std::array<uint64_t, 4>, size_t> seen;
    Mat2 id = mat2_identity(F);
    out.elements.push_back(id);
    seen[id.code()] = 0;

    std::vector<Mat2> frontier = {id};
    while (!frontier.empty()) {
        std::vector<Mat2> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                Mat2 y = mul(x, g);
                if (!seen.count(y.code())) {
                    seen[y.code()] = size_t(-1); // reserve; index fixed after sort
                    next.push_back(y);
                }
            }
        std::sort(next.begin(), next.end(),
                  [](const Mat2& x, const Mat2& y) { return x.code() < y.code(); });
        for (const auto& y : next) {
            if (out.elements.size() >= cap) throw CapError("group closure exceeds cap");
            seen[y.code()] = out.elements.size();
            out.elements.push_back(y);
        }
        frontier = std::move(next);
    }
    for (const auto& g : gens) out.gen_indices.push_back(seen.at(g.code()));
    return out;
}

bool is_abelian(const GroupClosure& g) {
    for (size_t i : g.gen_indices)
        for (size_t j : g.gen_indices)
            if (mul(g.elements[i], g.elements[j]) != mul(g.elements[j], g.elements[i]))
                return false;
    return true;
}

bool is_cyclic(const GroupClosure& g) {
    for (const auto& e : g.elements)
        if (element_order(e, g.size()) == g.size()) return true;
    return false;
}

std::vector<Mat2> center(const GroupClosure& g) {
    std::vector<Mat2> z;
    for (const auto& e : g.elements) {
        bool central = true;
        for (size_t i : g.gen_indices)
            if (mul(e, g.elements[i]) != mul(g.elements[i], e)) {
                central = false;
                break;
            }
        if (central) z.push_back(e);
    }
    return z;
}

namespace {

bool is_semisimple(const Mat2& g) {
    if (is_scalar(g)) return true;
    // distinct eigenvalues iff the characteristic polynomial is separable
    const FieldCtx* F = g.ctx();
    FieldElem tr = trace(g), dt = det(g);
    FieldElem disc = sub(mul(tr, tr), mul(F->from_int(4), dt));
    if (F->p == 2) return !tr.is_zero();
    return !disc.is_zero();
}

// kernel vector of a singular nonzero 2x2, first nonzero coordinate = 1
std::pair<FieldElem, FieldElem> kernel_vector(const Mat2& m) {
    const FieldCtx* F = m.ctx();
    if (!m.a.is_zero() || !m.b.is_zero()) {
        if (m.b.is_zero()) return {F->zero(), F->one()}; // a*x = 0, a != 0
        // (b, -a), normalized
        FieldElem x = m.b, y = neg(m.a);
        FieldElem s = inv(x);
        return {F->one(), mul(y, s)};
    }
    if (!m.c.is_zero() || !m.d.is_zero()) {
        if (m.d.is_zero()) return {F->zero(), F->one()};
        FieldElem x = m.d, y = neg(m.c);
        FieldElem s = inv(x);
        return {F->one(), mul(y, s)};
    }
    return {F->one(), F->zero()}; // zero matrix: anything
}

} // namespace

Mat2 simultaneous_diagonalize(const GroupClosure& g) {
    if (!is_abelian(g)) throw ValidationError("simultaneous_diagonalize requires an abelian group");
    for (const auto& e : g.elements)
        if (!is_semisimple(e))
            throw ValidationError("non-semisimple element (order divisible by the characteristic)");

    const Mat2* g0 = nullptr;
    for (const auto& e : g.elements)
        if (!is_scalar(e)) {
            g0 = &e;
            break;
        }
    if (g0 == nullptr) return mat2_identity(g.ctx); // all scalar: already diagonal

    // eigenvalues from the characteristic polynomial x^2 - tr x + det
    auto roots = quadratic_roots(neg(trace(*g0)), det(*g0));
    if (roots.size() != 2) throw std::logic_error("semisimple non-scalar matrix with a double eigenvalue");
    const FieldCtx* E = roots[0].ctx();
    Mat2 ge = embed(*g0, E);
    FieldElem l1 = roots[0], l2 = roots[1];

    auto eigvec = [&](const FieldElem& l) {
        Mat2 m(sub(ge.a, l), ge.b, ge.c, sub(ge.d, l));
        return kernel_vector(m);
    };
    auto [x1, y1] = eigvec(l1);
    auto [x2, y2] = eigvec(l2);
    // P = eigenvector columns; scale column 2 so det P = 1, then T = P^-1
    FieldElem dp = sub(mul(x1, y2), mul(x2, y1));
    if (dp.is_zero()) throw std::logic_error("eigenvectors are dependent");
    FieldElem s = inv(dp);
    Mat2 P(x1, mul(x2, s), y1, mul(y2, s));
    return inverse(P);
}

GroupClosure conjugate(const Mat2& t, const GroupClosure& g) {
    const FieldCtx* F = t.ctx();
    if (g.ctx != F && (F->p != g.ctx->p || F->k % g.ctx->k != 0))
        throw ValidationError("conjugator context does not extend the group context");
    Mat2 ti = inverse(t);
    GroupClosure out;
    out.ctx = F;
    out.gen_indices = g.gen_indices;
    out.elements.reserve(g.size());
    for (const auto& e : g.elements) out.elements.push_back(mul(mul(t, embed(e, F)), ti));
    return out;
}

} // namespace sl2inv
