#include "sl2inv/polyinv.hpp"

#include <algorithm>
#include <functional>

namespace sl2inv {

BivarPoly BivarPoly::monomial(const FieldCtx* F, int a, int b, const FieldElem& c) {
    if (a < 0 || b < 0) throw ValidationError("negative exponent");
    BivarPoly f(F);
    f.set(a, b, c);
    return f;
}

int BivarPoly::degree() const {
    if (terms_.empty()) return -1;
    auto last = std::prev(terms_.end());
    return last->first.first + last->first.second;
}

FieldElem BivarPoly::coefficient(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? ctx_->zero() : it->second;
}

void BivarPoly::set(int a, int b, const FieldElem& c) {
    if (c.ctx() != ctx_) throw ValidationError("coefficient context mismatch");
    if (c.is_zero())
        terms_.erase({a, b});
    else
        terms_[{a, b}] = c;
}

BivarPoly add(const BivarPoly& f, const BivarPoly& g) {
    if (f.ctx() != g.ctx()) throw ValidationError("polynomial context mismatch");
    BivarPoly r = f;
    for (const auto& [m, c] : g.terms()) r.set(m.first, m.second, add(r.coefficient(m.first, m.second), c));
    return r;
}

BivarPoly sub(const BivarPoly& f, const BivarPoly& g) {
    if (f.ctx() != g.ctx()) throw ValidationError("polynomial context mismatch");
    BivarPoly r = f;
    for (const auto& [m, c] : g.terms()) r.set(m.first, m.second, sub(r.coefficient(m.first, m.second), c));
    return r;
}

BivarPoly scale(const FieldElem& c, const BivarPoly& f) {
    BivarPoly r(f.ctx());
    if (c.is_zero()) return r;
    for (const auto& [m, x] : f.terms()) r.set(m.first, m.second, mul(c, x));
    return r;
}

BivarPoly mul(const BivarPoly& f, const BivarPoly& g) {
    if (f.ctx() != g.ctx()) throw ValidationError("polynomial context mismatch");
    BivarPoly r(f.ctx());
    for (const auto& [m1, c1] : f.terms())
        for (const auto& [m2, c2] : g.terms()) {
            int a = m1.first + m2.first, b = m1.second + m2.second;
            r.set(a, b, add(r.coefficient(a, b), mul(c1, c2)));
        }
    return r;
}

BivarPoly poly_pow(const BivarPoly& f, unsigned e) {
    BivarPoly r = BivarPoly::monomial(f.ctx(), 0, 0, f.ctx()->one());
    BivarPoly base = f;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

BivarPoly embed(const BivarPoly& f, const FieldCtx* dst) {
    BivarPoly r(dst);
    for (const auto& [m, c] : f.terms()) r.set(m.first, m.second, embed(c, dst));
    return r;
}

namespace {

std::string mono_str(int a, int b) {
    if (a == 0 && b == 0) return "1";
    std::string s;
    if (a > 0) s += a == 1 ? "u" : "u^" + std::to_string(a);
    if (b > 0) {
        if (!s.empty()) s += "*";
        s += b == 1 ? "v" : "v^" + std::to_string(b);
    }
    return s;
}

} // namespace

std::string to_string(const BivarPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : f.terms()) {
        if (!s.empty()) s += " + ";
        std::string mono = mono_str(m.first, m.second);
        if (mono == "1")
            s += to_string(c);
        else if (c == f.ctx()->one())
            s += mono;
        else
            s += to_string(c) + "*" + mono;
    }
    return s;
}

namespace {

// powers of the variable images under g, at the element-code level:
// pw[n][i] is the u^{n-i} v^i coefficient of (x*u + y*v)^n
std::vector<std::vector<uint64_t>> lin_pows(const FieldCtx* F, uint64_t x, uint64_t y, int dmax) {
    std::vector<std::vector<uint64_t>> pw((size_t)dmax + 1);
    pw[0] = {1 % F->q};
    for (int n = 1; n <= dmax; ++n) {
        pw[n].assign((size_t)n + 1, 0);
        for (int i = 0; i < n; ++i) {
            if (pw[n - 1][i] == 0) continue;
            pw[n][i] = F->c_add(pw[n][i], F->c_mul(pw[n - 1][i], x));
            pw[n][i + 1] = F->c_add(pw[n][i + 1], F->c_mul(pw[n - 1][i], y));
        }
    }
    return pw;
}

// dense homogeneous action: row[i] is the u^{d-i} v^i coefficient
void act_dense(const FieldCtx* F, const std::vector<std::vector<uint64_t>>& pu,
               const std::vector<std::vector<uint64_t>>& pv, const std::vector<uint64_t>& in,
               int d, std::vector<uint64_t>& out) {
    out.assign((size_t)d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        if (in[(size_t)i] == 0) continue;
        int a = d - i, b = i;
        for (int x = 0; x <= a; ++x) {
            if (pu[a][(size_t)x] == 0) continue;
            uint64_t cx = F->c_mul(in[(size_t)i], pu[a][(size_t)x]);
            for (int y = 0; y <= b; ++y) {
                if (pv[b][(size_t)y] == 0) continue;
                size_t idx = (size_t)(x + y);
                out[idx] = F->c_add(out[idx], F->c_mul(cx, pv[b][(size_t)y]));
            }
        }
    }
}

} // namespace

BivarPoly act(const Mat2& g, const BivarPoly& f) {
    if (g.ctx() != f.ctx()) throw ValidationError("matrix and polynomial contexts differ");
    if (det(g).is_zero()) throw ValidationError("act requires an invertible matrix");
    const FieldCtx* F = f.ctx();
    if (f.is_zero()) return f;
    int dmax = f.degree();
    auto pu = lin_pows(F, g.a.code(), g.c.code(), dmax);
    auto pv = lin_pows(F, g.b.code(), g.d.code(), dmax);

    // split into homogeneous slices, act densely, reassemble
    std::vector<std::vector<uint64_t>> slices((size_t)dmax + 1);
    for (const auto& [m, coeff] : f.terms()) {
        int d = m.first + m.second;
        if (slices[(size_t)d].empty()) slices[(size_t)d].assign((size_t)d + 1, 0);
        slices[(size_t)d][(size_t)m.second] = coeff.code();
    }
    BivarPoly r(F);
    std::vector<uint64_t> out;
    for (int d = 0; d <= dmax; ++d) {
        if (slices[(size_t)d].empty()) continue;
        act_dense(F, pu, pv, slices[(size_t)d], d, out);
        for (int i = 0; i <= d; ++i)
            if (out[(size_t)i] != 0) r.set(d - i, i, F->from_code(out[(size_t)i]));
    }
    return r;
}

std::vector<std::pair<int, int>> mu_invariant_basis(long long r, int d) {
    if (r < 1) throw ValidationError("mu_invariant_basis needs r >= 1");
    if (d < 0) throw ValidationError("mu_invariant_basis needs d >= 0");
    std::vector<std::pair<int, int>> out;
    for (int a = d; a >= 0; --a) {
        int b = d - a;
        long long w = (long long)a - b;
        if (((w % r) + r) % r == 0) out.emplace_back(a, b);
    }
    return out;
}

BivarPoly reynolds(const GroupClosure& h, const BivarPoly& f) {
    const FieldCtx* F = f.ctx();
    if (h.ctx != F) throw ValidationError("group and polynomial contexts differ");
    if (h.size() % F->p == 0)
        throw ValidationError("Reynolds operator undefined: group order divisible by the characteristic");
    BivarPoly s(F);
    for (const auto& g : h.elements) s = add(s, act(g, f));
    return scale(inv(F->from_int((long long)h.size())), s);
}

namespace {

// dense coordinates of a homogeneous degree-d polynomial over the monomial
// basis u^d, u^{d-1}v, ..., v^d
std::vector<FieldElem> coords(const BivarPoly& f, int d) {
    std::vector<FieldElem> v((size_t)d + 1, f.ctx()->zero());
    for (const auto& [m, c] : f.terms()) {
        if (m.first + m.second != d) throw std::logic_error("inhomogeneous polynomial in coords");
        v[(size_t)m.second] = c;
    }
    return v;
}

BivarPoly from_coords(const FieldCtx* F, const std::vector<FieldElem>& v, int d) {
    BivarPoly f(F);
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) f.set(d - (int)i, (int)i, v[i]);
    return f;
}

} // namespace

std::vector<BivarPoly> invariant_basis(const SubgroupScheme& g, int d) {
    const FieldCtx* F = g.ctx;
    auto filt = mu_invariant_basis(g.r, d);
    if (filt.empty()) return {};
    const GroupClosure& h = g.reduced;
    if (h.size() % F->p == 0)
        throw ValidationError("Reynolds operator undefined: group order divisible by the characteristic");

    // Reynolds image of each filtered monomial, computed densely: sum the
    // action of every group element, then divide by |H|
    FMatrix m(F, filt.size(), (size_t)d + 1);
    std::vector<std::vector<uint64_t>> sums(filt.size(), std::vector<uint64_t>((size_t)d + 1, 0));
    std::vector<uint64_t> in((size_t)d + 1, 0), img;
    for (const auto& e : h.elements) {
        auto pu = lin_pows(F, e.a.code(), e.c.code(), d);
        auto pv = lin_pows(F, e.b.code(), e.d.code(), d);
        for (size_t i = 0; i < filt.size(); ++i) {
            std::fill(in.begin(), in.end(), 0);
            in[(size_t)filt[i].second] = 1 % F->q;
            act_dense(F, pu, pv, in, d, img);
            for (size_t j = 0; j <= (size_t)d; ++j) sums[i][j] = F->c_add(sums[i][j], img[j]);
        }
    }
    uint64_t scale = F->c_inv(F->from_int((long long)h.size()).code());
    for (size_t i = 0; i < filt.size(); ++i)
        for (size_t j = 0; j <= (size_t)d; ++j)
            m.at(i, j) = F->from_code(F->c_mul(scale, sums[i][j]));
    size_t rank = rref(m);
    std::vector<BivarPoly> out;
    out.reserve(rank);
    for (size_t i = 0; i < rank; ++i) {
        std::vector<FieldElem> row(m.cols, F->zero());
        for (size_t j = 0; j < m.cols; ++j) row[j] = m.at(i, j);
        out.push_back(from_coords(F, row, d));
    }
    return out;
}

std::vector<long long> hilbert(const SubgroupScheme& g, int dmax) {
    std::vector<long long> dims;
    dims.reserve(dmax + 1);
    for (int d = 0; d <= dmax; ++d) dims.push_back((long long)invariant_basis(g, d).size());
    return dims;
}

std::array<int, 3> expected_degrees(const AdeType& t) {
    switch (t.kind) {
    case AdeKind::A: return {2, t.n + 1, t.n + 1};
    case AdeKind::D: return {4, 2 * t.n - 4, 2 * t.n - 2};
    case AdeKind::E6: return {6, 8, 12};
    case AdeKind::E7: return {8, 12, 18};
    case AdeKind::E8: return {12, 20, 30};
    }
    throw std::logic_error("unreachable");
}

int relation_degree(const AdeType& t) {
    switch (t.kind) {
    case AdeKind::A: return 2 * t.n + 2;
    case AdeKind::D: return 4 * t.n - 4;
    case AdeKind::E6: return 24;
    case AdeKind::E7: return 36;
    case AdeKind::E8: return 60;
    }
    throw std::logic_error("unreachable");
}

std::vector<long long> expected_hilbert(const AdeType& t, int dmax) {
    auto deg = expected_degrees(t);
    int e = relation_degree(t);
    // lattice point counts for the denominator, minus the shifted numerator
    auto count = [&](int d) -> long long {
        if (d < 0) return 0;
        long long n = 0;
        for (int i = 0; i * deg[0] <= d; ++i)
            for (int j = 0; i * deg[0] + j * deg[1] <= d; ++j)
                if ((d - i * deg[0] - j * deg[1]) % deg[2] == 0) ++n;
        return n;
    };
    std::vector<long long> out;
    out.reserve(dmax + 1);
    for (int d = 0; d <= dmax; ++d) out.push_back(count(d) - count(d - e));
    return out;
}

std::vector<std::pair<int, BivarPoly>> minimal_generators(const SubgroupScheme& g, int dmax) {
    const FieldCtx* F = g.ctx;
    std::vector<std::pair<int, BivarPoly>> gens;
    for (int d = 1; d <= dmax; ++d) {
        auto inv_d = invariant_basis(g, d);
        if (inv_d.empty()) continue;
        EchelonBasis span(F, (size_t)d + 1);
        // all products of chosen generators of total degree d: enumerate
        // exponent vectors recursively in generator order
        std::function<void(size_t, int, const BivarPoly&)> rec = [&](size_t i, int rem, const BivarPoly& acc) {
            if (rem == 0) {
                span.insert(coords(acc, d));
                return;
            }
            if (i == gens.size()) return;
            rec(i + 1, rem, acc);
            if (gens[i].first <= rem)
                rec(i, rem - gens[i].first, mul(acc, gens[i].second));
        };
        rec(0, d, BivarPoly::monomial(F, 0, 0, F->one()));
        for (const auto& b : inv_d) {
            auto residue = span.insert(coords(b, d));
            if (!residue.empty()) gens.emplace_back(d, from_coords(F, residue, d));
        }
    }
    if (gens.size() != 3)
        throw ValidationError("expected 3 minimal generators within degree " + std::to_string(dmax) +
                              ", found " + std::to_string(gens.size()));
    return gens;
}

FieldElem WeightedPoly3::coefficient(const std::array<int, 3>& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ctx_->zero() : it->second;
}

void WeightedPoly3::set(const std::array<int, 3>& m, const FieldElem& c) {
    if (c.ctx() != ctx_) throw ValidationError("coefficient context mismatch");
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = c;
}

int WeightedPoly3::weighted_degree() const {
    if (terms_.empty()) return -1;
    const auto& m = terms_.begin()->first;
    return m[0] * w_[0] + m[1] * w_[1] + m[2] * w_[2];
}

std::string to_string(const WeightedPoly3& f) {
    if (f.is_zero()) return "0";
    static const char* names[3] = {"X", "Y", "Z"};
    std::string s;
    for (const auto& [m, c] : f.terms()) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (int t = 0; t < 3; ++t) {
            if (m[t] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[t];
            if (m[t] > 1) mono += "^" + std::to_string(m[t]);
        }
        if (mono.empty())
            s += to_string(c);
        else if (c == f.ctx()->one())
            s += mono;
        else
            s += to_string(c) + "*" + mono;
    }
    return s;
}

BivarPoly substitute(const WeightedPoly3& rel, const std::vector<std::pair<int, BivarPoly>>& gens) {
    if (gens.size() != 3) throw ValidationError("substitute needs exactly 3 generators");
    const FieldCtx* F = rel.ctx();
    for (const auto& [d, f] : gens)
        if (f.ctx() != F) throw ValidationError("generator context mismatch");
    // cache powers
    std::array<std::vector<BivarPoly>, 3> pows;
    for (int t = 0; t < 3; ++t) pows[t].push_back(BivarPoly::monomial(F, 0, 0, F->one()));
    auto power = [&](int t, int e) -> const BivarPoly& {
        while ((int)pows[t].size() <= e) pows[t].push_back(mul(pows[t].back(), gens[t].second));
        return pows[t][e];
    };
    BivarPoly out(F);
    for (const auto& [m, c] : rel.terms()) {
        BivarPoly term = scale(c, power(0, m[0]));
        term = mul(term, power(1, m[1]));
        term = mul(term, power(2, m[2]));
        out = add(out, term);
    }
    return out;
}

} // namespace sl2inv
