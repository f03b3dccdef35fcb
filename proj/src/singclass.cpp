#include "sl2inv/singclass.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace sl2inv {

std::array<int, 3> template_weights(const AdeType& t) {
    switch (t.kind) {
    case AdeKind::A: return {t.n + 1, t.n + 1, 2};
    case AdeKind::D: return {2 * t.n - 2, 4, 2 * t.n - 4};
    default: return expected_degrees(t);
    }
}

namespace {

// E-type kernel polynomials, computed by find_relation on the catalog
// instances at p = 11 and lifted to rationals by cross-checking at p = 13.
// Stored as (exponents, numerator, denominator).
struct RatTerm {
    std::array<int, 3> mono;
    long long num, den;
};

const std::vector<RatTerm>& e_template_terms(AdeKind k) {
    static const std::vector<RatTerm> e6 = {
        {{4, 0, 0}, 1, 1}, {{0, 3, 0}, -1, 108}, {{0, 0, 2}, 1, 108}};
    static const std::vector<RatTerm> e7 = {
        {{3, 1, 0}, 1, 1}, {{0, 3, 0}, -108, 1}, {{0, 0, 2}, -1, 1}};
    static const std::vector<RatTerm> e8 = {
        {{5, 0, 0}, 1, 1}, {{0, 3, 0}, 1, 1728}, {{0, 0, 2}, -1, 1728}};
    switch (k) {
    case AdeKind::E6: return e6;
    case AdeKind::E7: return e7;
    default: return e8;
    }
}

} // namespace

NormalForm normal_form_template(const AdeType& t, const FieldCtx* F) {
    WeightedPoly3 poly(F, template_weights(t));
    switch (t.kind) {
    case AdeKind::A:
        poly.set({1, 1, 0}, F->one());
        poly.set({0, 0, t.n + 1}, F->one());
        break;
    case AdeKind::D:
        poly.set({2, 0, 0}, F->one());
        poly.set({0, 1, 2}, F->one());
        poly.set({0, t.n - 1, 0}, F->one());
        break;
    default:
        for (const auto& term : e_template_terms(t.kind)) {
            FieldElem c = mul(F->from_int(term.num), inv(F->from_int(term.den)));
            poly.set(term.mono, c);
        }
        break;
    }
    return {t, poly};
}

WeightedPoly3 find_relation(const std::vector<std::pair<int, BivarPoly>>& gens, int e) {
    if (gens.size() != 3) throw ValidationError("find_relation needs exactly 3 generators");
    const FieldCtx* F = gens[0].second.ctx();
    std::array<int, 3> w = {gens[0].first, gens[1].first, gens[2].first};
    for (int d : w)
        if (d < 1) throw ValidationError("generator degrees must be positive");

    // monomials X^i Y^j Z^l of weighted degree e, X-dominant lex order
    std::vector<std::array<int, 3>> monos;
    for (int i = e / w[0]; i >= 0; --i)
        for (int j = (e - i * w[0]) / w[1]; j >= 0; --j) {
            int rest = e - i * w[0] - j * w[1];
            if (rest % w[2] == 0) monos.push_back({i, j, rest / w[2]});
        }
    if (monos.empty()) throw ValidationError("no monomials of the requested weighted degree");

    // substitution matrix: columns are the images in S_e
    std::array<std::vector<BivarPoly>, 3> pows;
    for (int t = 0; t < 3; ++t)
        pows[t].push_back(BivarPoly::monomial(F, 0, 0, F->one()));
    auto power = [&](int t, int x) -> const BivarPoly& {
        while ((int)pows[t].size() <= x) pows[t].push_back(mul(pows[t].back(), gens[t].second));
        return pows[t][x];
    };
    FMatrix m(F, (size_t)e + 1, monos.size());
    for (size_t c = 0; c < monos.size(); ++c) {
        BivarPoly img = mul(mul(power(0, monos[c][0]), power(1, monos[c][1])), power(2, monos[c][2]));
        for (const auto& [mm, coeff] : img.terms()) {
            if (mm.first + mm.second != e) throw ValidationError("generators are not homogeneous of their degrees");
            m.at((size_t)mm.second, c) = coeff;
        }
    }
    auto ker = kernel_basis(m);
    if (ker.empty()) throw ValidationError("no relation at weighted degree " + std::to_string(e));
    if (ker.size() > 1)
        throw ValidationError("relation space has dimension " + std::to_string(ker.size()) +
                              "; generators are not minimal");
    // normalize: first monomial in the fixed order gets coefficient 1
    std::vector<FieldElem>& v = ker[0];
    size_t lead = 0;
    while (lead < v.size() && v[lead].is_zero()) ++lead;
    FieldElem s = inv(v[lead]);
    WeightedPoly3 rel(F, w);
    for (size_t c = 0; c < monos.size(); ++c)
        if (!v[c].is_zero()) rel.set(monos[c], mul(s, v[c]));
    return rel;
}

namespace {

// All k-th roots of val, ascending by code, extending the field as needed so
// that the full set of k-th roots of unity is available.
std::vector<FieldElem> all_kth_roots(const FieldElem& val, unsigned k) {
    const FieldCtx* F = val.ctx();
    uint64_t p = F->p;
    uint64_t kp = k;
    while (kp % p == 0) kp /= p;
    unsigned need = (unsigned)std::lcm<uint64_t>(F->k, ext_degree_for_root(p, kp));
    FieldElem v = embed(val, build_field(p, need));
    FieldElem r0 = nth_root(v, k);
    const FieldCtx* G = r0.ctx();
    uint64_t g = std::gcd<uint64_t>(k, G->q - 1);
    std::vector<FieldElem> roots = {r0};
    if (g > 1) {
        FieldElem zeta = pow(G->generator(), (G->q - 1) / g);
        FieldElem cur = r0;
        for (uint64_t j = 1; j < g; ++j) {
            cur = mul(cur, zeta);
            roots.push_back(cur);
        }
    }
    std::sort(roots.begin(), roots.end(), elem_less);
    return roots;
}

struct SolveState {
    const FieldCtx* ctx;
    std::vector<std::array<int, 3>> monos; // template monomials
    std::vector<FieldElem> relc;           // permuted relation coefficients
    std::vector<FieldElem> tplc;           // template coefficients
    std::array<std::optional<FieldElem>, 3> assign;

    void lift(const FieldCtx* dst) {
        if (dst == ctx) return;
        for (auto& c : relc) c = embed(c, dst);
        for (auto& c : tplc) c = embed(c, dst);
        for (auto& a : assign)
            if (a) a = embed(*a, dst);
        ctx = dst;
    }
};

bool solve_scalings(SolveState st, std::array<FieldElem, 3>& out) {
    // verify fully-resolved monomials, and find the next one to solve
    int next = -1;
    for (size_t j = 0; j < st.monos.size(); ++j) {
        int unresolved = -1;
        bool multi = false;
        for (int t = 0; t < 3; ++t) {
            if (st.monos[j][t] > 0 && !st.assign[t]) {
                if (unresolved >= 0) multi = true;
                unresolved = t;
            }
        }
        if (unresolved < 0) {
            FieldElem lhs = st.relc[j];
            for (int t = 0; t < 3; ++t)
                if (st.monos[j][t] > 0) lhs = mul(lhs, pow(*st.assign[t], (uint64_t)st.monos[j][t]));
            if (lhs != st.tplc[j]) return false;
        } else if (!multi && next < 0) {
            next = (int)j;
        }
    }
    bool all_assigned = st.assign[0] && st.assign[1] && st.assign[2];
    if (all_assigned) {
        out = {*st.assign[0], *st.assign[1], *st.assign[2]};
        return true;
    }
    if (next < 0) {
        // every remaining monomial has several unresolved variables (or none
        // involve them at all): pin the first free variable to 1
        for (int t = 0; t < 3; ++t)
            if (!st.assign[t]) {
                SolveState s2 = st;
                s2.assign[t] = st.ctx->one();
                return solve_scalings(std::move(s2), out);
            }
        return false;
    }
    // solve x^k = tpl / (rel * resolved part) for the single unresolved var
    int var = -1, k = 0;
    for (int t = 0; t < 3; ++t)
        if (st.monos[next][t] > 0 && !st.assign[t]) {
            var = t;
            k = st.monos[next][t];
        }
    FieldElem denom = st.relc[next];
    for (int t = 0; t < 3; ++t)
        if (st.monos[next][t] > 0 && st.assign[t])
            denom = mul(denom, pow(*st.assign[t], (uint64_t)st.monos[next][t]));
    FieldElem target = mul(st.tplc[next], inv(denom));
    for (const FieldElem& root : all_kth_roots(target, (unsigned)k)) {
        SolveState s2 = st;
        s2.lift(root.ctx());
        s2.assign[var] = root;
        if (solve_scalings(s2, out)) return true;
    }
    return false;
}

std::vector<AdeType> candidate_types(std::array<int, 3> w, int e) {
    std::array<int, 3> s = w;
    std::sort(s.begin(), s.end());
    std::vector<AdeType> out;
    if (s[0] == 2 && s[1] == s[2] && e == 2 * s[1] && s[1] >= 2) out.push_back(AdeType::A(s[1] - 1));
    if (s[0] == 4 && s[2] == s[1] + 2 && s[1] >= 4 && e == 2 * s[2]) out.push_back(AdeType::D((s[1] + 4) / 2));
    if (s == std::array<int, 3>{6, 8, 12} && e == 24) out.push_back(AdeType::E(6));
    if (s == std::array<int, 3>{8, 12, 18} && e == 36) out.push_back(AdeType::E(7));
    if (s == std::array<int, 3>{12, 20, 30} && e == 60) out.push_back(AdeType::E(8));
    return out;
}

} // namespace

AdeMatch normalize_ADE(const WeightedPoly3& rel) {
    if (rel.is_zero()) throw ValidationError("cannot normalize the zero relation");
    const std::array<int, 3>& w = rel.weights();
    int e = rel.weighted_degree();
    for (const auto& [m, c] : rel.terms())
        if (m[0] * w[0] + m[1] * w[1] + m[2] * w[2] != e)
            throw ValidationError("relation is not weighted-homogeneous");

    static const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

    for (const AdeType& t : candidate_types(w, e)) {
        auto tw = template_weights(t);
        NormalForm nf = normal_form_template(t, rel.ctx());
        for (const auto& perm : perms) {
            bool wok = true;
            for (int i = 0; i < 3; ++i)
                if (w[i] != tw[perm[i]]) wok = false;
            if (!wok) continue;
            // permute the relation into template variables
            WeightedPoly3 prel(rel.ctx(), tw);
            for (const auto& [m, c] : rel.terms()) {
                std::array<int, 3> pm = {0, 0, 0};
                for (int i = 0; i < 3; ++i) pm[perm[i]] = m[i];
                prel.set(pm, c);
            }
            // support must agree
            if (prel.terms().size() != nf.poly.terms().size()) continue;
            bool same = true;
            auto it1 = prel.terms().begin();
            auto it2 = nf.poly.terms().begin();
            for (; it1 != prel.terms().end(); ++it1, ++it2)
                if (it1->first != it2->first) same = false;
            if (!same) continue;

            SolveState st;
            st.ctx = rel.ctx();
            for (const auto& [m, c] : nf.poly.terms()) {
                st.monos.push_back(m);
                st.relc.push_back(prel.coefficient(m));
                st.tplc.push_back(c);
            }
            std::array<FieldElem, 3> sol = {st.ctx->zero(), st.ctx->zero(), st.ctx->zero()};
            if (solve_scalings(st, sol)) {
                AdeMatch match{t, perm, sol[0], sol[1], sol[2], sol[0].ctx()};
                return match;
            }
        }
    }
    throw ValidationError("relation does not match any catalog normal form under diagonal scalings");
}

AdeType classify(const SubgroupScheme& g) {
    auto bad = validate(g);
    if (!bad.empty()) {
        std::string msg = "invalid scheme:";
        for (const auto& s : bad) msg += " " + s + ";";
        throw ValidationError(msg);
    }
    long long N = order(g);
    if (N == 1) throw ValidationError("the trivial scheme is not in the catalog");
    if (is_abelian_scheme(g)) return AdeType::A((int)N - 1);
    if (g.p_e == 1) return classify_reduced(g.reduced);
    if (g.ctx->p == 2 && g.p_e == 2) {
        // scalar connected component; validate guarantees the reduced part is
        // abelian, hence cyclic, and the whole scheme is diagonalizable
        return AdeType::A((int)N - 1);
    }
    if ((N + 8) % 4 != 0)
        throw ValidationError("non-abelian scheme order " + std::to_string(N) + " is not 4n-8");
    int n = (int)((N + 8) / 4);
    if (n < 4) throw ValidationError("non-abelian scheme of order " + std::to_string(N) +
                                     " is below the D_4 threshold");
    return AdeType::D(n);
}

AdeType classify_reduced(const GroupClosure& h) {
    if (h.ctx == nullptr) throw ValidationError("null group");
    long long N = (long long)h.size();
    if (N == 1) throw ValidationError("the trivial subgroup is not in the catalog");
    if (N % (long long)h.ctx->p == 0)
        throw ValidationError("group order divisible by the characteristic is not linearly reductive");
    for (const auto& e : h.elements)
        if (det(e) != h.ctx->one()) throw ValidationError("group is not inside SL2");

    if (is_cyclic(h)) return AdeType::A((int)N - 1);

    long long involutions = 0;
    bool has_index2_cyclic = false;
    for (const auto& e : h.elements) {
        uint64_t o = element_order(e, h.size());
        if (o == 2) ++involutions;
        if ((long long)o * 2 == N) has_index2_cyclic = true;
    }
    if (N % 4 == 0 && involutions == 1 && has_index2_cyclic) return AdeType::D((int)((N + 8) / 4));
    if (involutions == 1 && (N == 24 || N == 48 || N == 120))
        return AdeType::E(N == 24 ? 6 : N == 48 ? 7 : 8);
    throw ValidationError("reduced subgroup of order " + std::to_string(N) +
                          " does not match the catalog");
}

std::string type_tag(const AdeType& t, uint64_t p, long long ord) {
    std::ostringstream os;
    switch (t.kind) {
    case AdeKind::A: os << "A n=" << t.n; break;
    case AdeKind::D: os << "D n=" << t.n; break;
    case AdeKind::E6: os << "E6"; break;
    case AdeKind::E7: os << "E7"; break;
    case AdeKind::E8: os << "E8"; break;
    }
    os << " p=" << p << " |G|=" << ord;
    return os.str();
}

ConjugationResult normalize_conjugator(const SubgroupScheme& g) {
    AdeType t = classify(g);
    uint64_t p = g.ctx->p;
    if (t.kind != AdeKind::A && t.kind != AdeKind::D)
        throw ValidationError("conjugator normalization is implemented for types A and D only");

    if (t.kind == AdeKind::A) {
        if (is_abelian_scheme(g))
            return {mat2_identity(g.ctx), make_catalog(t, p)};
        Mat2 tm = simultaneous_diagonalize(g.reduced);
        return {tm, make_catalog(t, p)};
    }

    // type D: put the maximal cyclic subgroup on the diagonal, then apply the
    // conjugator diag(b^{-1/2} z8, b^{1/2} z8^{-1}) at an antidiagonal element
    SubgroupScheme cur = g;
    Mat2 t1 = mat2_identity(g.ctx);
    if (g.p_e == 1) {
        const GroupClosure& h = g.reduced;
        const Mat2* g0 = nullptr;
        for (const auto& e : h.elements)
            if ((long long)element_order(e, h.size()) * 2 == (long long)h.size()) {
                g0 = &e;
                break;
            }
        if (g0 == nullptr) throw ValidationError("no index-2 cyclic subgroup found");
        t1 = simultaneous_diagonalize(close_group({*g0}));
        cur = scheme_conjugate(t1, g);
    }
    const Mat2* anti = nullptr;
    for (const auto& e : cur.reduced.elements)
        if (is_antidiagonal(e)) {
            anti = &e;
            break;
        }
    if (anti == nullptr) throw ValidationError("no antidiagonal element found");
    FieldElem b = anti->b;

    FieldElem s = nth_root(inv(b), 2); // b^{-1/2}
    const FieldCtx* F = build_field(p, (unsigned)std::lcm<uint64_t>(s.ctx()->k, ext_degree_for_root(p, 8)));
    s = embed(s, F);
    FieldElem z8 = primitive_root_of_unity(F, 8);
    FieldElem w1 = mul(s, z8);
    Mat2 w = mat2_diag(w1, inv(w1));

    SubgroupScheme norm = scheme_conjugate(w, cur);
    SubgroupScheme cat = make_catalog(t, p);
    if (!scheme_equal(norm, cat))
        throw ValidationError("scheme is not conjugate to its catalog representative");
    Mat2 tt = mul(w, embed(t1, F));
    return {tt, cat};
}

} // namespace sl2inv
