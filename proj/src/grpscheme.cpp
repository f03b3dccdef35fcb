#include "sl2inv/grpscheme.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace sl2inv {

AdeType AdeType::A(int n) {
    if (n < 1) throw ValidationError("type A needs n >= 1");
    return {AdeKind::A, n};
}

AdeType AdeType::D(int n) {
    if (n < 4) throw ValidationError("type D needs n >= 4");
    return {AdeKind::D, n};
}

AdeType AdeType::E(int which) {
    switch (which) {
    case 6: return {AdeKind::E6, 6};
    case 7: return {AdeKind::E7, 7};
    case 8: return {AdeKind::E8, 8};
    default: throw ValidationError("type E is E6, E7 or E8");
    }
}

long long AdeType::group_order() const {
    switch (kind) {
    case AdeKind::A: return n + 1;
    case AdeKind::D: return 4LL * n - 8;
    case AdeKind::E6: return 24;
    case AdeKind::E7: return 48;
    case AdeKind::E8: return 120;
    }
    return 0;
}

uint64_t AdeType::min_char() const {
    switch (kind) {
    case AdeKind::A: return 2;
    case AdeKind::D: return 3;
    case AdeKind::E6:
    case AdeKind::E7: return 5;
    case AdeKind::E8: return 7;
    }
    return 2;
}

std::string AdeType::label() const {
    switch (kind) {
    case AdeKind::A: return "A" + std::to_string(n);
    case AdeKind::D: return "D" + std::to_string(n);
    case AdeKind::E6: return "E6";
    case AdeKind::E7: return "E7";
    case AdeKind::E8: return "E8";
    }
    return "?";
}

SubgroupScheme make_scheme(const FieldCtx* F, long long r, std::vector<Mat2> extra_gens, size_t cap) {
    if (F == nullptr) throw ValidationError("null field context");
    if (r < 1) throw ValidationError("scheme needs r >= 1");
    SubgroupScheme g;
    g.ctx = F;
    g.r = r;
    g.extra_gens = std::move(extra_gens);
    for (const auto& mt : g.extra_gens)
        if (mt.ctx() != F) throw ValidationError("generator context differs from scheme context");
    g.p_e = 1;
    g.m = r;
    while (g.m % (long long)F->p == 0) {
        g.m /= (long long)F->p;
        g.p_e *= (long long)F->p;
    }
    std::vector<Mat2> closure_gens;
    if (g.m >= 2) {
        FieldElem zm = primitive_root_of_unity(F, (uint64_t)g.m);
        closure_gens.push_back(mat2_diag(zm, inv(zm)));
    }
    for (const auto& mt : g.extra_gens) closure_gens.push_back(mt);
    if (closure_gens.empty()) closure_gens.push_back(mat2_identity(F));
    g.reduced = close_group(closure_gens, cap);
    return g;
}

namespace {

void gate(const AdeType& t, uint64_t p) {
    if (p < t.min_char())
        throw GateError(t.label() + " requires characteristic >= " + std::to_string(t.min_char()) +
                        ", got " + std::to_string(p));
}

Mat2 sigma_gen(const FieldCtx* F) {
    FieldElem z4 = primitive_root_of_unity(F, 4);
    return Mat2(F->zero(), z4, z4, F->zero());
}

} // namespace

SubgroupScheme make_catalog(const AdeType& t, uint64_t p) {
    gate(t, p);
    switch (t.kind) {
    case AdeKind::A: {
        long long r = t.n + 1;
        const FieldCtx* F = build_field(p, ext_degree_for_root(p, (uint64_t)r));
        return make_scheme(F, r, {});
    }
    case AdeKind::D: {
        long long r = 2LL * t.n - 4;
        uint64_t need = std::lcm<uint64_t>(4, (uint64_t)r);
        const FieldCtx* F = build_field(p, ext_degree_for_root(p, need));
        return make_scheme(F, r, {sigma_gen(F)});
    }
    case AdeKind::E6:
    case AdeKind::E7: {
        const FieldCtx* F = build_field(p, ext_degree_for_root(p, 8));
        FieldElem z4 = primitive_root_of_unity(F, 4);
        FieldElem z8 = primitive_root_of_unity(F, 8);
        FieldElem s2 = nth_root(F->from_int(2), 2); // stays in F: sqrt2 = +-(z8 + z8^-1)
        FieldElem c = inv(s2);
        Mat2 tau(mul(c, pow(z8, 7)), mul(c, pow(z8, 7)), mul(c, pow(z8, 5)), mul(c, z8));
        std::vector<Mat2> gens = {mat2_diag(z4, inv(z4)), sigma_gen(F), tau};
        if (t.kind == AdeKind::E7) gens.push_back(mat2_diag(z8, inv(z8)));
        SubgroupScheme g = make_scheme(F, 1, std::move(gens));
        long long expect = t.group_order();
        if (order(g) != expect)
            throw std::logic_error(t.label() + " closure has unexpected order " +
                                   std::to_string(order(g)));
        return g;
    }
    case AdeKind::E8: {
        const FieldCtx* F = build_field(p, ext_degree_for_root(p, 10));
        FieldElem z10 = primitive_root_of_unity(F, 10);
        FieldElem z5 = primitive_root_of_unity(F, 5);
        FieldElem s = add(z5, inv(z5));
        FieldElem c = inv(sub(mul(z5, z5), pow(z5, 3)));
        Mat2 rot(F->zero(), F->one(), neg(F->one()), F->zero());
        Mat2 icosa(mul(c, s), c, c, mul(c, neg(s)));
        SubgroupScheme g = make_scheme(F, 1, {mat2_diag(z10, inv(z10)), rot, icosa});
        if (order(g) != 120)
            throw std::logic_error("E8 closure has unexpected order " + std::to_string(order(g)));
        return g;
    }
    }
    throw std::logic_error("unreachable");
}

long long order(const SubgroupScheme& g) { return g.p_e * (long long)g.reduced.size(); }

long long connected_component(const SubgroupScheme& g) { return g.p_e; }

const GroupClosure& reduced_part(const SubgroupScheme& g) { return g.reduced; }

bool is_abelian_scheme(const SubgroupScheme& g) {
    for (const auto& mt : g.extra_gens)
        if (!is_diagonal(mt)) return false;
    return true;
}

std::vector<std::string> validate(const SubgroupScheme& g) {
    std::vector<std::string> bad;
    if (g.r < 1) bad.push_back("r must be >= 1");
    const FieldElem one = g.ctx->one();
    for (size_t i = 0; i < g.extra_gens.size(); ++i) {
        const Mat2& mt = g.extra_gens[i];
        if (det(mt) != one)
            bad.push_back("generator " + std::to_string(i) + " is not in SL2");
        if (g.r >= 3 && !is_diagonal(mt) && !is_antidiagonal(mt))
            bad.push_back("generator " + std::to_string(i) +
                          " does not normalize the diagonal torus (must be diagonal or antidiagonal when r >= 3)");
    }
    if (g.reduced.size() % g.ctx->p == 0)
        bad.push_back("reduced part has order divisible by the characteristic (not linearly reductive)");
    if (g.p_e == 2 && g.ctx->p == 2 && !is_abelian(g.reduced))
        bad.push_back("r = p = 2 with a non-abelian reduced part contradicts linear reductivity");
    return bad;
}

SubgroupScheme scheme_embed(const SubgroupScheme& g, const FieldCtx* dst) {
    if (dst == g.ctx) return g;
    std::vector<Mat2> gens;
    gens.reserve(g.extra_gens.size());
    for (const auto& mt : g.extra_gens) gens.push_back(embed(mt, dst));
    return make_scheme(dst, g.r, std::move(gens));
}

SubgroupScheme scheme_conjugate(const Mat2& t, const SubgroupScheme& g0) {
    const FieldCtx* F = t.ctx();
    SubgroupScheme g = (F == g0.ctx) ? g0 : scheme_embed(g0, F);
    if (det(t).is_zero()) throw ValidationError("conjugator is singular");
    Mat2 ti = inverse(t);
    if (g.p_e <= 2) {
        // infinitesimal part trivial or scalar: conjugate the honest points
        if (is_diagonal(t) || is_antidiagonal(t)) {
            std::vector<Mat2> gens;
            for (const auto& mt : g.extra_gens) gens.push_back(mul(mul(t, mt), ti));
            return make_scheme(F, g.r, std::move(gens));
        }
        std::vector<Mat2> gens;
        for (size_t i : g.reduced.gen_indices) gens.push_back(mul(mul(t, g.reduced.elements[i]), ti));
        return make_scheme(F, g.p_e, std::move(gens));
    }
    if (!is_diagonal(t) && !is_antidiagonal(t))
        throw ValidationError("conjugation by a non-monomial matrix does not preserve the mu_r data");
    std::vector<Mat2> gens;
    for (const auto& mt : g.extra_gens) gens.push_back(mul(mul(t, mt), ti));
    return make_scheme(F, g.r, std::move(gens));
}

bool scheme_equal(const SubgroupScheme& a, const SubgroupScheme& b) {
    if (a.ctx->p != b.ctx->p) return false;
    if (a.p_e != b.p_e) return false;
    unsigned K = (unsigned)std::lcm(a.ctx->k, b.ctx->k);
    const FieldCtx* F = build_field(a.ctx->p, K);
    auto codes = [&](const SubgroupScheme& g) {
        std::vector<std::array<uint64_t, 4>> cs;
        for (const auto& e : g.reduced.elements) cs.push_back(embed(e, F).code());
        std::sort(cs.begin(), cs.end());
        return cs;
    };
    return codes(a) == codes(b);
}

namespace {

FieldElem entry_from_json(const nlohmann::json& j, const FieldCtx* F) {
    if (j.is_number_integer()) return F->from_int(j.get<long long>());
    if (j.is_array()) {
        if (j.size() > F->k) throw ValidationError("coefficient list longer than the field degree");
        std::vector<uint32_t> c(F->k, 0);
        for (size_t i = 0; i < j.size(); ++i) {
            if (!j[i].is_number_integer()) throw ValidationError("matrix entry coefficients must be integers");
            long long v = j[i].get<long long>() % (long long)F->p;
            if (v < 0) v += (long long)F->p;
            c[i] = (uint32_t)v;
        }
        return FieldElem(F, std::move(c));
    }
    throw ValidationError("matrix entry must be an integer or a coefficient list");
}

nlohmann::json entry_to_json(const FieldElem& e) {
    if (e.ctx()->k == 1) return (long long)e.coeffs()[0];
    nlohmann::json a = nlohmann::json::array();
    for (auto c : e.coeffs()) a.push_back((long long)c);
    return a;
}

} // namespace

SubgroupScheme parse_scheme(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    const FieldCtx* F = nullptr;
    long long r = 0;
    std::vector<Mat2> gens;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            std::istringstream h(line);
            long long p = 0, k = 0;
            if (!(h >> p >> k >> r)) throw ValidationError("scheme header must be: p k r");
            if (p < 2 || k < 1 || r < 1) throw ValidationError("scheme header values out of range");
            F = build_field((uint64_t)p, (unsigned)k);
            have_header = true;
            continue;
        }
        if (line.rfind("modulus:", 0) == 0) {
            std::istringstream ms(line.substr(8));
            std::vector<uint32_t> mod;
            long long c;
            while (ms >> c) {
                if (c < 0 || c >= (long long)F->p) throw ValidationError("modulus coefficient out of range");
                mod.push_back((uint32_t)c);
            }
            if (mod != F->modulus)
                throw ValidationError("modulus is not the canonical modulus for (p, k)");
            continue;
        }
        if (line.rfind("gen:", 0) == 0) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(line.substr(4));
            } catch (const nlohmann::json::parse_error& e) {
                throw ValidationError(std::string("bad matrix literal: ") + e.what());
            }
            if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
                !j[1].is_array() || j[1].size() != 2)
                throw ValidationError("matrix literal must be [[a,b],[c,d]]");
            gens.push_back(Mat2(entry_from_json(j[0][0], F), entry_from_json(j[0][1], F),
                                entry_from_json(j[1][0], F), entry_from_json(j[1][1], F)));
            continue;
        }
        throw ValidationError("unrecognized scheme file line: " + line);
    }
    if (!have_header) throw ValidationError("empty scheme file");
    return make_scheme(F, r, std::move(gens));
}

std::string emit_scheme(const SubgroupScheme& g) {
    std::ostringstream out;
    out << g.ctx->p << " " << g.ctx->k << " " << g.r << "\n";
    out << "modulus:";
    for (auto c : g.ctx->modulus) out << " " << c;
    out << "\n";
    for (const auto& mt : g.extra_gens) {
        nlohmann::json j = nlohmann::json::array(
            {nlohmann::json::array({entry_to_json(mt.a), entry_to_json(mt.b)}),
             nlohmann::json::array({entry_to_json(mt.c), entry_to_json(mt.d)})});
        out << "gen: " << j.dump() << "\n";
    }
    return out.str();
}

} // namespace sl2inv
