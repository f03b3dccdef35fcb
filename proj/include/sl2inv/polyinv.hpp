#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sl2inv/grpscheme.hpp"
#include "sl2inv/linalg.hpp"

namespace sl2inv {

/// Monomial order used everywhere: total degree ascending, then u-exponent
/// descending. The canonical text form lists terms in this order.
struct BivarMonoLess {
    bool operator()(const std::pair<int, int>& x, const std::pair<int, int>& y) const {
        int dx = x.first + x.second, dy = y.first + y.second;
        if (dx != dy) return dx < dy;
        return x.first > y.first;
    }
};

/// Polynomial in k[u, v]; canonical form, zero coefficients absent.
class BivarPoly {
public:
    using TermMap = std::map<std::pair<int, int>, FieldElem, BivarMonoLess>;

    explicit BivarPoly(const FieldCtx* F) : ctx_(F) {}
    static BivarPoly monomial(const FieldCtx* F, int a, int b, const FieldElem& c);

    const FieldCtx* ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // max a+b, -1 for the zero polynomial
    FieldElem coefficient(int a, int b) const;
    void set(int a, int b, const FieldElem& c); // inserts or erases for c = 0

    bool operator==(const BivarPoly& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }
    bool operator!=(const BivarPoly& o) const { return !(*this == o); }

private:
    const FieldCtx* ctx_;
    TermMap terms_;
};

BivarPoly add(const BivarPoly& f, const BivarPoly& g);
BivarPoly sub(const BivarPoly& f, const BivarPoly& g);
BivarPoly scale(const FieldElem& c, const BivarPoly& f);
BivarPoly mul(const BivarPoly& f, const BivarPoly& g);
BivarPoly poly_pow(const BivarPoly& f, unsigned e);
BivarPoly embed(const BivarPoly& f, const FieldCtx* dst);
std::string to_string(const BivarPoly& f);

inline BivarPoly operator+(const BivarPoly& f, const BivarPoly& g) { return add(f, g); }
inline BivarPoly operator-(const BivarPoly& f, const BivarPoly& g) { return sub(f, g); }
inline BivarPoly operator*(const BivarPoly& f, const BivarPoly& g) { return mul(f, g); }

/// Left action of g on k[u,v] extending the defining representation:
/// u -> a*u + c*v, v -> b*u + d*v for g = [[a,b],[c,d]]. In particular
/// act(diag(z, z^-1), u) = z*u, so u has mu-weight +1.
BivarPoly act(const Mat2& g, const BivarPoly& f);

/// Monomials u^a v^b with a + b = d and a = b (mod r), u-exponent descending.
std::vector<std::pair<int, int>> mu_invariant_basis(long long r, int d);

/// (1/|H|) sum over H of act(g, f). Requires |H| invertible in the field.
BivarPoly reynolds(const GroupClosure& h, const BivarPoly& f);

/// Basis of the degree-d invariants of the scheme: the image of the reduced
/// part's Reynolds projector on the span of the mu-filtered monomials, put in
/// reduced row echelon form.
std::vector<BivarPoly> invariant_basis(const SubgroupScheme& g, int d);

/// dim (S_d)^G for d = 0..dmax.
std::vector<long long> hilbert(const SubgroupScheme& g, int dmax);

/// Catalog generator degrees, ascending: (2, n+1, n+1), (4, 2n-4, 2n-2),
/// (6,8,12), (8,12,18), (12,20,30).
std::array<int, 3> expected_degrees(const AdeType& t);

/// Degree of the single relation: 2n+2, 4n-4, 24, 36, 60.
int relation_degree(const AdeType& t);

/// Coefficients of (1 - t^e) / ((1-t^d1)(1-t^d2)(1-t^d3)) through dmax.
std::vector<long long> expected_hilbert(const AdeType& t, int dmax);

/// New generators degree by degree: a basis of the degree-d invariants modulo
/// products of the generators already chosen, in echelon form with leading
/// coefficient 1. Errors unless exactly three generators appear within dmax.
std::vector<std::pair<int, BivarPoly>> minimal_generators(const SubgroupScheme& g, int dmax);

/// Monomial order for k[X,Y,Z]: lexicographic on (i, j, l), X-dominant first.
struct WeightedMonoLess {
    bool operator()(const std::array<int, 3>& x, const std::array<int, 3>& y) const {
        return x > y; // map iteration starts at the lex-greatest exponent
    }
};

/// Weighted polynomial in k[X,Y,Z] with positive integer weights.
class WeightedPoly3 {
public:
    using TermMap = std::map<std::array<int, 3>, FieldElem, WeightedMonoLess>;

    WeightedPoly3(const FieldCtx* F, std::array<int, 3> weights) : ctx_(F), w_(weights) {}

    const FieldCtx* ctx() const { return ctx_; }
    const std::array<int, 3>& weights() const { return w_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    FieldElem coefficient(const std::array<int, 3>& m) const;
    void set(const std::array<int, 3>& m, const FieldElem& c);
    int weighted_degree() const; // of the first term, -1 if zero

    bool operator==(const WeightedPoly3& o) const {
        return ctx_ == o.ctx_ && w_ == o.w_ && terms_ == o.terms_;
    }

private:
    const FieldCtx* ctx_;
    std::array<int, 3> w_;
    TermMap terms_;
};

std::string to_string(const WeightedPoly3& f);

/// Image of rel under X,Y,Z -> the three generators.
BivarPoly substitute(const WeightedPoly3& rel, const std::vector<std::pair<int, BivarPoly>>& gens);

} // namespace sl2inv
