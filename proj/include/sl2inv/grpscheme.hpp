#pragma once

#include <string>
#include <vector>

#include "sl2inv/mat2.hpp"

namespace sl2inv {

enum class AdeKind { A, D, E6, E7, E8 };

/// A point in the A/D/E catalog: A_n (n >= 1), D_n (n >= 4), E6, E7, E8.
struct AdeType {
    AdeKind kind;
    int n; // index for A and D; 6, 7, 8 for the E types

    static AdeType A(int n);
    static AdeType D(int n);
    static AdeType E(int which);

    long long group_order() const; // n+1, 4n-8, 24, 48, 120
    uint64_t min_char() const;     // smallest allowed characteristic
    std::string label() const;     // "A5", "D7", "E6", ...

    bool operator==(const AdeType&) const = default;
};

/// A linearly reductive finite subgroup scheme of SL2, stored as the
/// diagonal mu_r with weights (1, -1) together with finitely many extra
/// matrix generators. The connected component mu_{p^e} (p-part of r) is pure
/// grading data; the reduced part is the closure of the mu points of order
/// prime to p and the extra generators.
struct SubgroupScheme {
    const FieldCtx* ctx = nullptr;
    long long r = 1;
    std::vector<Mat2> extra_gens;

    // cached at construction
    long long p_e = 1; // p-part of r; |G degrees of freedom| of the infinitesimal part
    long long m = 1;   // prime-to-p part of r
    GroupClosure reduced;
};

SubgroupScheme make_scheme(const FieldCtx* F, long long r, std::vector<Mat2> extra_gens,
                           size_t cap = kDefaultClosureCap);

/// Catalog constructor over the minimal sufficient field. Throws GateError
/// when the characteristic gate for the type fails.
SubgroupScheme make_catalog(const AdeType& t, uint64_t p);

/// |G| = dim k[G] = p^e * |reduced part|.
long long order(const SubgroupScheme& g);

/// Order p^e of the connected component mu_{p^e}.
long long connected_component(const SubgroupScheme& g);

const GroupClosure& reduced_part(const SubgroupScheme& g);

/// True iff every extra generator is diagonal; the scheme then lies in the
/// diagonal torus.
bool is_abelian_scheme(const SubgroupScheme& g);

/// All invariant violations, empty when the scheme is valid: generators in
/// SL2, (anti)diagonal shape for r >= 3, reduced order prime to p, and the
/// scalar-case exclusion at r = p = 2.
std::vector<std::string> validate(const SubgroupScheme& g);

SubgroupScheme scheme_embed(const SubgroupScheme& g, const FieldCtx* dst);

/// Conjugate the scheme by t. Arbitrary t is allowed when the connected
/// component is trivial or scalar (p^e <= 2); otherwise t must be diagonal or
/// antidiagonal so the conjugated scheme still fits the data model.
SubgroupScheme scheme_conjugate(const Mat2& t, const SubgroupScheme& g);

/// Equality as subschemes of SL2 (up to a common field extension):
/// same characteristic, same infinitesimal order, same reduced point set.
bool scheme_equal(const SubgroupScheme& a, const SubgroupScheme& b);

/// One scheme per file: header "p k r", a "modulus:" line, then "gen:" lines
/// with matrix literals [[a,b],[c,d]]; entries are integers (prime-field
/// shortcut) or coefficient lists. Lines starting with '#' are ignored.
SubgroupScheme parse_scheme(const std::string& text);
std::string emit_scheme(const SubgroupScheme& g);

} // namespace sl2inv
