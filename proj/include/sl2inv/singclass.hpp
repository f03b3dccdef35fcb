#pragma once

#include "sl2inv/polyinv.hpp"

namespace sl2inv {

/// The hypersurface normal form of a catalog type: XY + Z^{n+1} for A_n,
/// X^2 + YZ^2 + Y^{n-1} for D_n, and frozen kernel polynomials for E6/E7/E8
/// (derived once at a reference prime and cross-checked at a second one).
struct NormalForm {
    AdeType ade;
    WeightedPoly3 poly;
};

/// Template variable weights: A_n (n+1, n+1, 2); D_n (2n-2, 4, 2n-4);
/// E types ascending.
std::array<int, 3> template_weights(const AdeType& t);

NormalForm normal_form_template(const AdeType& t, const FieldCtx* F);

/// The unique (up to scale) algebraic relation among the three generators at
/// weighted degree e, normalized so the first monomial in the X-dominant
/// lexicographic order has coefficient 1. Variables X, Y, Z name the
/// generators in input order; the weights are the generator degrees.
/// Errors if the kernel dimension differs from 1.
WeightedPoly3 find_relation(const std::vector<std::pair<int, BivarPoly>>& gens, int e);

/// Result of matching a relation against a catalog normal form: a variable
/// permutation followed by diagonal scalings X -> sx*X, Y -> sy*Y, Z -> sz*Z
/// (over an extension when roots demand it) carrying the relation onto the
/// template exactly.
struct AdeMatch {
    AdeType ade;
    std::array<int, 3> perm; // input variable i plays template variable perm[i]
    FieldElem sx, sy, sz;    // scalings of the template variables
    const FieldCtx* ctx;     // field where the match lives
};

AdeMatch normalize_ADE(const WeightedPoly3& rel);

/// Classification of a valid scheme per the case analysis: diagonal schemes
/// are A_{|G|-1}; trivial connected component defers to the reduced
/// classification; otherwise non-abelian with infinitesimal part gives D.
AdeType classify(const SubgroupScheme& g);

/// Classification of a nontrivial reduced subgroup with order prime to p:
/// cyclic -> A; unique involution with an index-2 cyclic subgroup -> D;
/// orders 24/48/120 -> E6/E7/E8.
AdeType classify_reduced(const GroupClosure& h);

struct ConjugationResult {
    Mat2 t;                    // element of SL2, possibly over an extension
    SubgroupScheme normalized; // the catalog scheme of the classified type
};

/// A matrix T carrying the scheme onto its catalog representative, for types
/// A and D. E-type inputs are rejected (out of scope).
ConjugationResult normalize_conjugator(const SubgroupScheme& g);

/// One-line type tag: "A n=5 p=3 |G|=6".
std::string type_tag(const AdeType& t, uint64_t p, long long order);

} // namespace sl2inv
