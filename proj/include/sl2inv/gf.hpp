#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2inv/errors.hpp"

namespace sl2inv {

class FieldCtx;

/// Returns the canonical context for F_{p^k}. Contexts are unique per (p, k)
/// and owned by a process-wide registry, so pointer equality is context
/// equality. The modulus is the monic irreducible of degree k over F_p with
/// the least coefficient code (constant term first, read as a base-p integer).
const FieldCtx* build_field(uint64_t p, unsigned k);

/// Element of F_{p^k}. Internally the base-p coefficient code
/// c0 + c1*p + ... + c_{k-1}*p^{k-1}; the residue representation is
/// recovered by coeffs(). Carries its context; mixing contexts is a hard
/// error.
class FieldElem {
public:
    FieldElem() : ctx_(nullptr), code_(0) {}
    FieldElem(const FieldCtx* ctx, const std::vector<uint32_t>& coeffs);

    const FieldCtx* ctx() const { return ctx_; }
    std::vector<uint32_t> coeffs() const;
    bool is_zero() const { return code_ == 0; }
    uint64_t code() const { return code_; }

    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

private:
    friend class FieldCtx;
    FieldElem(const FieldCtx* ctx, uint64_t code) : ctx_(ctx), code_(code) {}
    const FieldCtx* ctx_;
    uint64_t code_;
};

class FieldCtx {
public:
    uint64_t p = 0;
    unsigned k = 0;
    uint64_t q = 0;                // p^k, capped at 2^48
    std::vector<uint32_t> modulus; // length k+1, monic, constant term first

    FieldElem zero() const { return FieldElem(this, 0); }
    FieldElem one() const { return FieldElem(this, 1 % q); }
    FieldElem from_int(long long v) const;
    FieldElem from_code(uint64_t code) const;

    /// Least-code element of multiplicative order q-1.
    FieldElem generator() const { return FieldElem(this, gen_code_); }

    /// Distinct prime factors of q-1.
    const std::vector<uint64_t>& unit_order_primes() const { return q1_primes_; }

    std::string describe() const;

    // code-level arithmetic; exp/log/Zech tables for small fields, digit
    // arithmetic otherwise
    uint64_t c_add(uint64_t a, uint64_t b) const;
    uint64_t c_sub(uint64_t a, uint64_t b) const;
    uint64_t c_neg(uint64_t a) const;
    uint64_t c_mul(uint64_t a, uint64_t b) const;
    uint64_t c_inv(uint64_t a) const;
    uint64_t c_pow(uint64_t a, uint64_t e) const;

private:
    friend const FieldCtx* build_field(uint64_t, unsigned);
    FieldCtx() = default;
    void decode(uint64_t code, uint32_t* buf) const;
    uint64_t encode(const uint32_t* buf) const;
    uint64_t mul_digits(uint64_t a, uint64_t b) const;

    uint64_t gen_code_ = 0;
    std::vector<uint64_t> q1_primes_;
    bool tabled_ = false;
    std::vector<uint32_t> exp_;  // exp_[i] = code of g^i, i < q-1
    std::vector<uint32_t> log_;  // log_[code], code in 1..q-1
    std::vector<uint32_t> zech_; // log(1 + g^i), q-1 when 1 + g^i = 0
    uint64_t log_m1_ = 0;        // log(-1)
};

FieldElem add(const FieldElem& a, const FieldElem& b);
FieldElem sub(const FieldElem& a, const FieldElem& b);
FieldElem neg(const FieldElem& a);
FieldElem mul(const FieldElem& a, const FieldElem& b);
FieldElem inv(const FieldElem& a);
FieldElem pow(const FieldElem& a, uint64_t e);

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) { return add(a, b); }
inline FieldElem operator-(const FieldElem& a, const FieldElem& b) { return sub(a, b); }
inline FieldElem operator-(const FieldElem& a) { return neg(a); }
inline FieldElem operator*(const FieldElem& a, const FieldElem& b) { return mul(a, b); }
inline FieldElem operator/(const FieldElem& a, const FieldElem& b) { return mul(a, inv(b)); }

/// Least k such that F_{p^k} contains a primitive r-th root of unity for the
/// prime-to-p part of r, i.e. the multiplicative order of p mod r'.
unsigned ext_degree_for_root(uint64_t p, uint64_t r);

/// Primitive r-th root of unity: generator()^((q-1)/r). Requires gcd(r,p)=1
/// and r | q-1 (the caller extends the field first if needed).
FieldElem primitive_root_of_unity(const FieldCtx* F, uint64_t r);

/// Canonical embedding F_{p^k} -> F_{p^K}, k | K. The image of the residue
/// class x is the least-code root of the source modulus in the target field;
/// the choice is cached per (src, dst) pair.
FieldElem embed(const FieldElem& a, const FieldCtx* dst);

/// Some b with b^n = a, deterministically the least-code root in the least
/// extension of a's field containing one. The result carries the (possibly
/// extended) context.
FieldElem nth_root(const FieldElem& a, uint64_t n);

/// Roots of x^2 + b*x + c, in ascending code order, over the least extension
/// containing them. A double root is returned once. Handles char 2 via
/// Artin-Schreier reduction.
std::vector<FieldElem> quadratic_roots(const FieldElem& b, const FieldElem& c);

/// Canonical text: a plain integer for prime fields, otherwise the
/// coefficient list "[c0,c1,...]" (constant term first).
std::string to_string(const FieldElem& a);

/// Strict total order by element code.
inline bool elem_less(const FieldElem& a, const FieldElem& b) { return a.code() < b.code(); }

} // namespace sl2inv
