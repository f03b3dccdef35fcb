#include "sl2inv/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sl2inv {

namespace {

constexpr uint64_t kMaxFieldSize = uint64_t(1) << 48;
constexpr uint64_t kTableThreshold = uint64_t(1) << 20;
constexpr uint64_t kMaxEmbedScan = uint64_t(1) << 22;
constexpr unsigned kMaxDegree = 48;

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> distinct_prime_factors(uint64_t n) {
    std::vector<uint64_t> ps;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t((unsigned __int128)a * b % m);
}

int64_t modinv_i64(int64_t a, int64_t m) {
    int64_t old_r = a % m, r = m, old_s = 1, s = 0;
    while (r != 0) {
        int64_t qu = old_r / r;
        int64_t t = old_r - qu * r; old_r = r; r = t;
        t = old_s - qu * s; old_s = s; s = t;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; }
    if (old_r != 1) throw std::logic_error("modinv: arguments not coprime");
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

// Dense polynomials over F_p (little-endian), used only for the modulus
// search at field construction.
using PPoly = std::vector<uint32_t>;

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = uint32_t((r[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
    ptrim(r);
    return r;
}

PPoly pmod(PPoly a, const PPoly& m, uint64_t p) {
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        uint32_t lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (size_t i = 0; i < dm; ++i) {
                uint64_t v = a[shift + i] + p - uint32_t(uint64_t(lead) * m[i] % p);
                a[shift + i] = uint32_t(v % p);
            }
        }
        a.pop_back();
    }
    ptrim(a);
    return a;
}

PPoly ppowmod(PPoly base, uint64_t e, const PPoly& m, uint64_t p) {
    PPoly r = {1};
    base = pmod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) r = pmod(pmul(r, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, uint64_t p) {
    ptrim(a); ptrim(b);
    while (!b.empty()) {
        uint32_t lc = b.back();
        if (lc != 1) {
            uint64_t il = uint64_t(modinv_i64(int64_t(lc), int64_t(p)));
            for (auto& c : b) c = uint32_t(c * il % p);
        }
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const PPoly& f, uint64_t p) {
    size_t k = f.size() - 1;
    if (k == 1) return true;
    if (f[0] == 0) return false;
    uint64_t pk = 1;
    for (size_t i = 0; i < k; ++i) pk *= p;
    PPoly x = {0, 1};
    PPoly xq = ppowmod(x, pk, f, p);
    if (xq != x) return false;
    for (uint64_t l : distinct_prime_factors(k)) {
        uint64_t pe = 1;
        for (size_t i = 0; i < k / l; ++i) pe *= p;
        PPoly g = ppowmod(x, pe, f, p);
        if (g.size() < 2) g.resize(2, 0);
        g[1] = uint32_t((g[1] + p - 1) % p);
        ptrim(g);
        PPoly d = pgcd(f, g, p);
        if (d.size() > 1) return false;
    }
    return true;
}

PPoly canonical_modulus(uint64_t p, unsigned k) {
    if (k == 1) return {0, 1};
    uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
        PPoly f(k + 1, 0);
        uint64_t c = code;
        for (unsigned i = 0; i < k; ++i) { f[i] = uint32_t(c % p); c /= p; }
        f[k] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

struct Registry {
    std::mutex mu;
    std::map<std::pair<uint64_t, unsigned>, std::unique_ptr<FieldCtx>> fields;
    std::map<std::pair<const FieldCtx*, const FieldCtx*>, uint64_t> embed_roots;
};

Registry& registry() {
    static Registry r;
    return r;
}

void require_same_ctx(const FieldElem& a, const FieldElem& b) {
    if (a.ctx() == nullptr || b.ctx() == nullptr)
        throw ValidationError("operation on a null field element");
    if (a.ctx() != b.ctx())
        throw ValidationError("field elements from different contexts; embed explicitly first");
}

} // namespace

// ---------- FieldCtx code arithmetic ----------

void FieldCtx::decode(uint64_t code, uint32_t* buf) const {
    for (unsigned i = 0; i < k; ++i) {
        buf[i] = uint32_t(code % p);
        code /= p;
    }
}

uint64_t FieldCtx::encode(const uint32_t* buf) const {
    uint64_t c = 0;
    for (unsigned i = k; i-- > 0;) c = c * p + buf[i];
    return c;
}

uint64_t FieldCtx::mul_digits(uint64_t A, uint64_t B) const {
    if (k == 1) return mulmod_u64(A, B, p);
    // for k >= 2 the cap q <= 2^48 bounds p by 2^24, so 64-bit accumulators
    // cannot overflow in the convolution below
    uint32_t a[kMaxDegree], b[kMaxDegree];
    uint64_t acc[2 * kMaxDegree - 1] = {0};
    decode(A, a);
    decode(B, b);
    for (unsigned i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < k; ++j) acc[i + j] += uint64_t(a[i]) * b[j];
    }
    for (unsigned i = 2 * k - 2; i >= k; --i) {
        uint64_t c = acc[i] % p;
        if (c != 0)
            for (unsigned j = 0; j < k; ++j) acc[i - k + j] += c * (p - modulus[j]);
        if (i == k) break;
    }
    uint32_t out[kMaxDegree];
    for (unsigned i = 0; i < k; ++i) out[i] = uint32_t(acc[i] % p);
    return encode(out);
}

uint64_t FieldCtx::c_mul(uint64_t a, uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (tabled_) {
        uint64_t s = log_[a] + log_[b];
        if (s >= q - 1) s -= q - 1;
        return exp_[s];
    }
    return mul_digits(a, b);
}

uint64_t FieldCtx::c_add(uint64_t a, uint64_t b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    if (tabled_) {
        uint64_t i = log_[a], j = log_[b];
        uint64_t d = j >= i ? j - i : j + (q - 1) - i;
        uint32_t z = zech_[d];
        if (z == q - 1) return 0;
        uint64_t s = i + z;
        if (s >= q - 1) s -= q - 1;
        return exp_[s];
    }
    if (k == 1) {
        uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint32_t x[kMaxDegree], y[kMaxDegree];
    decode(a, x);
    decode(b, y);
    for (unsigned i = 0; i < k; ++i) {
        uint64_t s = uint64_t(x[i]) + y[i];
        x[i] = uint32_t(s >= p ? s - p : s);
    }
    return encode(x);
}

uint64_t FieldCtx::c_neg(uint64_t a) const {
    if (a == 0) return 0;
    if (p == 2) return a;
    if (tabled_) {
        uint64_t s = log_[a] + log_m1_;
        if (s >= q - 1) s -= q - 1;
        return exp_[s];
    }
    if (k == 1) return p - a;
    uint32_t x[kMaxDegree];
    decode(a, x);
    for (unsigned i = 0; i < k; ++i) x[i] = x[i] == 0 ? 0 : uint32_t(p - x[i]);
    return encode(x);
}

uint64_t FieldCtx::c_sub(uint64_t a, uint64_t b) const { return c_add(a, c_neg(b)); }

uint64_t FieldCtx::c_pow(uint64_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 % q : 0;
    if (tabled_) {
        uint64_t r = mulmod_u64(log_[a], e % (q - 1), q - 1);
        return exp_[r];
    }
    uint64_t r = 1, base = a;
    e %= (q - 1); // Fermat: a != 0
    while (e > 0) {
        if (e & 1) r = c_mul(r, base);
        base = c_mul(base, base);
        e >>= 1;
    }
    return r;
}

uint64_t FieldCtx::c_inv(uint64_t a) const {
    if (a == 0) throw ValidationError("inverse of zero");
    if (tabled_) {
        uint64_t l = log_[a];
        return exp_[l == 0 ? 0 : q - 1 - l];
    }
    return c_pow(a, q - 2);
}

// ---------- FieldElem ----------

FieldElem::FieldElem(const FieldCtx* ctx, const std::vector<uint32_t>& coeffs) : ctx_(ctx) {
    if (ctx_ == nullptr) throw ValidationError("null field context");
    if (coeffs.size() != ctx_->k) throw ValidationError("coefficient vector has wrong length");
    for (auto c : coeffs)
        if (c >= ctx_->p) throw ValidationError("coefficient out of range");
    uint64_t code = 0;
    for (size_t i = coeffs.size(); i-- > 0;) code = code * ctx_->p + coeffs[i];
    code_ = code;
}

std::vector<uint32_t> FieldElem::coeffs() const {
    std::vector<uint32_t> c(ctx_->k);
    uint64_t v = code_;
    for (unsigned i = 0; i < ctx_->k; ++i) {
        c[i] = uint32_t(v % ctx_->p);
        v /= ctx_->p;
    }
    return c;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    require_same_ctx(a, b);
    return a.code_ == b.code_;
}

FieldElem FieldCtx::from_int(long long v) const {
    long long r = v % (long long)p;
    if (r < 0) r += (long long)p;
    return FieldElem(this, (uint64_t)r);
}

FieldElem FieldCtx::from_code(uint64_t code) const {
    if (code >= q) throw ValidationError("element code out of range");
    return FieldElem(this, code);
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "F_" << p;
    if (k > 1) {
        os << "^" << k << " modulus";
        for (auto c : modulus) os << " " << c;
    }
    return os.str();
}

const FieldCtx* build_field(uint64_t p, unsigned k) {
    if (!is_prime_u64(p)) throw ValidationError("characteristic is not prime");
    if (k < 1) throw ValidationError("extension degree must be >= 1");
    if (k > kMaxDegree) throw CapError("extension degree exceeds internal cap");
    {
        uint64_t q = 1;
        for (unsigned i = 0; i < k; ++i) {
            if (q > kMaxFieldSize / p) throw CapError("field size exceeds internal cap");
            q *= p;
        }
    }
    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_pair(p, k);
    auto it = reg.fields.find(key);
    if (it != reg.fields.end()) return it->second.get();

    auto ctx = std::unique_ptr<FieldCtx>(new FieldCtx());
    ctx->p = p;
    ctx->k = k;
    ctx->q = 1;
    for (unsigned i = 0; i < k; ++i) ctx->q *= p;
    {
        PPoly m = canonical_modulus(p, k);
        m.resize(k + 1, 0);
        ctx->modulus.assign(m.begin(), m.end());
    }
    ctx->q1_primes_ = distinct_prime_factors(ctx->q - 1);

    // least-code generator by direct order testing (digit arithmetic; tables
    // do not exist yet)
    for (uint64_t code = 1; code < ctx->q; ++code) {
        bool ok = true;
        for (uint64_t l : ctx->q1_primes_) {
            if (ctx->c_pow(code, (ctx->q - 1) / l) == 1) { ok = false; break; }
        }
        if (ok) { ctx->gen_code_ = code; break; }
    }

    if (ctx->q <= kTableThreshold) {
        uint64_t q = ctx->q;
        ctx->exp_.resize(q - 1);
        ctx->log_.assign(q, 0);
        uint64_t cur = 1;
        for (uint64_t i = 0; i + 1 < q; ++i) {
            ctx->exp_[i] = uint32_t(cur);
            ctx->log_[cur] = uint32_t(i);
            cur = ctx->mul_digits(cur, ctx->gen_code_);
        }
        ctx->zech_.resize(q - 1);
        for (uint64_t i = 0; i + 1 < q; ++i) {
            uint64_t c = ctx->exp_[i];
            uint64_t c0 = c % p;
            uint64_t cplus = c - c0 + (c0 + 1) % p; // add 1: only digit 0 moves
            ctx->zech_[i] = cplus == 0 ? uint32_t(q - 1) : ctx->log_[cplus];
        }
        ctx->log_m1_ = p == 2 ? 0 : (q - 1) / 2;
        ctx->tabled_ = true;
    }

    const FieldCtx* raw = ctx.get();
    reg.fields[key] = std::move(ctx);
    return raw;
}

FieldElem add(const FieldElem& a, const FieldElem& b) {
    require_same_ctx(a, b);
    return a.ctx()->from_code(a.ctx()->c_add(a.code(), b.code()));
}

FieldElem sub(const FieldElem& a, const FieldElem& b) {
    require_same_ctx(a, b);
    return a.ctx()->from_code(a.ctx()->c_sub(a.code(), b.code()));
}

FieldElem neg(const FieldElem& a) {
    if (a.ctx() == nullptr) throw ValidationError("operation on a null field element");
    return a.ctx()->from_code(a.ctx()->c_neg(a.code()));
}

FieldElem mul(const FieldElem& a, const FieldElem& b) {
    require_same_ctx(a, b);
    return a.ctx()->from_code(a.ctx()->c_mul(a.code(), b.code()));
}

FieldElem pow(const FieldElem& a, uint64_t e) {
    if (a.ctx() == nullptr) throw ValidationError("operation on a null field element");
    return a.ctx()->from_code(a.ctx()->c_pow(a.code(), e));
}

FieldElem inv(const FieldElem& a) {
    if (a.ctx() == nullptr) throw ValidationError("operation on a null field element");
    return a.ctx()->from_code(a.ctx()->c_inv(a.code()));
}

unsigned ext_degree_for_root(uint64_t p, uint64_t r) {
    if (!is_prime_u64(p)) throw ValidationError("characteristic is not prime");
    if (r < 1) throw ValidationError("root order must be >= 1");
    while (r % p == 0) r /= p;
    if (r == 1) return 1;
    unsigned k = 1;
    uint64_t acc = p % r;
    while (acc != 1) {
        acc = mulmod_u64(acc, p % r, r);
        ++k;
    }
    return k;
}

FieldElem primitive_root_of_unity(const FieldCtx* F, uint64_t r) {
    if (r < 1) throw ValidationError("root order must be >= 1");
    if (r % F->p == 0) throw ValidationError("root order not coprime to the characteristic");
    if ((F->q - 1) % r != 0)
        throw ValidationError("field has no primitive root of unity of this order; extend first");
    return pow(F->generator(), (F->q - 1) / r);
}

FieldElem embed(const FieldElem& a, const FieldCtx* dst) {
    const FieldCtx* src = a.ctx();
    if (src == nullptr || dst == nullptr) throw ValidationError("null field context in embed");
    if (src == dst) return a;
    if (src->p != dst->p) throw ValidationError("cannot embed across different characteristics");
    if (dst->k % src->k != 0) throw ValidationError("no embedding: source degree does not divide target degree");
    if (src->k == 1) return dst->from_code(a.code());

    uint64_t root = 0;
    bool have_root = false;
    {
        Registry& reg = registry();
        std::lock_guard<std::mutex> lock(reg.mu);
        auto it = reg.embed_roots.find({src, dst});
        if (it != reg.embed_roots.end()) {
            root = it->second;
            have_root = true;
        }
    }
    if (!have_root) {
        if (src->q > kMaxEmbedScan) throw CapError("embedding scan too large");
        // the copy of F_q inside dst is {0} u <eta>, eta = g^((Q-1)/(q-1));
        // take the least-code root of the source modulus there
        uint64_t eta = dst->c_pow(dst->generator().code(), (dst->q - 1) / (src->q - 1));
        std::vector<uint64_t> roots;
        uint64_t cur = 1;
        for (uint64_t i = 0; i + 1 < src->q; ++i) {
            uint64_t v = 0;
            for (size_t j = src->modulus.size(); j-- > 0;)
                v = dst->c_add(dst->c_mul(v, cur), src->modulus[j] % dst->p);
            if (v == 0) roots.push_back(cur);
            cur = dst->c_mul(cur, eta);
        }
        if (roots.size() != src->k) throw std::logic_error("embedding root count mismatch");
        root = *std::min_element(roots.begin(), roots.end());
        Registry& reg = registry();
        std::lock_guard<std::mutex> lock(reg.mu);
        reg.embed_roots.emplace(std::make_pair(src, dst), root);
    }
    auto cs = a.coeffs();
    uint64_t v = 0;
    for (size_t j = cs.size(); j-- > 0;) v = dst->c_add(dst->c_mul(v, root), cs[j]);
    return dst->from_code(v);
}

namespace {

// One l-th root of x (l prime), assuming x is an l-th power residue.
// Adleman-Manders-Miller digit extraction against the canonical generator;
// the caller canonicalizes the final choice among all roots.
FieldElem prime_root(const FieldElem& x, uint64_t l) {
    const FieldCtx* F = x.ctx();
    uint64_t q1 = F->q - 1;
    uint64_t t = q1, L = 1;
    unsigned s = 0;
    while (t % l == 0) { t /= l; L *= l; ++s; }
    if (s == 0) {
        uint64_t e = uint64_t(modinv_i64(int64_t(l % q1), int64_t(q1)));
        return pow(x, e);
    }
    FieldElem x_t = F->one(), y_t = F->one();
    if (t > 1) {
        uint64_t eps = L * uint64_t(modinv_i64(int64_t(L % t), int64_t(t)));
        x_t = pow(x, eps);
        y_t = pow(x_t, uint64_t(modinv_i64(int64_t(l % t), int64_t(t))));
    }
    uint64_t eps2 = t % L == 0 ? 0 : t * uint64_t(modinv_i64(int64_t(t % L), int64_t(L)));
    FieldElem x_l = pow(x, eps2);
    FieldElem gamma = pow(F->generator(), t); // order L
    FieldElem zeta = pow(gamma, L / l);       // order l
    uint64_t e = 0, lpow = 1;
    FieldElem r = x_l;
    for (unsigned i = 0; i < s; ++i) {
        FieldElem w = pow(r, L / (lpow * l));
        uint64_t d = 0;
        FieldElem z = F->one();
        while (z != w) {
            z = mul(z, zeta);
            if (++d >= l) throw std::logic_error("discrete log digit not found");
        }
        e += d * lpow;
        r = mul(r, inv(pow(gamma, d * lpow)));
        lpow *= l;
    }
    if (e % l != 0) throw ValidationError("element is not an l-th power residue");
    FieldElem y_l = pow(gamma, e / l);
    return mul(y_t, y_l);
}

} // namespace

FieldElem nth_root(const FieldElem& a, uint64_t n) {
    const FieldCtx* F = a.ctx();
    if (F == nullptr) throw ValidationError("operation on a null field element");
    if (n < 1) throw ValidationError("root index must be >= 1");
    if (a.is_zero()) throw ValidationError("nth_root of zero");
    uint64_t p = F->p;
    uint64_t n0 = n, pe = 0;
    while (n0 % p == 0) { n0 /= p; ++pe; }

    const FieldCtx* big = nullptr;
    FieldElem ab;
    uint64_t g = 1;
    for (unsigned t = 1; t <= 64; ++t) {
        const FieldCtx* cand;
        try {
            cand = build_field(p, F->k * t);
        } catch (const CapError&) {
            throw CapError("nth_root requires a larger field than the internal cap allows");
        }
        FieldElem ac = embed(a, cand);
        uint64_t gc = std::gcd(n0, cand->q - 1);
        if (pow(ac, (cand->q - 1) / gc) == cand->one()) {
            big = cand;
            ab = ac;
            g = gc;
            break;
        }
    }
    if (big == nullptr) throw CapError("nth_root: no sufficient extension within bounds");

    FieldElem x = ab;
    uint64_t rem = n0;
    for (uint64_t l = 2; rem > 1; ++l) {
        if (l * l > rem) l = rem; // remaining cofactor is prime
        while (rem % l == 0) {
            x = prime_root(x, l);
            rem /= l;
        }
    }
    if (pe > 0) {
        unsigned K = big->k;
        unsigned ee = unsigned(pe % K);
        if (ee != 0) {
            uint64_t exp = 1;
            for (unsigned i = 0; i < K - ee; ++i) exp *= p;
            x = pow(x, exp);
        }
    }
    if (g > 1) {
        FieldElem zeta = pow(big->generator(), (big->q - 1) / g);
        FieldElem best = x, cur = x;
        for (uint64_t j = 1; j < g; ++j) {
            cur = mul(cur, zeta);
            if (elem_less(cur, best)) best = cur;
        }
        x = best;
    }
    if (pow(x, n) != ab) throw std::logic_error("nth_root verification failed");
    return x;
}

namespace {

// F_2-linear solve of y^2 + y = d in F_{2^K}; empty result if no solution.
std::vector<FieldElem> artin_schreier_solutions(const FieldElem& d) {
    const FieldCtx* F = d.ctx();
    unsigned K = F->k;
    std::vector<uint64_t> rows(K, 0);
    for (unsigned j = 0; j < K; ++j) {
        std::vector<uint32_t> c(K, 0);
        c[j] = 1;
        FieldElem bj(F, c);
        FieldElem im = add(mul(bj, bj), bj);
        auto cs = im.coeffs();
        for (unsigned i = 0; i < K; ++i)
            if (cs[i]) rows[i] |= uint64_t(1) << j;
    }
    auto dc = d.coeffs();
    std::vector<uint32_t> rhs(dc.begin(), dc.end());
    std::vector<int> pivot_of_col(K, -1);
    unsigned row = 0;
    for (unsigned col = 0; col < K && row < K; ++col) {
        unsigned sel = row;
        while (sel < K && !(rows[sel] >> col & 1)) ++sel;
        if (sel == K) continue;
        std::swap(rows[sel], rows[row]);
        std::swap(rhs[sel], rhs[row]);
        for (unsigned i = 0; i < K; ++i) {
            if (i != row && (rows[i] >> col & 1)) {
                rows[i] ^= rows[row];
                rhs[i] ^= rhs[row];
            }
        }
        pivot_of_col[col] = int(row);
        ++row;
    }
    for (unsigned i = row; i < K; ++i)
        if (rhs[i]) return {};
    std::vector<uint32_t> y(K, 0);
    for (unsigned col = 0; col < K; ++col)
        if (pivot_of_col[col] >= 0) y[col] = rhs[pivot_of_col[col]];
    FieldElem y0(F, y);
    FieldElem y1 = add(y0, F->one());
    if (elem_less(y1, y0)) std::swap(y0, y1);
    return {y0, y1};
}

} // namespace

std::vector<FieldElem> quadratic_roots(const FieldElem& b, const FieldElem& c) {
    require_same_ctx(b, c);
    const FieldCtx* F = b.ctx();
    if (F->p != 2) {
        FieldElem disc = sub(mul(b, b), mul(F->from_int(4), c));
        FieldElem half = inv(F->from_int(2));
        if (disc.is_zero()) return {mul(neg(b), half)};
        FieldElem s = nth_root(disc, 2);
        const FieldCtx* G = s.ctx();
        FieldElem nb = embed(neg(b), G);
        FieldElem h = embed(half, G);
        FieldElem r1 = mul(add(nb, s), h);
        FieldElem r2 = mul(sub(nb, s), h);
        if (elem_less(r2, r1)) std::swap(r1, r2);
        return {r1, r2};
    }
    if (b.is_zero()) return {pow(c, F->q / 2)}; // x^2 = c, unique root
    FieldElem d = mul(c, inv(mul(b, b)));
    std::vector<FieldElem> ys = artin_schreier_solutions(d);
    FieldElem bb = b;
    if (ys.empty()) {
        const FieldCtx* G = build_field(2, F->k * 2);
        ys = artin_schreier_solutions(embed(d, G));
        if (ys.empty()) throw std::logic_error("Artin-Schreier equation unsolvable in quadratic extension");
        bb = embed(b, G);
    }
    FieldElem r1 = mul(bb, ys[0]);
    FieldElem r2 = mul(bb, ys[1]);
    if (elem_less(r2, r1)) std::swap(r1, r2);
    return {r1, r2};
}

std::string to_string(const FieldElem& a) {
    if (a.ctx() == nullptr) return "<null>";
    if (a.ctx()->k == 1) return std::to_string(a.code());
    auto cs = a.coeffs();
    std::string s = "[";
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(cs[i]);
    }
    return s + "]";
}

} // namespace sl2inv
