// sl2inv: exact invariant theory of linearly reductive finite subgroup
// schemes of SL2 in positive characteristic. Subcommands: catalog,
// invariants, classify, verify, snf, selftest.
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "sl2inv/intlat.hpp"
#include "sl2inv/singclass.hpp"

using namespace sl2inv;
using json = nlohmann::ordered_json;

namespace {

struct Options {
    uint64_t p = 0;
    std::string type;
    int n = 0;
    int dmax = 0; // 0 = derive from the classified type
    long long max_order = 24;
    std::string format = "text";
    uint64_t seed = 0;
    std::string input;
};

AdeType parse_type(const std::string& type, int n) {
    if (type == "A") return AdeType::A(n);
    if (type == "D") return AdeType::D(n);
    if (type == "E6") return AdeType::E(6);
    if (type == "E7") return AdeType::E(7);
    if (type == "E8") return AdeType::E(8);
    throw ValidationError("unknown type '" + type + "' (use A, D, E6, E7, E8 with --n for A/D)");
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json mat_json(const Mat2& m) {
    auto entry = [](const FieldElem& e) -> json {
        if (e.ctx()->k == 1) return (long long)e.code();
        json a = json::array();
        for (auto c : e.coeffs()) a.push_back((long long)c);
        return a;
    };
    return json::array({json::array({entry(m.a), entry(m.b)}),
                        json::array({entry(m.c), entry(m.d)})});
}

struct Entry {
    AdeType t;
    SubgroupScheme g;
    std::vector<std::pair<int, BivarPoly>> gens;
    WeightedPoly3 rel;
};

Entry make_entry(const AdeType& t, uint64_t p) {
    SubgroupScheme g = make_catalog(t, p);
    int e = relation_degree(t);
    auto gens = minimal_generators(g, e);
    auto rel = find_relation(gens, e);
    return Entry{t, std::move(g), std::move(gens), std::move(rel)};
}

void print_entry_text(std::ostream& out, const Entry& en) {
    out << "# type: " << type_tag(en.t, en.g.ctx->p, order(en.g)) << "\n";
    out << emit_scheme(en.g);
    out << "# degrees:";
    for (const auto& [d, f] : en.gens) out << " " << d;
    out << "\n";
    out << "# relation: " << to_string(en.rel) << "\n";
    out << "# field: " << en.g.ctx->describe() << "\n";
}

json entry_json(const Entry& en) {
    json j;
    j["tag"] = type_tag(en.t, en.g.ctx->p, order(en.g));
    j["p"] = en.g.ctx->p;
    j["r"] = en.g.r;
    json gens = json::array();
    for (const auto& m : en.g.extra_gens) gens.push_back(mat_json(m));
    j["generators"] = gens;
    j["order"] = order(en.g);
    json degs = json::array();
    for (const auto& [d, f] : en.gens) degs.push_back(d);
    j["generator_degrees"] = degs;
    j["relation"] = to_string(en.rel);
    j["field"] = en.g.ctx->describe();
    return j;
}

int cmd_catalog(const Options& o) {
    if (o.p == 0) throw ValidationError("catalog requires --p");
    std::vector<AdeType> types;
    for (int n = 1; n + 1 <= o.max_order; ++n) types.push_back(AdeType::A(n));
    if (o.p >= 3)
        for (int n = 4; 4 * n - 8 <= o.max_order; ++n) types.push_back(AdeType::D(n));
    for (int w : {6, 7, 8}) {
        AdeType t = AdeType::E(w);
        if (o.p >= t.min_char() && t.group_order() <= o.max_order) types.push_back(t);
    }
    // entries whose minimal field exceeds the exact-arithmetic cap are
    // skipped with an explicit marker; the stream stays deterministic
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& t : types) {
            try {
                arr.push_back(entry_json(make_entry(t, o.p)));
            } catch (const CapError& e) {
                json j;
                j["tag"] = type_tag(t, o.p, t.group_order());
                j["skipped"] = e.what();
                arr.push_back(j);
            }
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        bool first = true;
        for (const auto& t : types) {
            if (!first) std::cout << "\n";
            first = false;
            try {
                print_entry_text(std::cout, make_entry(t, o.p));
            } catch (const CapError& e) {
                std::cout << "# skipped: " << type_tag(t, o.p, t.group_order()) << " (" << e.what()
                          << ")\n";
            }
        }
    }
    return 0;
}

int cmd_invariants(const Options& o) {
    SubgroupScheme g = o.input.empty() ? make_catalog(parse_type(o.type, o.n), o.p)
                                       : parse_scheme(read_input(o.input));
    auto bad = validate(g);
    if (!bad.empty()) {
        for (const auto& s : bad) std::cerr << "invalid: " << s << "\n";
        return 2;
    }
    AdeType t = classify(g);
    int e = relation_degree(t);
    int dmax = o.dmax > 0 ? o.dmax : e;
    auto gens = minimal_generators(g, dmax);
    auto rel = find_relation(gens, e);
    auto match = normalize_ADE(rel);
    auto hs = hilbert(g, std::min(dmax, 40));

    if (o.format == "json") {
        json j;
        j["tag"] = type_tag(t, g.ctx->p, order(g));
        j["field"] = g.ctx->describe();
        json jg = json::array();
        for (const auto& [d, f] : gens) {
            json e1;
            e1["degree"] = d;
            e1["poly"] = to_string(f);
            jg.push_back(e1);
        }
        j["generators"] = jg;
        j["relation"] = to_string(rel);
        j["relation_degree"] = e;
        j["normal_form"] = to_string(normal_form_template(match.ade, match.ctx).poly);
        j["hilbert"] = hs;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "type: " << type_tag(t, g.ctx->p, order(g)) << "\n";
        std::cout << "field: " << g.ctx->describe() << "\n";
        for (const auto& [d, f] : gens)
            std::cout << "generator deg " << d << ": " << to_string(f) << "\n";
        std::cout << "relation (deg " << e << "): " << to_string(rel) << "\n";
        std::cout << "normal form: " << to_string(normal_form_template(match.ade, match.ctx).poly)
                  << "\n";
        std::cout << "hilbert:";
        for (auto v : hs) std::cout << " " << v;
        std::cout << "\n";
    }
    return 0;
}

int cmd_classify(const Options& o) {
    SubgroupScheme g = parse_scheme(read_input(o.input));
    auto bad = validate(g);
    if (!bad.empty()) {
        for (const auto& s : bad) std::cerr << "invalid: " << s << "\n";
        return 2;
    }
    AdeType t = classify(g);
    bool conjugated = t.kind == AdeKind::A || t.kind == AdeKind::D;
    if (o.format == "json") {
        json j;
        j["tag"] = type_tag(t, g.ctx->p, order(g));
        if (conjugated) {
            auto r = normalize_conjugator(g);
            j["conjugator"] = mat_json(r.t);
            j["normalized"] = emit_scheme(r.normalized);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << type_tag(t, g.ctx->p, order(g)) << "\n";
        if (conjugated) {
            auto r = normalize_conjugator(g);
            std::cout << "conjugator: " << mat_json(r.t).dump() << "\n";
            std::cout << "normalized scheme:\n" << emit_scheme(r.normalized);
        }
    }
    return 0;
}

int cmd_verify(const Options& o) {
    AdeType t = parse_type(o.type, o.n);
    uint64_t p = o.p;
    if (p < t.min_char()) throw GateError(t.label() + " requires p >= " + std::to_string(t.min_char()));
    std::vector<std::string> lines;
    bool pass = true;

    if (t.kind == AdeKind::A) {
        // x = u^{n+1}, y = -v^{n+1}, z = uv
        const FieldCtx* F = build_field(p, 1);
        int n = t.n;
        std::vector<std::pair<int, BivarPoly>> gens = {
            {n + 1, BivarPoly::monomial(F, n + 1, 0, F->one())},
            {n + 1, BivarPoly::monomial(F, 0, n + 1, F->from_int(-1))},
            {2, BivarPoly::monomial(F, 1, 1, F->one())}};
        WeightedPoly3 rel(F, {n + 1, n + 1, 2});
        rel.set({1, 1, 0}, F->one());
        rel.set({0, 0, n + 1}, F->one());
        bool ok = substitute(rel, gens).is_zero();
        pass = pass && ok;
        lines.push_back("X*Y + Z^" + std::to_string(n + 1) + ": " + (ok ? "PASS" : "FAIL"));
    } else if (t.kind == AdeKind::D) {
        int n = t.n, m = 2 * n - 4;
        // beta = 2^{2/(n-1)}, gamma = beta^{-1/2} = 2^{-1/(n-1)}
        const FieldCtx* F0 = build_field(p, 1);
        FieldElem beta = nth_root(F0->from_int(4), (uint64_t)n - 1);
        FieldElem gamma = nth_root(inv(beta), 2);
        const FieldCtx* F = gamma.ctx();
        beta = embed(beta, F);
        FieldElem s = F->from_int((n - 2) % 2 == 0 ? 1 : -1); // (-1)^{n-2}
        BivarPoly x = sub(BivarPoly::monomial(F, m + 1, 1, F->one()),
                          BivarPoly::monomial(F, 1, m + 1, s));
        BivarPoly y = BivarPoly::monomial(F, 2, 2, neg(beta));
        BivarPoly z = add(BivarPoly::monomial(F, m, 0, gamma),
                          BivarPoly::monomial(F, 0, m, mul(gamma, s)));
        BivarPoly lhs = add(mul(x, x), mul(y, mul(z, z))); // x^2 + y z^2
        BivarPoly rhs = poly_pow(y, (unsigned)n - 1);      // y^{n-1}
        // proportionality constant
        FieldElem c = F->zero();
        bool ok = !rhs.is_zero();
        if (ok) {
            auto it = rhs.terms().begin();
            c = mul(lhs.coefficient(it->first.first, it->first.second), inv(it->second));
            ok = sub(lhs, scale(c, rhs)).is_zero();
        }
        pass = pass && ok;
        lines.push_back("x^2 + y*z^2 proportional to y^" + std::to_string(n - 1) +
                        ", constant=" + (c == F->one() ? std::string("+1") : to_string(c)) + ": " +
                        (ok ? "PASS" : "FAIL"));
        // the relation x^2 + yz^2 - c y^{n-1} = 0 must normalize onto the
        // catalog template X^2 + YZ^2 + Y^{n-1}
        WeightedPoly3 rel(F, {2 * n - 2, 4, 2 * n - 4});
        rel.set({2, 0, 0}, F->one());
        rel.set({0, 1, 2}, F->one());
        rel.set({0, n - 1, 0}, neg(c));
        bool ok2 = false;
        try {
            ok2 = normalize_ADE(rel).ade == t;
        } catch (const ValidationError&) {
        }
        pass = pass && ok2;
        lines.push_back("normal form X^2 + Y*Z^2 + Y^" + std::to_string(n - 1) +
                        " matched after rescaling: " + (ok2 ? "PASS" : "FAIL"));
    } else {
        // no explicit generators are given for the E types; verify the
        // engine-computed presentation instead
        Entry en = make_entry(t, p);
        bool ok = substitute(en.rel, en.gens).is_zero();
        bool ok2 = false;
        try {
            ok2 = normalize_ADE(en.rel).ade == t;
        } catch (const ValidationError&) {
        }
        pass = pass && ok && ok2;
        lines.push_back("computed relation " + to_string(en.rel) + " vanishes on generators: " +
                        (ok ? "PASS" : "FAIL"));
        lines.push_back("normal form matched: " + std::string(ok2 ? "PASS" : "FAIL"));
    }

    if (o.format == "json") {
        json j;
        j["tag"] = t.label();
        j["p"] = p;
        j["checks"] = lines;
        j["pass"] = pass;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << type_tag(t, p, t.group_order()) << "\n";
        for (const auto& s : lines) std::cout << s << "\n";
    }
    return pass ? 0 : 2;
}

int cmd_snf(const Options& o) {
    std::string text = read_input(o.input);
    std::vector<std::vector<long long>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<long long> row;
        long long v;
        while (ls >> v) row.push_back(v);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ValidationError("empty matrix");
    size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw ValidationError("ragged matrix rows");
    std::vector<long long> flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    IntMat a(rows.size(), cols, flat);
    SnfResult s = smith_normal_form(a);
    auto dump = [&](const char* name, const IntMat& m) -> json {
        json jm = json::array();
        for (size_t i = 0; i < m.rows(); ++i) {
            json r = json::array();
            for (size_t j = 0; j < m.cols(); ++j) r.push_back(int128_to_string(m.at(i, j)));
            jm.push_back(r);
        }
        (void)name;
        return jm;
    };
    if (o.format == "json") {
        json j;
        j["u"] = dump("u", s.u);
        j["d"] = dump("d", s.d);
        j["v"] = dump("v", s.v);
        std::cout << j.dump(2) << "\n";
    } else {
        auto put = [&](const char* name, const IntMat& m) {
            std::cout << name << ":\n";
            for (size_t i = 0; i < m.rows(); ++i) {
                for (size_t j = 0; j < m.cols(); ++j)
                    std::cout << (j ? " " : "") << int128_to_string(m.at(i, j));
                std::cout << "\n";
            }
        };
        put("U", s.u);
        put("D", s.d);
        put("V", s.v);
    }
    return 0;
}

int cmd_selftest(const Options& o) {
    std::mt19937_64 rng(o.seed);
    auto random_sl2 = [&](const FieldCtx* F) {
        for (;;) {
            Mat2 m(F->from_code(rng() % F->q), F->from_code(rng() % F->q),
                   F->from_code(rng() % F->q), F->from_code(rng() % F->q));
            FieldElem dt = det(m);
            if (dt.is_zero()) continue;
            FieldElem s = inv(dt);
            return Mat2(m.a, mul(m.b, s), m.c, mul(m.d, s));
        }
    };
    int failures = 0, total = 0;
    for (auto [t, p] : std::vector<std::pair<AdeType, uint64_t>>{
             {AdeType::A(4), 7}, {AdeType::D(4), 5}, {AdeType::E(6), 5}, {AdeType::E(7), 7},
             {AdeType::E(8), 11}}) {
        auto g = make_catalog(t, p);
        for (int i = 0; i < 20; ++i) {
            ++total;
            Mat2 c = random_sl2(g.ctx);
            if (classify(scheme_conjugate(c, g)) != t) ++failures;
        }
    }
    for (auto [t, p] : std::vector<std::pair<AdeType, uint64_t>>{
             {AdeType::A(5), 3}, {AdeType::D(5), 3}}) {
        auto g = make_catalog(t, p);
        const FieldCtx* F = g.ctx;
        for (int i = 0; i < 20; ++i) {
            ++total;
            uint64_t c = 1 + rng() % (F->q - 1);
            FieldElem x = F->from_code(c);
            Mat2 m = (i % 2 == 0) ? mat2_diag(x, inv(x))
                                  : Mat2(F->zero(), x, neg(inv(x)), F->zero());
            if (classify(scheme_conjugate(m, g)) != t) ++failures;
        }
    }
    std::cout << "selftest: " << (total - failures) << "/" << total
              << " classification round trips (seed " << o.seed << ")\n";
    return failures == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariant rings of linearly reductive finite subgroup schemes of SL2"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* c, bool io) {
        c->add_option("--format", o.format, "output format: text (default) or json")
            ->check(CLI::IsMember({"text", "json"}));
        if (io) c->add_option("--input", o.input, "input file ('-' for stdin)");
    };

    CLI::App* cat = app.add_subcommand("catalog", "emit every catalog scheme with |G| <= max-order");
    cat->add_option("--p", o.p, "characteristic")->required();
    cat->add_option("--max-order", o.max_order, "largest group scheme order (default 24)");
    add_common(cat, false);

    CLI::App* inv = app.add_subcommand("invariants", "generators, relation, normal form, Hilbert series");
    inv->add_option("--p", o.p, "characteristic (with --type)");
    inv->add_option("--type", o.type, "catalog type: A, D, E6, E7, E8");
    inv->add_option("--n", o.n, "index for types A and D");
    inv->add_option("--dmax", o.dmax, "generator search bound (default: the relation degree)");
    add_common(inv, true);

    CLI::App* cls = app.add_subcommand("classify", "validate and classify a scheme file");
    add_common(cls, true);

    CLI::App* ver = app.add_subcommand("verify", "check the explicit generator presentations");
    ver->add_option("--p", o.p, "characteristic")->required();
    ver->add_option("--type", o.type, "catalog type")->required();
    ver->add_option("--n", o.n, "index for types A and D");
    add_common(ver, false);

    CLI::App* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    add_common(snf, true);

    CLI::App* st = app.add_subcommand("selftest", "seeded random classification round trips");
    st->add_option("--seed", o.seed, "RNG seed (default 0)");
    add_common(st, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cat->parsed()) return cmd_catalog(o);
        if (inv->parsed()) return cmd_invariants(o);
        if (cls->parsed()) return cmd_classify(o);
        if (ver->parsed()) return cmd_verify(o);
        if (snf->parsed()) return cmd_snf(o);
        if (st->parsed()) return cmd_selftest(o);
    } catch (const GateError& e) {
        std::cerr << "gate violation: " << e.what() << "\n";
        return 3;
    } catch (const CapError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 4;
    } catch (const ValidationError& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
