// Temporary derivation helper: prints the E-type relations computed at two
// primes so the rational golden template can be frozen into singclass.cpp.
#include <iostream>

#include "sl2inv/singclass.hpp"

using namespace sl2inv;

int main() {
    for (int which : {6, 7, 8}) {
        AdeType t = AdeType::E(which);
        for (uint64_t p : {11, 13}) {
            auto g = make_catalog(t, p);
            auto gens = minimal_generators(g, relation_degree(t));
            std::cout << t.label() << " p=" << p << " degrees";
            for (auto& [d, f] : gens) std::cout << " " << d;
            std::cout << "\n";
            for (auto& [d, f] : gens) std::cout << "  gen deg " << d << ": " << to_string(f) << "\n";
            auto rel = find_relation(gens, relation_degree(t));
            std::cout << "  relation: " << to_string(rel) << "\n";
            for (const auto& [m, c] : rel.terms())
                std::cout << "    mono (" << m[0] << "," << m[1] << "," << m[2]
                          << ") coeff " << to_string(c) << "  (p=" << p << ")\n";
        }
    }
    return 0;
}
