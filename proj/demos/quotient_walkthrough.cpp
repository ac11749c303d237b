/* Walkthrough: build the quotient ring N, inspect a degree slice, and watch
 * the Milnor operations kill a distinguished odd-degree class. */

#include <iostream>

#include "steenq/builtins.hpp"
#include "steenq/milnor.hpp"
#include "steenq/quotient.hpp"
#include "steenq/text.hpp"

using namespace steenq;

int main() {
    const Builtins& b = builtins();
    const AlgebraPresentation& N = b.n_ring;
    const GenList& gens = N.generators;

    std::cout << "algebra " << N.name << " on";
    for (const GeneratorInfo& g : gens) std::cout << " " << g.name;
    std::cout << ", modulo:\n";
    for (const PolyGF2& r : N.relations) std::cout << "  " << to_string(r, gens) << "\n";

    GroebnerBasis G = buchberger(N);
    std::cout << "\nreduced rewriting system (" << G.rules().size() << " rules):\n";
    for (const ReductionRule& r : G.rules())
        std::cout << "  " << to_string(r.lead, gens) << " -> " << to_string(r.tail, gens)
                  << "\n";

    std::cout << "\ndimensions by degree:";
    for (long long dim : dims_by_degree(G, 13)) std::cout << " " << dim;
    std::cout << "\n";

    std::cout << "\nbasis of the degree-13 slice:\n";
    for (const Monomial& m : standard_monomials(G, 13))
        std::cout << "  " << to_string(m, gens) << "\n";

    PolyGF2 x13 = parse_poly("w2'^3*w2''^2*w3' + w2'*w2''^4*w3'", gens);
    std::cout << "\nx13 = " << to_string(x13, gens) << "\n";
    std::cout << "normal form: " << to_string(normal_form(G, x13), gens) << "\n";

    MilnorOps ops(N, 6);
    std::cout << "\nimages under the Milnor operations, reduced in N:\n";
    for (int m = 0; m <= 6; ++m) {
        PolyGF2 nf = normal_form(G, ops.q_derivation(m, x13));
        std::cout << "  Q_" << m << " x13 = " << to_string(nf, gens) << "\n";
    }
    std::cout << "\nevery operation with m >= 1 kills the class; Q_0 does not.\n";
    return 0;
}
