#pragma once

/* Built-in presentations and the standard maps between them.
 *
 *   BSO3        Z/2[w2, w3], Steenrod action by the Wu formulas
 *   BZ2xBZ2     Z/2[s1, s2], total square of a degree-1 class is s + s^2
 *   BSO3_cubed  three primed copies of BSO3, factorwise action
 *   M           Z/2[w2', w3', w2'', w3''] / (w2'w3'' + w2''w3')
 *   N           M with the extra relation w3'w3''^2 + w3''w3'^2
 *   PHI_TARGET  Z/2[w2', w2'', t1], a plain counting ring with no
 *               Steenrod action; t1 has degree 1 and weight 1
 *
 * Weights: every w3-type generator has weight 1, everything else weight 0
 * except t1. Relations are then homogeneous in both gradings and the
 * first-factor inclusions preserve weight.
 */

#include <string>
#include <vector>

#include "presentation.hpp"

namespace steenq {

namespace detail {

inline AlgebraPresentation make_bso3(std::string name, const std::string& suffix) {
    AlgebraPresentation A;
    A.name = std::move(name);
    A.generators = {{"w2" + suffix, 2, 0}, {"w3" + suffix, 3, 1}};
    PolyGF2 w2 = A.gen_poly(0), w3 = A.gen_poly(1);
    A.sq_table = {{
                      w2,            /* Sq^0 */
                      w3,            /* Sq^1 w2 = w3 */
                      frobenius(w2), /* Sq^2 w2 = w2^2 */
                  },
                  {
                      w3,
                      PolyGF2::zero(2), /* Sq^1 w3 = 0 */
                      mul(w2, w3),      /* Sq^2 w3 = w2 w3 */
                      frobenius(w3),
                  }};
    validate(A);
    return A;
}

inline AlgebraPresentation make_bz2xbz2() {
    AlgebraPresentation A;
    A.name = "BZ2xBZ2";
    A.generators = {{"s1", 1, 0}, {"s2", 1, 0}};
    A.sq_table = {{A.gen_poly(0), frobenius(A.gen_poly(0))},
                  {A.gen_poly(1), frobenius(A.gen_poly(1))}};
    validate(A);
    return A;
}

inline AlgebraPresentation make_phi_target() {
    AlgebraPresentation A;
    A.name = "PHI_TARGET";
    A.generators = {{"w2'", 2, 0}, {"w2''", 2, 0}, {"t1", 1, 1}};
    validate(A);
    return A;
}

} // namespace detail

struct Builtins {
    AlgebraPresentation bso3;
    AlgebraPresentation bz2xbz2;
    AlgebraPresentation bso3_cubed;
    AlgebraPresentation p4; /* free ambient of M and N */
    AlgebraPresentation m_ring;
    AlgebraPresentation n_ring;
    AlgebraPresentation phi_target;

    RingHom b_iota; /* BSO3 -> BZ2xBZ2, restriction to the diagonal 2-torus */
    RingHom incl1, incl2, incl3; /* factor inclusions BSO3 -> BSO3_cubed */
    RingHom b_pi1;               /* BSO3 -> P4, first-factor generators */
    RingHom incl4;               /* P4 -> BSO3_cubed */
    RingHom phi;                 /* P4 -> PHI_TARGET, w3-type goes to t1*w2-type */
};

inline Builtins make_builtins() {
    Builtins b;
    b.bso3 = detail::make_bso3("BSO3", "");
    b.bz2xbz2 = detail::make_bz2xbz2();

    AlgebraPresentation c1 = detail::make_bso3("BSO3'", "'");
    AlgebraPresentation c2 = detail::make_bso3("BSO3''", "''");
    AlgebraPresentation c3 = detail::make_bso3("BSO3'''", "'''");
    b.bso3_cubed = tensor(tensor(c1, c2, "BSO3xBSO3"), c3, "BSO3_cubed");
    b.p4 = tensor(c1, c2, "P4");

    b.m_ring = b.p4;
    b.m_ring.name = "M";
    b.m_ring.relations = {parse_poly("w2'*w3'' + w2''*w3'", b.p4.generators)};
    validate(b.m_ring);

    b.n_ring = b.m_ring;
    b.n_ring.name = "N";
    b.n_ring.relations.push_back(parse_poly("w3'*w3''^2 + w3''*w3'^2", b.p4.generators));
    validate(b.n_ring);

    b.phi_target = detail::make_phi_target();

    b.b_iota = make_hom("B-iota", b.bso3, b.bz2xbz2,
                        {{"w2", "s1^2 + s1*s2 + s2^2"}, {"w3", "s1^2*s2 + s1*s2^2"}});
    b.incl1 = make_hom("incl-1", b.bso3, b.bso3_cubed, {{"w2", "w2'"}, {"w3", "w3'"}}, true);
    b.incl2 = make_hom("incl-2", b.bso3, b.bso3_cubed, {{"w2", "w2''"}, {"w3", "w3''"}}, true);
    b.incl3 = make_hom("incl-3", b.bso3, b.bso3_cubed, {{"w2", "w2'''"}, {"w3", "w3'''"}}, true);
    b.b_pi1 = make_hom("B-pi1", b.bso3, b.p4, {{"w2", "w2'"}, {"w3", "w3'"}}, true);
    b.incl4 = make_hom("incl-4", b.p4, b.bso3_cubed,
                       {{"w2'", "w2'"}, {"w3'", "w3'"}, {"w2''", "w2''"}, {"w3''", "w3''"}},
                       true);
    b.phi = make_hom("phi", b.p4, b.phi_target,
                     {{"w2'", "w2'"}, {"w3'", "t1*w2'"}, {"w2''", "w2''"}, {"w3''", "t1*w2''"}},
                     true);
    return b;
}

inline const Builtins& builtins() {
    static const Builtins b = make_builtins();
    return b;
}

inline std::vector<std::string> builtin_names() {
    return {"BSO3", "BZ2xBZ2", "BSO3_cubed", "P4", "M", "N", "PHI_TARGET"};
}

inline const AlgebraPresentation* find_builtin(std::string_view name) {
    const Builtins& b = builtins();
    if (name == "BSO3") return &b.bso3;
    if (name == "BZ2xBZ2") return &b.bz2xbz2;
    if (name == "BSO3_cubed") return &b.bso3_cubed;
    if (name == "P4") return &b.p4;
    if (name == "M") return &b.m_ring;
    if (name == "N") return &b.n_ring;
    if (name == "PHI_TARGET") return &b.phi_target;
    return nullptr;
}

} // namespace steenq
