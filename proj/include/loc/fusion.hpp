#pragma once
#include "loc/locality.hpp"

namespace loc {

// A fusion morphism between subgroups of S, realized by conjugation along a
// word of locality elements (applied left to right).
struct FusionMorphism {
    Subgroup domain;
    std::vector<int> images; // ambient -> ambient, -1 outside the domain
    Word witness;
};

struct DeltaConjugate {
    Subgroup q;
    int witness; // first locality element carrying the domain onto q
};

// All conjugates of p under the locality (p itself included), each with its
// first witness, sorted by (order, member set). Requires p in delta. Single
// conjugation steps are exhaustive here; the result is audited for closure.
std::vector<DeltaConjugate> delta_conjugates(const Locality& loc, const Subgroup& p);

bool is_fully_normalized(const Locality& loc, const Subgroup& p);

struct FnRep {
    Subgroup rep; // the chosen fully normalized conjugate
    int h;        // element with p^h = rep and N_S(p)^h <= N_S(rep)
};
// Deterministic fully normalized representative of the class of p. When p is
// already the representative, h is the identity.
FnRep fully_normalized_rep(const Locality& loc, const Subgroup& p);

// Hom_F(p, q) for the fusion system of the locality: every monomorphism
// p -> q expressible as a composite of conjugation maps. Discovery order is
// deterministic (breadth first, ascending elements).
std::vector<FusionMorphism> hom_F(const Locality& loc, const Subgroup& p, const Subgroup& q);

// p is centric when every conjugate q satisfies C_S(q) <= q.
bool is_centric(const Locality& loc, const Subgroup& p);

int apply_morphism(const FusionMorphism& f, int x);

} // namespace loc
