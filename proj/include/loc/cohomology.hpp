#pragma once
#include "loc/group.hpp"
#include "loc/snf.hpp"
#include "loc/transporter.hpp"

#include <vector>

namespace loc {

// Finite abelian p-group with a left action of a finite group: one matrix per
// element, acting on coordinate column vectors mod the cyclic orders.
struct GModule {
    GroupPtr group;
    AbPres ab;
    std::vector<Mat> action;
    long long p = 0;
};

// Validates shapes, that every matrix is defined on the orders, that the
// identity acts trivially and the assignment is multiplicative on all pairs.
// Throws SpecError on any failure.
GModule make_gmodule(GroupPtr g, AbPres ab, std::vector<Mat> action, long long p);
GModule trivial_module(GroupPtr g, const AbPres& ab, long long p);
// Z/modulus-permutation module on the group's permutation points.
GModule permutation_module(GroupPtr g, long long modulus);
GModule restrict_module(const GModule& m, const SubgroupView& view);

// Bar-complex differential d^n : C^n -> C^{n+1}. Throws SpecError when the
// cochain space would exceed the configured size bound.
Mat coboundary(const GModule& m, int n);

// H^n presented inside C^n: cocycle generators modulo coboundary columns,
// with stored representatives and a projection onto the quotient.
struct CohomologyData {
    int degree = 0;
    std::vector<long long> moduli; // C^n coordinate moduli
    Subquotient sq;
};
CohomologyData cohomology_data(const GModule& m, int n);
AbPres cohomology(const GModule& m, int n);

// Matrix of H^n(Q,M) -> H^n(P,M) for the transporter morphism g : P -> Q
// (m is the module over the common ambient group).
Mat induced_map(const GModule& m, const Subgroup& p, const Subgroup& q, int g, int n);

FunctorPres fixed_point_functor(const TransporterCat& t, const GModule& m);
FunctorPres cohomology_functor(const TransporterCat& t, const GModule& m, int n);

struct CEReport {
    AbPres h, lim_t, lim_te;
    bool equal = false;
};
// Compares H^n(G,M) with the inverse limits of H^n(-,M) over the transporter
// category on all subgroups of S and over its essential subcategory.
CEReport check_cartan_eilenberg(GroupPtr g, int p, const GModule& m, int n);

} // namespace loc
