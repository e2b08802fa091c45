#pragma once
#include "loc/alperin.hpp"
#include "loc/locality.hpp"
#include "loc/snf.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace loc {

// Category whose objects are the subgroups in delta; a morphism P -> Q is an
// element conjugating P into Q, composed by the group product.
struct TransporterCat {
    GroupPtr ambient;
    std::optional<Locality> source; // the locality the category came from
    int p = 0;
    Subgroup S;
    std::vector<Subgroup> objects;      // sorted by (order, member set)
    std::vector<std::vector<Bits>> hom; // hom[i][j] = {g : P_i -> P_j}

    int object_index(const Bits& members) const; // -1 when absent
    bool is_morphism(int i, int j, int g) const;
};

TransporterCat build_transporter(const Locality& loc);
// Raw-definition route over the whole group; audits itself against the
// locality route, which must give the same category.
TransporterCat build_group_transporter(GroupPtr g, int p, const DeltaSpec& spec);

// Mor(P,P) as a subgroup of the ambient group.
Subgroup aut_object(const TransporterCat& t, int i);

// Full subcategory on S and the objects P with N_S(P) Sylow in Aut(P) and
// Aut(P)/P containing a strongly p-embedded subgroup.
TransporterCat t_essential_subcategory(const TransporterCat& t);

// One step of a decomposed morphism: the element x, an automorphism of
// `support`, restricted to a map between the objects `from` and `to`.
struct MorFactor {
    Subgroup support;
    int x = 0;
    int from = 0, to = 0; // object indices
};

// Write the morphism g : P_i -> P_j as restrictions of automorphisms of
// essential objects and S, with a final inclusion appended when needed.
std::vector<MorFactor> decompose_morphism(const TransporterCat& t, int i, int j, int g,
                                          Decomposer& dec);
std::vector<MorFactor> decompose_morphism(const TransporterCat& t, int i, int j, int g);

// Contravariant functor into finite abelian p-groups: one matrix per
// morphism, carrying F(to)-coordinates to F(from)-coordinates.
struct FunctorPres {
    TransporterCat cat;
    std::vector<AbPres> values;
    std::map<std::tuple<int, int, int>, Mat> maps; // key (from, to, element)

    const Mat& map_of(int i, int j, int g) const;
};

// Throws FunctorError when a matrix is missing or mis-sized, is not defined
// on the stated cyclic orders, or breaks an identity or composition law.
void validate_functor(const FunctorPres& f);

FunctorPres constant_functor(const TransporterCat& t, const AbPres& value);

// Families (x_P) in the product of the values with x_P = M_phi x_Q for every
// morphism phi : P -> Q, reported by invariant factors.
AbPres inverse_limit(const FunctorPres& f);

// Restrict a functor to a full subcategory (objects matched by member set).
FunctorPres restrict_functor(const FunctorPres& f, const TransporterCat& sub);

} // namespace loc
