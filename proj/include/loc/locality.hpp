#pragma once
#include "loc/group.hpp"
#include <optional>
#include <string>
#include <vector>

namespace loc {

using Word = std::vector<int>;

// How the object set Delta is seeded. The construction always closes Delta
// under passing to overgroups inside S and under conjugation by locality
// elements, so the final Delta may be larger than the seed.
struct DeltaSpec {
    enum class Kind { All, Nontrivial, OvergroupsOf, Explicit };
    Kind kind = Kind::All;
    // generator lists (ambient element indices) for OvergroupsOf / Explicit
    std::vector<std::vector<int>> seeds;
};

// A locality carved out of a finite group M: S is a Sylow p-subgroup, Delta a
// closed collection of subgroups of S, and the element set is
// L = { g in M : S_g in Delta } where S_g = { s in S : s^g in S }.
struct Locality {
    GroupPtr ambient;
    int p = 0;
    Subgroup S;
    std::vector<Subgroup> delta; // sorted by (order, member set)
    Bits elements;

    // S_g, recomputed from the table on every call.
    Bits s_of(int g) const;
    bool delta_contains(const Bits& members) const;
    bool in_locality(int g) const { return elements.test(g); }
    int element_count() const { return elements.count(); }
};

// Builds L_Delta(M). Validates p (prime, divides |M|), the Sylow override if
// given, and that the seeded Delta is nonempty. Throws SpecError on bad input.
Locality build_group_locality(GroupPtr m, int p, const DeltaSpec& spec,
                              const std::optional<std::vector<int>>& s_gens = std::nullopt);

// S_w for a word over L, via the backward sweep: T := S, then for letters
// right to left T := { s in S : s^g in T }. Empty word gives S. Throws
// DomainError when a letter is outside L.
Bits s_of_word(const Locality& loc, const Word& w);
bool in_domain(const Locality& loc, const Word& w); // S_w in Delta
// Product of a word in the domain; DomainError otherwise.
int product(const Locality& loc, const Word& w);

// N_L(P) = N_M(P) intersect L; a genuine subgroup when P is in Delta.
Subgroup normalizer_in_locality(const Locality& loc, const Subgroup& p);
// The isomorphism c_g : N_L(P) -> N_L(P^g) for P <= S_g, P in Delta.
GroupHom conjugation_map(const Locality& loc, const Subgroup& p, int g);

struct AxiomViolation {
    std::string check;
    std::string witness;
    std::string detail;
};
struct AxiomReport {
    bool pass = false;
    std::vector<AxiomViolation> violations;
    long long words_checked = 0;
};
// Re-derives the partial-group and locality axioms from the raw table:
// membership consistency, inverses, product/splice/inversion laws on all
// domain words up to max_len, Delta closure, and maximality of S among
// p-subgroups inside L.
AxiomReport verify_axioms(const Locality& loc, int max_len = 4);

std::string word_label(const Locality& loc, const Word& w);

// Rebinds a locality (S, delta, element set unchanged) onto another group
// with the same element indexing. Used to audit externally supplied or
// damaged tables with verify_axioms.
Locality rebind_ambient(const Locality& loc, GroupPtr g);

} // namespace loc
