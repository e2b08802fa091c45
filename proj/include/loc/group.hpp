#pragma once
#include "loc/bits.hpp"
#include "loc/errors.hpp"
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace loc {

// A finite group given by its full Cayley table. Element 0 is always the
// identity. Optional permutation data (perms/perm_degree) backs the labels
// and lets elements be looked up by cycle notation.
//
// Conventions used throughout the library:
//   * permutations act on the right, composition is left-to-right:
//     perms[a*b][x] == perms[b][perms[a][x]]
//   * conjugation is s^g = g^-1 * s * g
struct FiniteGroup {
    int n = 0;
    std::vector<int> table;   // row-major: table[a*n+b] = a*b
    std::vector<int> inverse; // filled by make_group if empty
    std::vector<std::string> labels;
    std::vector<std::vector<int>> perms; // optional faithful permutation data
    int perm_degree = 0;
    std::string name;

    int mul(int a, int b) const { return table[a * n + b]; }
    int inv(int a) const { return inverse[a]; }
    int conj(int s, int g) const { return mul(mul(inv(g), s), g); }
    int element_order(int a) const;
    bool is_abelian() const;
    std::string label_of(int a) const;
    // Returns a description of the first violated group axiom, if any.
    std::optional<std::string> check_axioms() const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

constexpr int kMaxGroupOrder = 200;

// Validates (unless told not to) and freezes a group. Computes the inverse
// table when absent. Throws SpecError on an oversized or inconsistent table.
GroupPtr make_group(FiniteGroup g, bool validate = true);

struct Subgroup {
    GroupPtr parent;
    Bits members;
    int order = 0;
};

bool is_closed_subset(const FiniteGroup& g, const Bits& members);
Subgroup make_subgroup(GroupPtr parent, const Bits& members); // checks closure
Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);
bool subgroup_eq(const Subgroup& a, const Subgroup& b);
// Total order on subgroups of one parent: by order, then by member set.
int subgroup_cmp(const Subgroup& a, const Subgroup& b);

Subgroup generated_subgroup(GroupPtr parent, const std::vector<int>& gens);
Bits conj_bits(const FiniteGroup& g, const Bits& s, int x); // elementwise s^x
Subgroup conj_subgroup(const Subgroup& p, int x);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);
bool contains(const Subgroup& a, const Subgroup& b); // b <= a
Subgroup normalizer(const Subgroup& ambient, const Subgroup& p);
Subgroup centralizer(const Subgroup& ambient, const Subgroup& p);
bool is_normal_in(const Subgroup& p, const Subgroup& ambient);

bool is_p_power(long long m, int p);
int p_part(int m, int p);
bool is_p_subgroup(const Subgroup& h, int p);

// Deterministic Sylow p-subgroup of h: grows a p-subgroup through its
// normalizer, always taking the smallest usable element index.
Subgroup sylow(const Subgroup& h, int p);
// First n in h (ascending) with p^n <= t. Throws InternalError if none.
int sylow_conjugator(const Subgroup& h, const Subgroup& p, const Subgroup& t);

// Every subgroup, sorted by (order, member set).
std::vector<Subgroup> all_subgroups(GroupPtr g);
// Every subgroup of the parent contained in h, sorted the same way.
std::vector<Subgroup> all_subgroups_in(const Subgroup& h);
// Greedy deterministic generating set (ascending element scan).
std::vector<int> subgroup_generators(const Subgroup& h);

struct Quotient {
    GroupPtr group;
    std::vector<int> proj; // parent element -> quotient element, -1 outside h
};
// h/nrm with cosets indexed by their smallest member. Throws DomainError if
// nrm is not normal in h.
Quotient quotient(const Subgroup& h, const Subgroup& nrm);

struct SubgroupView {
    GroupPtr group;
    std::vector<int> to_ambient; // local -> ambient
    std::vector<int> to_local;   // ambient -> local, -1 outside
};
SubgroupView subgroup_as_group(const Subgroup& h);

struct GroupHom {
    Subgroup source;
    GroupPtr target;
    std::vector<int> images; // ambient index -> target index, -1 outside source
};
bool is_homomorphism(const GroupHom& f);

} // namespace loc
