#pragma once
#include "loc/group.hpp"
#include "loc/locality.hpp"
#include <optional>

namespace loc {

struct SpeResult {
    bool exists = false;
    std::optional<Subgroup> witness;
};

// The literal definition: h is proper in its parent, p divides |h|, and for
// every g outside h, p does not divide |h intersect h^g|.
bool is_strongly_p_embedded(const Subgroup& h, int p);

// Detection via the p-subgroup graph: vertices are the order-p subgroups,
// with an edge when the join is again a p-group. The graph is disconnected
// exactly when a strongly p-embedded subgroup exists, and the stabilizer of
// a component is then one. The returned witness is re-validated against the
// literal definition.
SpeResult strongly_p_embedded(GroupPtr g, int p);

// Ground truth by scanning every subgroup; returns the first witness in
// (order, member set) order.
SpeResult strongly_p_embedded_bruteforce(GroupPtr g, int p);

// X = { x in G : S meets S^x beyond the identity }, in element index order;
// symmetric without extra bookkeeping since |S ∩ S^(x^-1)| = |S^x ∩ S|.
// Generates all of G exactly when p divides |G| and no strongly p-embedded
// subgroup exists.
std::vector<int> sylow_intersection_generators(GroupPtr g, const Subgroup& s);

// Expresses the target as a word in the generators (values, not indices) via
// breadth-first search from the identity with right multiplication; the first
// discovery fixes the word. Throws InternalError when out of the span.
Word express_word(GroupPtr g, const std::vector<int>& gens, int target);

} // namespace loc
