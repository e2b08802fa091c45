#pragma once
#include "loc/group.hpp"
#include <string>
#include <vector>

namespace loc {

// Parses cycle notation like "(1 2)(3 4)" (1-based points, "e" for the
// identity) into a 0-based image vector of the given degree.
std::vector<int> parse_permutation(const std::string& cycles, int degree);
// Canonical cycle notation: cycles sorted by smallest point, each starting at
// its smallest point; "e" for the identity.
std::string cycle_label(const std::vector<int>& img);

// Closes the generators under composition (right multiplication, breadth
// first) and builds the Cayley table. Element 0 is the identity; labels are
// canonical cycle strings.
GroupPtr perm_group(const std::string& name, int degree,
                    const std::vector<std::vector<int>>& gens);
GroupPtr perm_group(const std::string& name, int degree,
                    const std::vector<std::string>& gen_cycles);

GroupPtr symmetric_group(int n);
GroupPtr cyclic_group(int n);
GroupPtr dihedral_group(int n); // on n >= 3 points, order 2n
GroupPtr alternating4();
GroupPtr sl2_3(); // on the 8 nonzero vectors of F3^2

// Named groups: S3, S4, D8, D12, A4, SL23, and C<n>.
GroupPtr builtin_group(const std::string& name);

// Finds an element by label; for permutation groups any equivalent cycle
// string is accepted. Throws DomainError when absent.
int element_by_label(const FiniteGroup& g, const std::string& label);

} // namespace loc
