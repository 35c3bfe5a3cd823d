#pragma once

#include "bgw/group.hpp"

#include <string>
#include <vector>

namespace bgw {

// Small reference groups used to name computed groups.
GroupPtr cyclic_group(int n);
GroupPtr dihedral_group(int n);        // order 2n
GroupPtr dicyclic_word_group(int n);   // order 4n, DicWord elements
GroupPtr alternating_group(int n);
GroupPtr klein_four();
GroupPtr z3_wr_z2();                   // (Z/3 x Z/3) : Z/2 with the swap action

// Name of the first reference group isomorphic to g ("Z/4", "K4", "Q8",
// "Dic4", "Sigma3", "A4", "(Z/3xZ/3):Z/2", ...), or "order-N group".
std::string identify_group(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);

}  // namespace bgw
