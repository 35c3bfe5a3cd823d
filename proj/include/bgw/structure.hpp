#pragma once

#include "bgw/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bgw {

std::vector<int> derived_subgroup(const FiniteGroup& g);
int abelianization_order(const FiniteGroup& g);

struct IsoResult {
  std::optional<std::vector<int>> map;  // element index of G1 -> element index of G2
  std::string reason;                   // why absent, or how found
  long long candidates_tried = 0;
};

// Exact isomorphism test: invariant screening (order, order spectrum, center,
// abelianization) then backtracking over generator images.
IsoResult isomorphism_search(const FiniteGroup& g1, const FiniteGroup& g2);
std::optional<std::vector<int>> isomorphic(const FiniteGroup& g1, const FiniteGroup& g2);
// True when `map` is a bijective homomorphism.
bool check_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2, const std::vector<int>& map);

// N normal, N cap K trivial, |N||K| = |G|.
bool semidirect_witness(const FiniteGroup& g, const std::vector<int>& n, const std::vector<int>& k);

// A short generating set (greedy over elements of decreasing order).
std::vector<int> small_generating_set(const FiniteGroup& g);

}  // namespace bgw
