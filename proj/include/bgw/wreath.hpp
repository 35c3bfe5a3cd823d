#pragma once

#include "bgw/perm.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace bgw {

class FiniteGroup;

// Element of B^n x| Sigma_n: beads (indices into the base group B) and a top
// permutation. Beads are indexed by target strand: bead i sits on output i.
struct WreathElem {
  std::shared_ptr<const FiniteGroup> base;
  std::vector<int> beads;
  Perm top;

  int arity() const { return static_cast<int>(beads.size()); }
  static WreathElem identity(std::shared_ptr<const FiniteGroup> base, int arity);

  friend bool operator==(const WreathElem& u, const WreathElem& v) {
    return u.base == v.base && u.beads == v.beads && u.top == v.top;
  }
  std::size_t hash() const;
};

// top = u.top o v.top; bead_i = u.bead_i * v.bead_{u.top^-1(i)}.
WreathElem w_mul(const WreathElem& u, const WreathElem& v);
WreathElem w_inv(const WreathElem& u);
WreathElem w_pow(const WreathElem& u, long long e);
std::string to_string(const WreathElem& w);

// Formal matrix of a wreath element: entry (row, col) is the bead index in
// row `row` or -1 for an empty cell. Row sigma(j) of column j holds bead sigma(j).
std::vector<std::vector<int>> formal_matrix(const WreathElem& w);

// Within-block bijections of a block-preserving permutation. orderings[b]
// lists the points of block b; the bead on target block B' = perm(B) is the
// permutation pi of positions with perm(orderings[B][l]) = orderings[B'][pi(l)].
// `sym` must be the symmetric group on the block size (elements are Perms).
WreathElem induced_block_element(const Perm& action, const std::vector<std::vector<int>>& orderings,
                                 std::shared_ptr<const FiniteGroup> sym);

}  // namespace bgw

template <>
struct std::hash<bgw::WreathElem> {
  std::size_t operator()(const bgw::WreathElem& w) const { return w.hash(); }
};
