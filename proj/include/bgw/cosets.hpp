#pragma once

#include "bgw/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bgw {

// Ordered left cosets a_i H, each listed in the order of the ordered subgroup.
struct CosetDecomposition {
  GroupPtr parent;
  std::vector<int> subgroup;             // ordered H
  std::vector<int> reps;                 // a_i
  std::vector<std::vector<int>> cosets;  // cosets[i][l] = reps[i] * subgroup[l]
  std::vector<int> coset_of;             // element -> i

  int count() const { return static_cast<int>(reps.size()); }
  int subgroup_order() const { return static_cast<int>(subgroup.size()); }
  // Which position of coset i holds element x (-1 if not there).
  int position(int i, int x) const;
};

// Throws std::invalid_argument when `subgroup` is not a subgroup or the
// representatives do not give a partition.
CosetDecomposition left_cosets(const GroupPtr& g, const std::vector<int>& ordered_subgroup,
                               const std::vector<int>& reps);
// Representatives chosen as the first element (by index) of each new coset.
CosetDecomposition left_cosets(const GroupPtr& g, const std::vector<int>& ordered_subgroup);
// Rows given explicitly; a_i = row_i[0] * h_0^-1 and every row must equal a_i H in order.
CosetDecomposition cosets_from_rows(const GroupPtr& g, const std::vector<int>& ordered_subgroup,
                                    const std::vector<std::vector<int>>& rows);

// eta_g(i) = j iff g a_i H = a_j H.
Perm coset_action(const CosetDecomposition& c, int g);

struct Bracket {
  int m;
  int target;
  friend bool operator==(const Bracket& a, const Bracket& b) { return a.m == b.m && a.target == b.target; }
};
// g * cosets[i][l] == cosets[target][(l + m) mod k] for all l. Throws
// std::domain_error when the image is not a rotation of the target ordering.
Bracket rotation_bracket(const CosetDecomposition& c, int g, int coset_index);

struct BlockSystem {
  int degree = 0;
  std::vector<std::vector<int>> blocks;  // each sorted; sorted by first point

  int block_size() const { return blocks.empty() ? 0 : static_cast<int>(blocks[0].size()); }
  int block_count() const { return static_cast<int>(blocks.size()); }
  bool trivial() const { return block_size() == 1 || block_count() == 1; }
  friend bool operator==(const BlockSystem& a, const BlockSystem& b) {
    return a.degree == b.degree && a.blocks == b.blocks;
  }
};

BlockSystem make_block_system(int degree, std::vector<std::vector<int>> blocks);
bool preserves_blocks(const Perm& p, const BlockSystem& b);
// All block systems (trivial ones included) of a transitive action, ordered by
// block size then lexicographically. Throws std::invalid_argument if the
// generated group is not transitive.
std::vector<BlockSystem> find_block_systems(const std::vector<Perm>& action, int degree);

}  // namespace bgw
