#pragma once

#include "bgw/cosets.hpp"
#include "bgw/group.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bgw {

// Homomorphism G -> B^n x| Sigma_n given by its value on every element.
struct Embedding {
  GroupPtr domain;
  GroupPtr base;
  int arity = 0;
  std::vector<WreathElem> images;  // indexed by domain element
  std::map<std::string, std::string> provenance;
  // Set only by verify_embedding.
  std::optional<bool> is_homomorphism;
  std::optional<bool> is_injective;

  const WreathElem& image(int g) const { return images.at(static_cast<std::size_t>(g)); }
};

struct EmbeddingReport {
  bool homomorphism = false;
  std::optional<std::pair<int, int>> witness;  // (g, h) with image(gh) != image(g) image(h)
  bool injective = false;
  int image_size = 0;
  GroupPtr top_group;                // image of the top projection
  std::vector<int> top_kernel;       // domain elements with trivial top
  std::vector<int> bead_subgroup;    // indices in base generated by all beads
  std::string base_name;             // identification of the codomain base group
  std::string top_name;
  std::string bead_name;             // identification of the generated bead group
  bool ok() const { return homomorphism && injective; }
};

// Beads h_{i,j} = a_j^-1 g a_i on target row j, as elements of H (the base
// group lists H in the decomposition's subgroup order).
Embedding kk_embed(const CosetDecomposition& c);

// Exhaustive |G|^2 check; stores the verified flags on `e`.
EmbeddingReport verify_embedding(Embedding& e, bool identify = true);

// Bead as a permutation of the base group's elements (left-regular form).
Perm bead_as_perm(const FiniteGroup& base, int bead);

// `action[g]` is the permutation of g; orderings[b] lists block b's points
// (block order = blocks.blocks order). Throws on unfaithful actions (kernel
// listed in the message) and on partitions that are not preserved.
Embedding block_embed(const GroupPtr& g, const std::vector<Perm>& action, const BlockSystem& blocks,
                      const std::vector<std::vector<int>>& orderings = {});

// Replace each bead by its image under `inner` (inner.domain must be outer.base).
Embedding nest_embedding(const Embedding& outer, const Embedding& inner);

// Re-express the beads inside a subgroup of the base (given in the order the
// new base should list them). Throws if a bead lies outside.
Embedding rebase(const Embedding& e, const std::vector<int>& subgroup, const std::string& name);

// Group generated by the within-block bijections of block-stabilizer
// elements on block `block_index`, as permutations of that block's ordering.
GroupPtr induced_bead_group(const std::vector<Perm>& action, const std::vector<std::vector<int>>& orderings,
                            int block_index);

// Imprimitive group on m*r points: `inner` (on m points) acting inside block 0
// and `top` (on r points) permuting blocks {B*m, ..., B*m+m-1}.
GroupPtr wreath_as_perm_group(const FiniteGroup& inner, const FiniteGroup& top, const std::string& name);

// Full C^m x| Sigma_m as a group of wreath elements (must fit the closure cap).
GroupPtr full_wreath_group(const GroupPtr& c, int m, const std::string& name);

}  // namespace bgw
