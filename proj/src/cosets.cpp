#include "bgw/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bgw {

int CosetDecomposition::position(int i, int x) const {
  const auto& row = cosets[static_cast<std::size_t>(i)];
  auto it = std::find(row.begin(), row.end(), x);
  return it == row.end() ? -1 : static_cast<int>(it - row.begin());
}

CosetDecomposition left_cosets(const GroupPtr& g, const std::vector<int>& ordered_subgroup,
                               const std::vector<int>& reps) {
  std::vector<int> sorted = ordered_subgroup;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || !is_subgroup(*g, sorted)) {
    throw std::invalid_argument("left_cosets: ordered subgroup is not a subgroup");
  }
  if (reps.size() * ordered_subgroup.size() != static_cast<std::size_t>(g->order())) {
    throw std::invalid_argument("left_cosets: wrong number of representatives");
  }
  CosetDecomposition c;
  c.parent = g;
  c.subgroup = ordered_subgroup;
  c.reps = reps;
  c.coset_of.assign(static_cast<std::size_t>(g->order()), -1);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    std::vector<int> row;
    for (int h : ordered_subgroup) {
      int x = g->mul(reps[i], h);
      if (c.coset_of[x] >= 0) throw std::invalid_argument("left_cosets: representatives share a coset");
      c.coset_of[x] = static_cast<int>(i);
      row.push_back(x);
    }
    c.cosets.push_back(std::move(row));
  }
  return c;
}

CosetDecomposition left_cosets(const GroupPtr& g, const std::vector<int>& ordered_subgroup) {
  std::vector<char> seen(static_cast<std::size_t>(g->order()), 0);
  std::vector<int> reps;
  for (int a = 0; a < g->order(); ++a) {
    if (seen[a]) continue;
    reps.push_back(a);
    for (int h : ordered_subgroup) seen[g->mul(a, h)] = 1;
  }
  return left_cosets(g, ordered_subgroup, reps);
}

CosetDecomposition cosets_from_rows(const GroupPtr& g, const std::vector<int>& ordered_subgroup,
                                    const std::vector<std::vector<int>>& rows) {
  std::vector<int> reps;
  for (const auto& row : rows) {
    if (row.size() != ordered_subgroup.size()) throw std::invalid_argument("cosets_from_rows: row length");
    reps.push_back(g->mul(row[0], g->inv(ordered_subgroup[0])));
  }
  CosetDecomposition c = left_cosets(g, ordered_subgroup, reps);
  if (c.cosets != rows) throw std::invalid_argument("cosets_from_rows: a row is not a_i H in subgroup order");
  return c;
}

Perm coset_action(const CosetDecomposition& c, int g) {
  std::vector<int> im(static_cast<std::size_t>(c.count()));
  for (int i = 0; i < c.count(); ++i) im[i] = c.coset_of[c.parent->mul(g, c.reps[i])];
  return Perm(std::move(im));
}

Bracket rotation_bracket(const CosetDecomposition& c, int g, int coset_index) {
  const auto& src = c.cosets.at(static_cast<std::size_t>(coset_index));
  int k = c.subgroup_order();
  int first = c.parent->mul(g, src[0]);
  int target = c.coset_of[first];
  int m = c.position(target, first);
  for (int l = 0; l < k; ++l) {
    if (c.parent->mul(g, src[l]) != c.cosets[target][(l + m) % k]) {
      throw std::domain_error("rotation_bracket: image is not a rotation of the target ordering");
    }
  }
  return {m, target};
}

BlockSystem make_block_system(int degree, std::vector<std::vector<int>> blocks) {
  std::vector<char> seen(static_cast<std::size_t>(degree), 0);
  std::size_t size = blocks.empty() ? 0 : blocks[0].size();
  for (auto& b : blocks) {
    if (b.size() != size || size == 0) throw std::invalid_argument("blocks must be nonempty and of equal size");
    std::sort(b.begin(), b.end());
    for (int p : b) {
      if (p < 0 || p >= degree || seen[p]) throw std::invalid_argument("blocks must partition the points");
      seen[p] = 1;
    }
  }
  if (size * blocks.size() != static_cast<std::size_t>(degree)) throw std::invalid_argument("blocks must cover the points");
  std::sort(blocks.begin(), blocks.end());
  return {degree, std::move(blocks)};
}

bool preserves_blocks(const Perm& p, const BlockSystem& b) {
  std::vector<int> block_of(static_cast<std::size_t>(b.degree), -1);
  for (int i = 0; i < b.block_count(); ++i) {
    for (int x : b.blocks[i]) block_of[x] = i;
  }
  for (const auto& blk : b.blocks) {
    int target = block_of[p(blk[0])];
    for (int x : blk) {
      if (block_of[p(x)] != target) return false;
    }
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::vector<std::vector<int>> classes(UnionFind& uf, int n) {
  std::vector<std::vector<int>> by_root(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) by_root[uf.find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& c : by_root) {
    if (!c.empty()) out.push_back(std::move(c));
  }
  return out;
}

// Finest invariant partition in which the listed pairs are joined.
std::vector<std::vector<int>> invariant_closure(const std::vector<Perm>& gens, int n,
                                                std::vector<std::pair<int, int>> queue) {
  UnionFind uf(n);
  for (auto [a, b] : queue) uf.unite(a, b);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto [x, y] = queue[q];
    for (const auto& g : gens) {
      if (uf.unite(g(x), g(y))) queue.emplace_back(g(x), g(y));
    }
  }
  return classes(uf, n);
}

}  // namespace

std::vector<BlockSystem> find_block_systems(const std::vector<Perm>& action, int degree) {
  for (const auto& p : action) {
    if (p.degree() != degree) throw std::invalid_argument("find_block_systems: degree mismatch");
  }
  {
    UnionFind uf(degree);
    for (const auto& p : action) {
      for (int x = 0; x < degree; ++x) uf.unite(x, p(x));
    }
    for (int x = 0; x < degree; ++x) {
      if (uf.find(x) != 0) throw std::invalid_argument("find_block_systems: action is not transitive");
    }
  }
  std::set<std::vector<std::vector<int>>> found;
  std::vector<std::vector<std::vector<int>>> minimal;
  for (int b = 1; b < degree; ++b) {
    auto sys = invariant_closure(action, degree, {{0, b}});
    if (found.insert(sys).second) minimal.push_back(sys);
  }
  // Every system is a join of minimal ones; close under pairwise joins.
  std::vector<std::vector<std::vector<int>>> all(found.begin(), found.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& m : minimal) {
      std::vector<std::pair<int, int>> pairs;
      for (const auto& sys : {all[i], m}) {
        for (const auto& blk : sys) {
          for (std::size_t t = 1; t < blk.size(); ++t) pairs.emplace_back(blk[0], blk[t]);
        }
      }
      auto joined = invariant_closure(action, degree, pairs);
      if (found.insert(joined).second) all.push_back(joined);
    }
  }
  std::vector<std::vector<int>> singletons;
  for (int x = 0; x < degree; ++x) singletons.push_back({x});
  found.insert(singletons);
  std::vector<BlockSystem> out;
  for (const auto& sys : found) out.push_back(make_block_system(degree, sys));
  std::sort(out.begin(), out.end(), [](const BlockSystem& a, const BlockSystem& b) {
    if (a.block_size() != b.block_size()) return a.block_size() < b.block_size();
    return a.blocks < b.blocks;
  });
  return out;
}

}  // namespace bgw
