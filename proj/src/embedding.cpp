#include "bgw/embedding.hpp"

#include "bgw/named_groups.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace bgw {

Embedding kk_embed(const CosetDecomposition& c) {
  const auto& g = c.parent;
  Embedding e;
  e.domain = g;
  e.base = g->subgroup_group(g->name() + " subgroup", c.subgroup);
  e.arity = c.count();
  std::vector<int> local(static_cast<std::size_t>(g->order()), -1);
  for (int l = 0; l < c.subgroup_order(); ++l) local[c.subgroup[l]] = l;
  e.images.reserve(static_cast<std::size_t>(g->order()));
  for (int x = 0; x < g->order(); ++x) {
    Perm eta = coset_action(c, x);
    std::vector<int> beads(static_cast<std::size_t>(e.arity));
    for (int i = 0; i < e.arity; ++i) {
      int j = eta(i);
      int h = g->mul(g->inv(c.reps[j]), g->mul(x, c.reps[i]));
      if (local[h] < 0) throw std::logic_error("kk_embed: bead outside the subgroup");
      beads[j] = local[h];
    }
    e.images.push_back({e.base, std::move(beads), std::move(eta)});
  }
  std::ostringstream reps;
  for (std::size_t i = 0; i < c.reps.size(); ++i) reps << (i ? ", " : "") << g->repr(c.reps[i]);
  std::ostringstream sub;
  for (std::size_t l = 0; l < c.subgroup.size(); ++l) sub << (l ? ", " : "") << g->repr(c.subgroup[l]);
  e.provenance["construction"] = "coset embedding";
  e.provenance["subgroup"] = "(" + sub.str() + ")";
  e.provenance["coset representatives"] = "(" + reps.str() + ")";
  return e;
}

Perm bead_as_perm(const FiniteGroup& base, int bead) {
  std::vector<int> all(static_cast<std::size_t>(base.order()));
  for (int x = 0; x < base.order(); ++x) all[x] = x;
  return base.left_regular_perm(bead, all);
}

EmbeddingReport verify_embedding(Embedding& e, bool identify) {
  EmbeddingReport r;
  const auto& g = *e.domain;
  int n = g.order();
  if (static_cast<int>(e.images.size()) != n) throw std::invalid_argument("verify_embedding: missing images");
  r.homomorphism = true;
  for (int a = 0; a < n && r.homomorphism; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!(w_mul(e.images[a], e.images[b]) == e.images[g.mul(a, b)])) {
        r.homomorphism = false;
        r.witness = std::make_pair(a, b);
        break;
      }
    }
  }
  std::unordered_set<WreathElem> distinct(e.images.begin(), e.images.end());
  r.image_size = static_cast<int>(distinct.size());
  r.injective = r.image_size == n;
  e.is_homomorphism = r.homomorphism;
  e.is_injective = r.injective;

  std::vector<Perm> tops;
  std::vector<int> beads;
  std::vector<char> seen(static_cast<std::size_t>(e.base->order()), 0);
  for (int a = 0; a < n; ++a) {
    const auto& w = e.images[a];
    if (w.top.is_identity()) r.top_kernel.push_back(a);
    if (std::find(tops.begin(), tops.end(), w.top) == tops.end()) tops.push_back(w.top);
    for (int b : w.beads) {
      if (!seen[b]) {
        seen[b] = 1;
        beads.push_back(b);
      }
    }
  }
  r.top_group = perm_group("top image", tops);
  r.bead_subgroup = e.base->subgroup_of(beads);
  if (identify) {
    r.base_name = identify_group(*e.base);
    r.top_name = identify_group(*r.top_group);
    r.bead_name = identify_group(*e.base->subgroup_group("beads", r.bead_subgroup));
  }
  return r;
}

Embedding block_embed(const GroupPtr& g, const std::vector<Perm>& action, const BlockSystem& blocks,
                      const std::vector<std::vector<int>>& orderings_in) {
  if (static_cast<int>(action.size()) != g->order()) throw std::invalid_argument("block_embed: one permutation per element");
  std::vector<int> kernel;
  for (int a = 0; a < g->order(); ++a) {
    if (action[a].is_identity()) kernel.push_back(a);
  }
  if (kernel.size() > 1) {
    std::string msg = "block_embed: action is not faithful; kernel =";
    for (int k : kernel) msg += " " + g->repr(k) + ";";
    throw std::invalid_argument(msg);
  }
  for (int a = 0; a < g->order(); ++a) {
    if (!preserves_blocks(action[a], blocks)) {
      throw std::invalid_argument("block_embed: partition is not preserved by " + g->repr(a));
    }
  }
  auto orderings = orderings_in.empty() ? blocks.blocks : orderings_in;
  if (static_cast<int>(orderings.size()) != blocks.block_count()) throw std::invalid_argument("block_embed: ordering count");
  for (int b = 0; b < blocks.block_count(); ++b) {
    auto sorted = orderings[b];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != blocks.blocks[b]) throw std::invalid_argument("block_embed: ordering does not match its block");
  }
  Embedding e;
  e.domain = g;
  e.base = symmetric_group(blocks.block_size());
  e.arity = blocks.block_count();
  for (int a = 0; a < g->order(); ++a) e.images.push_back(induced_block_element(action[a], orderings, e.base));
  std::ostringstream os;
  for (std::size_t b = 0; b < orderings.size(); ++b) {
    os << (b ? " " : "") << "{";
    for (std::size_t l = 0; l < orderings[b].size(); ++l) os << (l ? "," : "") << orderings[b][l];
    os << "}";
  }
  e.provenance["construction"] = "block embedding";
  e.provenance["blocks"] = os.str();
  return e;
}

Embedding nest_embedding(const Embedding& outer, const Embedding& inner) {
  if (inner.domain != outer.base) throw std::invalid_argument("nest_embedding: inner domain is not the outer base");
  int m = inner.arity;
  long long wreath_order = 1;
  for (int i = 0; i < m; ++i) wreath_order *= inner.base->order();
  for (int i = 2; i <= m; ++i) wreath_order *= i;
  GroupPtr base;
  if (wreath_order <= static_cast<long long>(FiniteGroup::kDefaultCap)) {
    base = full_wreath_group(inner.base, m, "inner wreath");
  } else {
    std::vector<GroupElem> gens;
    for (const auto& w : inner.images) gens.emplace_back(w);
    base = FiniteGroup::closure("inner image", gens);
  }
  Embedding e;
  e.domain = outer.domain;
  e.base = base;
  e.arity = outer.arity;
  for (const auto& w : outer.images) {
    std::vector<int> beads;
    for (int b : w.beads) {
      int idx = base->index_of(GroupElem(inner.images[b]));
      if (idx < 0) throw std::logic_error("nest_embedding: inner image missing from nested base");
      beads.push_back(idx);
    }
    e.images.push_back({base, std::move(beads), w.top});
  }
  e.provenance = outer.provenance;
  e.provenance["nested"] = inner.provenance.count("construction") ? inner.provenance.at("construction") : "inner";
  return e;
}

Embedding rebase(const Embedding& e, const std::vector<int>& subgroup, const std::string& name) {
  GroupPtr nb = e.base->subgroup_group(name, subgroup);
  std::vector<int> local(static_cast<std::size_t>(e.base->order()), -1);
  for (std::size_t l = 0; l < subgroup.size(); ++l) local[subgroup[l]] = static_cast<int>(l);
  Embedding out;
  out.domain = e.domain;
  out.base = nb;
  out.arity = e.arity;
  out.provenance = e.provenance;
  out.provenance["base restricted to"] = name;
  for (const auto& w : e.images) {
    std::vector<int> beads;
    for (int b : w.beads) {
      if (local[b] < 0) throw std::invalid_argument("rebase: bead " + e.base->repr(b) + " is outside " + name);
      beads.push_back(local[b]);
    }
    out.images.push_back({nb, std::move(beads), w.top});
  }
  return out;
}

GroupPtr induced_bead_group(const std::vector<Perm>& action, const std::vector<std::vector<int>>& orderings,
                            int block_index) {
  const auto& blk = orderings.at(static_cast<std::size_t>(block_index));
  int b = static_cast<int>(blk.size());
  int degree = action.empty() ? 0 : action[0].degree();
  std::vector<int> pos(static_cast<std::size_t>(degree), -1);
  for (int l = 0; l < b; ++l) pos[blk[l]] = l;
  std::vector<Perm> gens = {Perm::identity(b)};
  for (const auto& p : action) {
    if (pos[p(blk[0])] < 0) continue;  // does not stabilize this block
    std::vector<int> pi(static_cast<std::size_t>(b));
    for (int l = 0; l < b; ++l) {
      pi[l] = pos[p(blk[l])];
      if (pi[l] < 0) throw std::invalid_argument("induced_bead_group: block not preserved");
    }
    Perm q(pi);
    if (std::find(gens.begin(), gens.end(), q) == gens.end()) gens.push_back(q);
  }
  return perm_group("induced bead group", gens);
}

GroupPtr wreath_as_perm_group(const FiniteGroup& inner, const FiniteGroup& top, const std::string& name) {
  int m = std::get<Perm>(inner.element(0)).degree();
  int r = std::get<Perm>(top.element(0)).degree();
  std::vector<Perm> gens;
  for (int s : inner.generators()) {
    const Perm& p = std::get<Perm>(inner.element(s));
    std::vector<int> im(static_cast<std::size_t>(m * r));
    for (int x = 0; x < m * r; ++x) im[x] = x < m ? p(x) : x;
    gens.emplace_back(im);
  }
  for (int s : top.generators()) {
    const Perm& t = std::get<Perm>(top.element(s));
    std::vector<int> im(static_cast<std::size_t>(m * r));
    for (int x = 0; x < m * r; ++x) im[x] = t(x / m) * m + x % m;
    gens.emplace_back(im);
  }
  if (gens.empty()) gens.push_back(Perm::identity(m * r));
  return perm_group(name, gens);
}

GroupPtr full_wreath_group(const GroupPtr& c, int m, const std::string& name) {
  std::vector<GroupElem> gens;
  for (int s : c->generators()) {
    WreathElem w = WreathElem::identity(c, m);
    w.beads[0] = s;
    gens.emplace_back(w);
  }
  if (m > 1) {
    std::vector<int> sw(static_cast<std::size_t>(m)), cyc(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      sw[i] = i;
      cyc[i] = (i + 1) % m;
    }
    std::swap(sw[0], sw[1]);
    WreathElem a = WreathElem::identity(c, m), b = WreathElem::identity(c, m);
    a.top = Perm(sw);
    b.top = Perm(cyc);
    gens.emplace_back(a);
    gens.emplace_back(b);
  }
  if (gens.empty()) gens.emplace_back(WreathElem::identity(c, m));
  return FiniteGroup::closure(name, gens);
}

}  // namespace bgw
