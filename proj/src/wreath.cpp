#include "bgw/wreath.hpp"

#include "bgw/group.hpp"

#include <boost/functional/hash.hpp>

#include <stdexcept>

namespace bgw {

WreathElem WreathElem::identity(std::shared_ptr<const FiniteGroup> base, int arity) {
  int e = base->identity();
  return {std::move(base), std::vector<int>(static_cast<std::size_t>(arity), e), Perm::identity(arity)};
}

std::size_t WreathElem::hash() const {
  std::size_t seed = top.hash();
  boost::hash_range(seed, beads.begin(), beads.end());
  return seed;
}

WreathElem w_mul(const WreathElem& u, const WreathElem& v) {
  if (u.arity() != v.arity()) throw std::invalid_argument("w_mul: arity mismatch");
  if (u.base != v.base) throw std::invalid_argument("w_mul: base group mismatch");
  int n = u.arity();
  Perm uinv = u.top.inverse();
  std::vector<int> beads(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) beads[i] = u.base->mul(u.beads[i], v.beads[uinv(i)]);
  return {u.base, std::move(beads), u.top * v.top};
}

WreathElem w_inv(const WreathElem& u) {
  // (b, s)^-1 = (b', s^-1) with b'_j = (b_{s(j)})^-1.
  int n = u.arity();
  std::vector<int> beads(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) beads[j] = u.base->inv(u.beads[u.top(j)]);
  return {u.base, std::move(beads), u.top.inverse()};
}

WreathElem w_pow(const WreathElem& u, long long e) {
  WreathElem base = e < 0 ? w_inv(u) : u;
  unsigned long long m = static_cast<unsigned long long>(e < 0 ? -e : e);
  WreathElem r = WreathElem::identity(u.base, u.arity());
  while (m) {
    if (m & 1) r = w_mul(r, base);
    base = w_mul(base, base);
    m >>= 1;
  }
  return r;
}

std::string to_string(const WreathElem& w) {
  std::string out = "((";
  for (int i = 0; i < w.arity(); ++i) {
    if (i) out += "; ";
    out += w.base->repr(w.beads[i]);
  }
  return out + "); " + cycles_print(w.top) + ")";
}

std::vector<std::vector<int>> formal_matrix(const WreathElem& w) {
  int n = w.arity();
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int j = 0; j < n; ++j) m[w.top(j)][j] = w.beads[w.top(j)];
  return m;
}

WreathElem induced_block_element(const Perm& action, const std::vector<std::vector<int>>& orderings,
                                 std::shared_ptr<const FiniteGroup> sym) {
  int nb = static_cast<int>(orderings.size());
  if (nb == 0) throw std::invalid_argument("induced_block_element: no blocks");
  int b = static_cast<int>(orderings[0].size());
  std::vector<int> block_of(static_cast<std::size_t>(action.degree()), -1), pos(static_cast<std::size_t>(action.degree()), -1);
  for (int B = 0; B < nb; ++B) {
    if (static_cast<int>(orderings[B].size()) != b) throw std::invalid_argument("blocks of unequal size");
    for (int l = 0; l < b; ++l) {
      int p = orderings[B][l];
      if (p < 0 || p >= action.degree() || block_of[p] >= 0) throw std::invalid_argument("blocks do not partition the points");
      block_of[p] = B;
      pos[p] = l;
    }
  }
  for (int p : block_of) {
    if (p < 0) throw std::invalid_argument("blocks do not cover the points");
  }
  std::vector<int> top(static_cast<std::size_t>(nb));
  std::vector<int> beads(static_cast<std::size_t>(nb));
  for (int B = 0; B < nb; ++B) {
    int target = block_of[action(orderings[B][0])];
    std::vector<int> pi(static_cast<std::size_t>(b));
    for (int l = 0; l < b; ++l) {
      int img = action(orderings[B][l]);
      if (block_of[img] != target) throw std::invalid_argument("action does not preserve the blocks");
      pi[l] = pos[img];
    }
    top[B] = target;
    int idx = sym->index_of(GroupElem(Perm(pi)));
    if (idx < 0) throw std::invalid_argument("bead is not in the supplied symmetric group");
    beads[target] = idx;
  }
  return {std::move(sym), std::move(beads), Perm(std::move(top))};
}

}  // namespace bgw
