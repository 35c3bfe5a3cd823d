#include "bgw/group.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

namespace bgw {

GroupElem elem_mul(const GroupElem& a, const GroupElem& b) {
  if (a.index() != b.index()) throw std::invalid_argument("elem_mul: mixed element types");
  return std::visit(
      [&](const auto& x) -> GroupElem {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, Quaternion>) return x * y;
        if constexpr (std::is_same_v<T, Perm>) return perm_compose(x, y);
        if constexpr (std::is_same_v<T, SignedPerm>) return signed_compose(x, y);
        if constexpr (std::is_same_v<T, ModMatrix>) return mm_mul(x, y);
        if constexpr (std::is_same_v<T, DicWord>) return dic_mul(x, y);
        if constexpr (std::is_same_v<T, WreathElem>) return w_mul(x, y);
      },
      a);
}

GroupElem elem_inv(const GroupElem& a) {
  return std::visit(
      [](const auto& x) -> GroupElem {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Quaternion>) return q_inv(x);
        if constexpr (std::is_same_v<T, Perm>) return x.inverse();
        if constexpr (std::is_same_v<T, SignedPerm>) return x.inverse();
        if constexpr (std::is_same_v<T, ModMatrix>) return mm_inv(x);
        if constexpr (std::is_same_v<T, DicWord>) return dic_inv(x);
        if constexpr (std::is_same_v<T, WreathElem>) return w_inv(x);
      },
      a);
}

std::string elem_repr(const GroupElem& a) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Perm>) {
          return cycles_print(x);
        } else {
          return to_string(x);
        }
      },
      a);
}

const char* elem_tag(const GroupElem& a) {
  static const char* const kTags[] = {"quaternion", "perm", "signed-perm", "mod-matrix", "dic-word", "wreath"};
  return kTags[a.index()];
}

std::size_t GroupElemHash::operator()(const GroupElem& e) const {
  std::size_t seed = e.index();
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Quaternion>) {
          boost::hash_combine(seed, hash_value(x));
        } else {
          boost::hash_combine(seed, x.hash());
        }
      },
      e);
  return seed;
}

int FiniteGroup::index_of(const GroupElem& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

std::shared_ptr<FiniteGroup> FiniteGroup::closure(std::string name, const std::vector<GroupElem>& generators,
                                                  std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("closure: no generators");
  for (const auto& g : generators) {
    if (g.index() != generators[0].index()) throw std::invalid_argument("closure: mixed element types");
  }
  auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  grp->name_ = std::move(name);
  GroupElem id = elem_mul(generators[0], elem_inv(generators[0]));
  grp->elements_.push_back(id);
  grp->index_.emplace(id, 0);

  // Each new element y = s * x remembers (s, x) so the table can be filled
  // from the left-regular permutations without further element products.
  std::vector<std::pair<int, int>> parent = {{-1, -1}};
  std::vector<GroupElem> gens;
  for (const auto& g : generators) {
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  int ng = static_cast<int>(gens.size());
  std::vector<std::vector<int>> left(static_cast<std::size_t>(ng));
  for (std::size_t x = 0; x < grp->elements_.size(); ++x) {
    for (int s = 0; s < ng; ++s) {
      GroupElem y = elem_mul(gens[s], grp->elements_[x]);
      auto [it, inserted] = grp->index_.emplace(y, static_cast<int>(grp->elements_.size()));
      if (inserted) {
        if (grp->elements_.size() >= cap) {
          throw std::length_error("closure of " + grp->name_ + " exceeds cap " + std::to_string(cap));
        }
        grp->elements_.push_back(std::move(y));
        parent.emplace_back(s, static_cast<int>(x));
      }
      left[s].push_back(it->second);
    }
  }
  int n = static_cast<int>(grp->elements_.size());
  grp->n_ = n;
  grp->identity_ = 0;
  grp->table_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int h = 0; h < n; ++h) grp->table_[h] = h;
  for (int g = 1; g < n; ++g) {
    auto [s, p] = parent[g];
    for (int h = 0; h < n; ++h) {
      grp->table_[static_cast<std::size_t>(g) * n + h] = left[s][grp->table_[static_cast<std::size_t>(p) * n + h]];
    }
  }
  for (const auto& g : gens) grp->generators_.push_back(grp->index_.at(g));
  grp->finish();
  if (!grp->spot_check(64)) throw std::logic_error("closure: table disagrees with element arithmetic");
  return grp;
}

std::shared_ptr<FiniteGroup> FiniteGroup::from_elements(std::string name, std::vector<GroupElem> elements) {
  if (elements.empty()) throw std::invalid_argument("from_elements: empty list");
  auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  grp->name_ = std::move(name);
  grp->elements_ = std::move(elements);
  int n = static_cast<int>(grp->elements_.size());
  grp->n_ = n;
  for (int i = 0; i < n; ++i) {
    if (!grp->index_.emplace(grp->elements_[i], i).second) {
      throw std::invalid_argument("from_elements: duplicate element");
    }
  }
  grp->table_.assign(static_cast<std::size_t>(n) * n, 0);
  grp->identity_ = -1;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int c = grp->index_of(elem_mul(grp->elements_[a], grp->elements_[b]));
      if (c < 0) throw std::invalid_argument("from_elements: list is not closed");
      grp->table_[static_cast<std::size_t>(a) * n + b] = c;
    }
  }
  for (int a = 0; a < n && grp->identity_ < 0; ++a) {
    if (grp->table_[static_cast<std::size_t>(a) * n + a] == a) grp->identity_ = a;
  }
  // Greedy generating set: add elements until they generate everything.
  std::vector<int> gens, span = {grp->identity_};
  for (int a = 0; a < n && static_cast<int>(span.size()) < n; ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = grp->subgroup_of(gens);
  }
  grp->generators_ = gens;
  grp->finish();
  return grp;
}

void FiniteGroup::finish() {
  inv_.assign(static_cast<std::size_t>(n_), -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == identity_) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0) throw std::logic_error("group element without inverse");
  }
}

int FiniteGroup::pow(int a, long long e) const {
  int base = e < 0 ? inv(a) : a;
  unsigned long long m = static_cast<unsigned long long>(e < 0 ? -e : e);
  int r = identity_;
  while (m) {
    if (m & 1) r = mul(r, base);
    base = mul(base, base);
    m >>= 1;
  }
  return r;
}

int FiniteGroup::elem_order(int a) const {
  int o = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++o;
  return o;
}

std::vector<int> FiniteGroup::subgroup_of(const std::vector<int>& gens) const {
  std::vector<char> in(static_cast<std::size_t>(n_), 0);
  std::vector<int> out = {identity_};
  in[identity_] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int s : gens) {
      int y = mul(s, out[i]);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> z;
  for (int a = 0; a < n_; ++a) {
    bool central = true;
    for (int b = 0; b < n_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<int> FiniteGroup::order_spectrum() const {
  std::vector<int> s;
  s.reserve(static_cast<std::size_t>(n_));
  for (int a = 0; a < n_; ++a) s.push_back(elem_order(a));
  std::sort(s.begin(), s.end());
  return s;
}

bool FiniteGroup::is_latin_square() const {
  for (int a = 0; a < n_; ++a) {
    std::vector<char> row(static_cast<std::size_t>(n_), 0), col(static_cast<std::size_t>(n_), 0);
    for (int b = 0; b < n_; ++b) {
      int r = mul(a, b), c = mul(b, a);
      if (r < 0 || r >= n_ || c < 0 || c >= n_ || row[r] || col[c]) return false;
      row[r] = col[c] = 1;
    }
  }
  return true;
}

bool FiniteGroup::spot_check(int checks, unsigned seed) const {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, n_ - 1);
  for (int t = 0; t < checks; ++t) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (!(elem_mul(elements_[a], elements_[b]) == elements_[mul(a, b)])) return false;
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

std::shared_ptr<FiniteGroup> FiniteGroup::subgroup_group(std::string name, const std::vector<int>& ordered) const {
  std::vector<int> sorted = ordered;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || !is_subgroup(*this, sorted)) {
    throw std::invalid_argument("subgroup_group: not a subgroup");
  }
  auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  grp->name_ = std::move(name);
  int k = static_cast<int>(ordered.size());
  grp->n_ = k;
  std::vector<int> local(static_cast<std::size_t>(n_), -1);
  for (int l = 0; l < k; ++l) {
    local[ordered[l]] = l;
    grp->elements_.push_back(elements_[ordered[l]]);
    grp->index_.emplace(elements_[ordered[l]], l);
  }
  grp->table_.resize(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) grp->table_[static_cast<std::size_t>(a) * k + b] = local[mul(ordered[a], ordered[b])];
  }
  grp->identity_ = local[identity_];
  std::vector<int> gens, span = {grp->identity_};
  for (int a = 0; a < k && static_cast<int>(span.size()) < k; ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = grp->subgroup_of(gens);
  }
  grp->generators_ = gens;
  grp->finish();
  return grp;
}

Perm FiniteGroup::left_regular_perm(int h, const std::vector<int>& ordered) const {
  std::vector<int> pos(static_cast<std::size_t>(n_), -1);
  for (std::size_t l = 0; l < ordered.size(); ++l) pos[ordered[l]] = static_cast<int>(l);
  std::vector<int> im(ordered.size());
  for (std::size_t l = 0; l < ordered.size(); ++l) {
    int p = pos[mul(h, ordered[l])];
    if (p < 0) throw std::invalid_argument("left_regular_perm: set not closed under h");
    im[l] = p;
  }
  return Perm(std::move(im));
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& set) {
  if (set.empty()) return false;
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (int x : set) in[x] = 1;
  for (int a : set) {
    for (int b : set) {
      if (!in[g.mul(a, g.inv(b))]) return false;
    }
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const std::vector<int>& subgroup) {
  if (!is_subgroup(g, subgroup)) return false;
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (int x : subgroup) in[x] = 1;
  for (int a = 0; a < g.order(); ++a) {
    for (int h : subgroup) {
      if (!in[g.mul(g.mul(a, h), g.inv(a))]) return false;
    }
  }
  return true;
}

Quotient quotient(const GroupPtr& g, const std::vector<int>& normal_subgroup) {
  if (!is_normal(*g, normal_subgroup)) throw std::invalid_argument("quotient: subgroup is not normal");
  Quotient q;
  std::vector<int> coset_of(static_cast<std::size_t>(g->order()), -1);
  for (int a = 0; a < g->order(); ++a) {
    if (coset_of[a] >= 0) continue;
    std::vector<int> row;
    for (int h : normal_subgroup) {
      int x = g->mul(a, h);
      coset_of[x] = static_cast<int>(q.cosets.size());
      row.push_back(x);
    }
    q.cosets.push_back(std::move(row));
  }
  int m = static_cast<int>(q.cosets.size());
  auto action = [&](int a) {
    std::vector<int> im(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) im[c] = coset_of[g->mul(a, q.cosets[c][0])];
    return Perm(std::move(im));
  };
  std::vector<GroupElem> gens;
  for (int s : g->generators()) gens.emplace_back(action(s));
  if (gens.empty()) gens.emplace_back(Perm::identity(m));
  auto grp = FiniteGroup::closure(g->name() + "/N", gens);
  q.proj.resize(static_cast<std::size_t>(g->order()));
  for (int a = 0; a < g->order(); ++a) q.proj[a] = grp->index_of(GroupElem(action(a)));
  q.group = grp;
  return q;
}

GroupPtr symmetric_group(int n) {
  if (n < 1) throw std::invalid_argument("symmetric_group: n >= 1");
  // Shared instances, so wreath elements over Sigma_b compare equal across embeddings.
  static std::mutex mu;
  static std::map<int, GroupPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<GroupElem> gens;
  if (n == 1) {
    gens.emplace_back(Perm::identity(1));
  } else {
    std::vector<int> swap(static_cast<std::size_t>(n)), cyc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      swap[i] = i;
      cyc[i] = (i + 1) % n;
    }
    std::swap(swap[0], swap[1]);
    gens.emplace_back(Perm(swap));
    if (n > 2) gens.emplace_back(Perm(cyc));
  }
  GroupPtr g = FiniteGroup::closure("Sym" + std::to_string(n), gens);
  cache[n] = g;
  return g;
}

GroupPtr perm_group(std::string name, const std::vector<Perm>& gens) {
  std::vector<GroupElem> g(gens.begin(), gens.end());
  return FiniteGroup::closure(std::move(name), g);
}

}  // namespace bgw
