#include "bgw/named_groups.hpp"

#include "bgw/quaternion.hpp"
#include "bgw/structure.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace bgw {

namespace {

Perm cycle_on(int degree, const std::vector<int>& pts) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) im[i] = i;
  for (std::size_t k = 0; k < pts.size(); ++k) im[pts[k]] = pts[(k + 1) % pts.size()];
  return Perm(std::move(im));
}

std::vector<int> range(int a, int b) {
  std::vector<int> v;
  for (int i = a; i < b; ++i) v.push_back(i);
  return v;
}

}  // namespace

GroupPtr cyclic_group(int n) {
  if (n == 1) return perm_group("Z/1", {Perm::identity(1)});
  return perm_group("Z/" + std::to_string(n), {cycle_on(n, range(0, n))});
}

GroupPtr dihedral_group(int n) {
  std::vector<int> refl(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
  return perm_group("D" + std::to_string(n), {cycle_on(n, range(0, n)), Perm(refl)});
}

GroupPtr dicyclic_word_group(int n) {
  return FiniteGroup::closure("Dic" + std::to_string(n), {GroupElem(DicWord::rho(n)), GroupElem(DicWord::x(n))});
}

GroupPtr alternating_group(int n) {
  std::vector<Perm> gens;
  for (int i = 2; i < n; ++i) gens.push_back(cycle_on(n, {0, 1, i}));
  if (gens.empty()) gens.push_back(Perm::identity(n));
  return perm_group("A" + std::to_string(n), gens);
}

GroupPtr klein_four() {
  return perm_group("K4", {cycles_parse("(0,1)(2,3)", 4), cycles_parse("(0,2)(1,3)", 4)});
}

GroupPtr z3_wr_z2() {
  return perm_group("(Z/3xZ/3):Z/2",
                    {cycles_parse("(0,1,2)", 6), cycles_parse("(3,4,5)", 6), cycles_parse("(0,3)(1,4)(2,5)", 6)});
}

bool is_cyclic(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a) {
    if (g.elem_order(a) == g.order()) return true;
  }
  return false;
}

namespace {

struct Ref {
  std::string name;
  std::function<GroupPtr()> make;
};

const std::vector<Ref>& references() {
  static const std::vector<Ref> refs = {
      {"K4", klein_four},
      {"Z/2xZ/2xZ/2", [] { return perm_group("E8", {cycles_parse("(0,1)", 6), cycles_parse("(2,3)", 6), cycles_parse("(4,5)", 6)}); }},
      {"Z/4xZ/2", [] { return perm_group("Z4xZ2", {cycles_parse("(0,1,2,3)", 6), cycles_parse("(4,5)", 6)}); }},
      {"Q8", [] { return dicyclic_word_group(2); }},
      {"D4", [] { return dihedral_group(4); }},
      {"Sigma3", [] { return symmetric_group(3); }},
      {"A4", [] { return alternating_group(4); }},
      {"Dic3", [] { return dicyclic_word_group(3); }},
      {"D6", [] { return dihedral_group(6); }},
      {"Z/6xZ/2", [] { return perm_group("Z6xZ2", {cycles_parse("(0,1,2,3,4,5)", 8), cycles_parse("(6,7)", 8)}); }},
      {"Dic4", [] { return dicyclic_word_group(4); }},
      {"D8", [] { return dihedral_group(8); }},
      {"Z/3xZ/3", [] { return perm_group("Z3xZ3", {cycles_parse("(0,1,2)", 6), cycles_parse("(3,4,5)", 6)}); }},
      {"(Z/3xZ/3):Z/2", z3_wr_z2},
      {"Dih(Z/3xZ/3)", [] { return perm_group("Dih9", {cycles_parse("(0,1,2)", 6), cycles_parse("(3,4,5)", 6), cycles_parse("(1,2)(4,5)", 6)}); }},
      {"Sigma4", [] { return symmetric_group(4); }},
      {"SL2(Z/3)", [] { return enumerate_linear_groups(3, DetCondition::det_one); }},
      {"Dic5", [] { return dicyclic_word_group(5); }},
      {"Dic6", [] { return dicyclic_word_group(6); }},
      {"GL2(Z/3)", [] { return enumerate_linear_groups(3, DetCondition::det_nonzero); }},
      {"binary octahedral",
       [] { return FiniteGroup::closure("BO", {GroupElem(quat::a()), GroupElem(quat::f())}); }},
      {"A5", [] { return alternating_group(5); }},
      {"Sigma5", [] { return symmetric_group(5); }},
      {"SL2(Z/5)", [] { return enumerate_linear_groups(5, DetCondition::det_one); }},
  };
  return refs;
}

}  // namespace

std::string identify_group(const FiniteGroup& g) {
  if (g.order() == 1) return "1";
  if (is_cyclic(g)) return "Z/" + std::to_string(g.order());
  static std::mutex mu;
  static std::map<std::string, GroupPtr> cache;
  for (const auto& ref : references()) {
    GroupPtr r;
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = cache.find(ref.name);
      if (it == cache.end()) it = cache.emplace(ref.name, ref.make()).first;
      r = it->second;
    }
    if (r->order() != g.order()) continue;
    if (isomorphic(g, *r)) return ref.name;
  }
  return "order-" + std::to_string(g.order()) + " group";
}

}  // namespace bgw
