#include "bgw/cosets.hpp"
#include "bgw/group.hpp"
#include "bgw/structure.hpp"

#include "doctest.h"

#include <algorithm>

using namespace bgw;

namespace {

GroupPtr quat_group(const std::string& name, const std::vector<Quaternion>& gens) {
  std::vector<GroupElem> g(gens.begin(), gens.end());
  return FiniteGroup::closure(name, g);
}

int idx(const GroupPtr& g, const Quaternion& q) {
  int i = g->index_of(GroupElem(q));
  REQUIRE(i >= 0);
  return i;
}

GroupPtr dic_group(int n) {
  return FiniteGroup::closure("Dic" + std::to_string(n), {GroupElem(DicWord::rho(n)), GroupElem(DicWord::x(n))});
}

}  // namespace

TEST_CASE("closure orders") {
  auto q8 = quat_group("Q8", {quat::i(), quat::j()});
  CHECK(q8->order() == 8);
  auto bt = quat_group("BT", {quat::a(), quat::b()});
  CHECK(bt->order() == 24);
  auto bo = quat_group("BO", {quat::a(), quat::f()});
  CHECK(bo->order() == 48);
  auto bi = quat_group("BI", {quat::a(), quat::t()});
  CHECK(bi->order() == 120);
  auto triv = FiniteGroup::closure("1", {GroupElem(quat::one())});
  CHECK(triv->order() == 1);
  for (int n = 2; n <= 8; ++n) CHECK(dic_group(n)->order() == 4 * n);
  for (const auto& g : {q8, bt, bo, bi}) {
    CHECK(g->is_latin_square());
    CHECK(g->spot_check(500, 3));
    for (int a = 0; a < g->order(); ++a) CHECK(g->mul(a, g->inv(a)) == g->identity());
  }
  // binary icosahedral: t has order 10 and a^3 = t^5 = -1
  int t = idx(bi, quat::t()), a = idx(bi, quat::a());
  CHECK(bi->elem_order(t) == 10);
  CHECK(bi->pow(a, 3) == bi->pow(t, 5));
  CHECK(bi->pow(a, 3) == idx(bi, -quat::one()));
}

TEST_CASE("closure errors") {
  CHECK_THROWS_AS(FiniteGroup::closure("mixed", {GroupElem(quat::i()), GroupElem(Perm::identity(2))}),
                  std::invalid_argument);
  std::vector<GroupElem> gens = {GroupElem(cycles_parse("(01)", 5)), GroupElem(cycles_parse("(01234)", 5))};
  CHECK_THROWS_AS(FiniteGroup::closure("S5", gens, 100), std::length_error);
  CHECK(FiniteGroup::closure("S5", gens, 120)->order() == 120);
  // Sym(8) has 40320 elements, past the default cap.
  std::vector<GroupElem> big = {GroupElem(cycles_parse("(01)", 8)), GroupElem(cycles_parse("(01234567)", 8))};
  CHECK_THROWS_AS(FiniteGroup::closure("S8", big), std::length_error);
}

TEST_CASE("dicyclic words agree with quaternions") {
  for (int n : {2, 3, 4, 6}) {
    auto dic = dic_group(n);
    auto phi = [&](const DicWord& w) { return q_pow(u_n(n, 1), w.k) * q_pow(quat::j(), w.eps); };
    for (const auto& x : dic->elements()) {
      for (const auto& y : dic->elements()) {
        const auto& dx = std::get<DicWord>(x);
        const auto& dy = std::get<DicWord>(y);
        CHECK(phi(dic_mul(dx, dy)) == phi(dx) * phi(dy));
      }
    }
  }
  int n = 5;
  auto dic = dic_group(n);
  auto phi5 = [&](const DicWord& w) {
    return q_pow(ext_u_n(n, 1), w.k) * q_pow(to_ext(quat::j()), w.eps);
  };
  std::vector<ExtQuaternion> images;
  for (const auto& x : dic->elements()) {
    const auto& dx = std::get<DicWord>(x);
    images.push_back(phi5(dx));
    for (const auto& y : dic->elements()) {
      const auto& dy = std::get<DicWord>(y);
      CHECK(phi5(dic_mul(dx, dy)) == phi5(dx) * phi5(dy));
    }
  }
  // injective
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) CHECK(!(images[i] == images[j]));
  }
}

TEST_CASE("cosets and coset action") {
  auto q8 = quat_group("Q8", {quat::i(), quat::j()});
  std::vector<int> pm = {idx(q8, -quat::one()), idx(q8, quat::one())};
  auto c = left_cosets(q8, pm, {idx(q8, quat::one()), idx(q8, quat::j()), idx(q8, quat::i()), idx(q8, quat::k())});
  CHECK(c.count() == 4);
  CHECK(c.cosets[1] == std::vector<int>{idx(q8, -quat::j()), idx(q8, quat::j())});
  for (int g = 0; g < q8->order(); ++g) {
    for (int h = 0; h < q8->order(); ++h) {
      CHECK(coset_action(c, q8->mul(g, h)) == coset_action(c, g) * coset_action(c, h));
    }
  }
  CHECK(coset_action(c, q8->identity()).is_identity());
  auto whole = left_cosets(q8, q8->subgroup_of(q8->generators()));
  CHECK(whole.count() == 1);
  CHECK_THROWS(left_cosets(q8, pm, {idx(q8, quat::one()), idx(q8, -quat::one()), idx(q8, quat::i()), idx(q8, quat::k())}));
  CHECK_THROWS(left_cosets(q8, {idx(q8, quat::one()), idx(q8, quat::i())}));
  // rotation bracket of the identity
  std::vector<int> s = {idx(q8, -quat::one()), idx(q8, -quat::j()), idx(q8, quat::one()), idx(q8, quat::j())};
  auto cs = left_cosets(q8, s);
  CHECK(rotation_bracket(cs, q8->identity(), 1) == Bracket{0, 1});
  // j on the subgroup itself advances the ordering by one
  CHECK(rotation_bracket(cs, idx(q8, quat::j()), 0) == Bracket{1, 0});
}

TEST_CASE("block systems") {
  auto q8 = quat_group("Q8", {quat::i(), quat::j()});
  std::vector<Perm> reg;
  for (int g : q8->generators()) {
    std::vector<int> all(static_cast<std::size_t>(q8->order()));
    for (int x = 0; x < q8->order(); ++x) all[x] = x;
    reg.push_back(q8->left_regular_perm(g, all));
  }
  auto systems = find_block_systems(reg, 8);
  int m1 = idx(q8, -quat::one());
  bool antipodal = false;
  for (const auto& sys : systems) {
    if (sys.block_size() != 2) continue;
    bool ok = true;
    for (const auto& b : sys.blocks) ok = ok && q8->mul(m1, b[0]) == b[1];
    antipodal = antipodal || ok;
  }
  CHECK(antipodal);
  // regular action: one system per subgroup; Q8 has 6 subgroups.
  CHECK(systems.size() == 6);
  for (int n = 3; n <= 6; ++n) {
    std::vector<Perm> sym = {cycles_parse("(0,1)", n), Perm([&] {
                               std::vector<int> v(static_cast<std::size_t>(n));
                               for (int i = 0; i < n; ++i) v[i] = (i + 1) % n;
                               return v;
                             }())};
    auto s = find_block_systems(sym, n);
    CHECK(s.size() == 2);
    for (const auto& b : s) CHECK(b.trivial());
  }
  CHECK_THROWS(find_block_systems({cycles_parse("(0,1)", 4)}, 4));
}

TEST_CASE("quotients and normality") {
  auto sl = enumerate_linear_groups(3, DetCondition::det_one);
  CHECK(sl->order() == 24);
  auto gl = enumerate_linear_groups(3, DetCondition::det_nonzero);
  CHECK(gl->order() == 48);
  auto sl5 = enumerate_linear_groups(5, DetCondition::det_one);
  CHECK(sl5->order() == 120);
  CHECK_THROWS(enumerate_linear_groups(7, DetCondition::det_one));
  int minus = sl->index_of(GroupElem(ModMatrix::make(3, -1, 0, 0, -1)));
  std::vector<int> pm = {sl->identity(), minus};
  CHECK(is_normal(*sl, pm));
  auto q = quotient(sl, pm);
  CHECK(q.group->order() == 12);
  auto a4 = perm_group("A4", {cycles_parse("(0,1,2)", 4), cycles_parse("(0,1)(2,3)", 4)});
  CHECK(isomorphic(*q.group, *a4).has_value());
  auto whole = sl->subgroup_of(sl->generators());
  CHECK(quotient(sl, whole).group->order() == 1);
  auto bt = quat_group("BT", {quat::a(), quat::b()});
  auto q8 = bt->subgroup_of({idx(bt, quat::i()), idx(bt, quat::j())});
  auto c3 = quotient(bt, q8);
  CHECK(c3.group->order() == 3);
  CHECK(isomorphic(*c3.group, *perm_group("C3", {cycles_parse("(0,1,2)", 3)})).has_value());
  // homomorphism property of the projection
  for (int a = 0; a < bt->order(); ++a) {
    for (int b = 0; b < bt->order(); ++b) CHECK(c3.proj[bt->mul(a, b)] == c3.group->mul(c3.proj[a], c3.proj[b]));
  }
  std::vector<int> not_normal = sl->subgroup_of({sl->index_of(GroupElem(ModMatrix::make(3, 1, 1, 0, 1)))});
  CHECK(!is_normal(*sl, not_normal));
  CHECK_THROWS(quotient(sl, not_normal));
}

TEST_CASE("isomorphism testing") {
  auto bt = quat_group("BT", {quat::a(), quat::b()});
  auto sl = enumerate_linear_groups(3, DetCondition::det_one);
  auto r = isomorphism_search(*bt, *sl);
  REQUIRE(r.map.has_value());
  CHECK(check_isomorphism(*bt, *sl, *r.map));
  auto bo = quat_group("BO", {quat::a(), quat::f()});
  auto gl = enumerate_linear_groups(3, DetCondition::det_nonzero);
  auto r2 = isomorphism_search(*gl, *bo);
  CHECK(!r2.map.has_value());
  CHECK(!r2.reason.empty());
  auto self = isomorphic(*bo, *bo);
  REQUIRE(self.has_value());
  CHECK(check_isomorphism(*bo, *bo, *self));
  auto q8 = quat_group("Q8", {quat::i(), quat::j()});
  auto dic2 = dic_group(2);
  CHECK(isomorphic(*q8, *dic2).has_value());
  // D4 and Q8 share order and center size but differ in spectrum
  auto d4 = perm_group("D4", {cycles_parse("(0,1,2,3)", 4), cycles_parse("(0,2)", 4)});
  CHECK(!isomorphic(*q8, *d4).has_value());
  // Z4 x Z2 vs Q8: abelian vs not
  auto z4z2 = perm_group("Z4xZ2", {cycles_parse("(0,1,2,3)", 6), cycles_parse("(4,5)", 6)});
  CHECK(!isomorphic(*q8, *z4z2).has_value());
  auto bi = quat_group("BI", {quat::a(), quat::t()});
  auto sl5 = enumerate_linear_groups(5, DetCondition::det_one);
  auto r3 = isomorphism_search(*bi, *sl5);
  REQUIRE(r3.map.has_value());
  CHECK(check_isomorphism(*bi, *sl5, *r3.map));
}

TEST_CASE("semidirect witnesses") {
  auto bt = quat_group("BT", {quat::a(), quat::b()});
  auto q8 = bt->subgroup_of({idx(bt, quat::i()), idx(bt, quat::j())});
  auto k = bt->subgroup_of({bt->pow(idx(bt, quat::a()), 2)});
  CHECK(k.size() == 3);
  CHECK(semidirect_witness(*bt, q8, k));
  auto all = bt->subgroup_of(bt->generators());
  CHECK(semidirect_witness(*bt, all, {bt->identity()}));
  // Q8 has no nontrivial splitting: every nontrivial subgroup contains -1.
  auto qq = quat_group("Q8", {quat::i(), quat::j()});
  std::vector<std::vector<int>> subs;
  for (int a = 0; a < qq->order(); ++a) {
    for (int b = 0; b < qq->order(); ++b) {
      auto s = qq->subgroup_of({a, b});
      if (std::find(subs.begin(), subs.end(), s) == subs.end()) subs.push_back(s);
    }
  }
  CHECK(subs.size() == 6);
  for (const auto& n : subs) {
    for (const auto& kk : subs) {
      if (n.size() == 1 || kk.size() == 1 || n.size() == 8 || kk.size() == 8) continue;
      CHECK(!semidirect_witness(*qq, n, kk));
    }
  }
}
