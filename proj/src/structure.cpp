#include "bgw/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace bgw {

std::vector<int> derived_subgroup(const FiniteGroup& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> comms;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      int c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  }
  return g.subgroup_of(comms);
}

int abelianization_order(const FiniteGroup& g) {
  return g.order() / static_cast<int>(derived_subgroup(g).size());
}

std::vector<int> small_generating_set(const FiniteGroup& g) {
  int n = g.order();
  if (n == 1) return {};
  std::vector<int> orders(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) orders[a] = g.elem_order(a);
  // Single generator.
  for (int a = 0; a < n; ++a) {
    if (orders[a] == n) return {a};
  }
  std::vector<int> by_order(static_cast<std::size_t>(n));
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) { return orders[a] > orders[b]; });
  // Pairs, preferring high orders.
  if (n <= 720) {
    for (int a : by_order) {
      for (int b : by_order) {
        if (b <= a && orders[b] == orders[a]) continue;
        if (static_cast<int>(g.subgroup_of({a, b}).size()) == n) return {a, b};
      }
    }
  }
  std::vector<int> gens, span = {g.identity()};
  for (int a : by_order) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = g.subgroup_of(gens);
    if (static_cast<int>(span.size()) == n) break;
  }
  return gens;
}

bool check_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2, const std::vector<int>& map) {
  int n = g1.order();
  if (g2.order() != n || static_cast<int>(map.size()) != n) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int x : map) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (map[g1.mul(a, b)] != g2.mul(map[a], map[b])) return false;
    }
  }
  return true;
}

IsoResult isomorphism_search(const FiniteGroup& g1, const FiniteGroup& g2) {
  IsoResult res;
  int n = g1.order();
  if (g2.order() != n) {
    res.reason = "orders differ (" + std::to_string(n) + " vs " + std::to_string(g2.order()) + ")";
    return res;
  }
  if (g1.order_spectrum() != g2.order_spectrum()) {
    res.reason = "element-order spectra differ";
    return res;
  }
  if (g1.center().size() != g2.center().size()) {
    res.reason = "center orders differ (" + std::to_string(g1.center().size()) + " vs " +
                 std::to_string(g2.center().size()) + ")";
    return res;
  }
  if (abelianization_order(g1) != abelianization_order(g2)) {
    res.reason = "abelianization orders differ";
    return res;
  }
  std::vector<int> gens = small_generating_set(g1);
  if (gens.empty()) {
    res.map = std::vector<int>{g2.identity()};
    res.reason = "trivial groups";
    return res;
  }
  std::vector<std::vector<int>> targets(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s) {
    int o = g1.elem_order(gens[s]);
    for (int x = 0; x < n; ++x) {
      if (g2.elem_order(x) == o) targets[s].push_back(x);
    }
  }
  std::vector<int> choice(gens.size());
  std::vector<int> map(static_cast<std::size_t>(n)), used(static_cast<std::size_t>(n));
  std::vector<int> queue;
  // Extends generator images along the Cayley graph; fails on any clash.
  auto extend = [&]() -> bool {
    std::fill(map.begin(), map.end(), -1);
    std::fill(used.begin(), used.end(), 0);
    map[g1.identity()] = g2.identity();
    used[g2.identity()] = 1;
    queue.assign(1, g1.identity());
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int x = queue[q];
      for (std::size_t s = 0; s < gens.size(); ++s) {
        int y = g1.mul(gens[s], x);
        int img = g2.mul(choice[s], map[x]);
        if (map[y] < 0) {
          if (used[img]) return false;
          map[y] = img;
          used[img] = 1;
          queue.push_back(y);
        } else if (map[y] != img) {
          return false;
        }
      }
    }
    return static_cast<int>(queue.size()) == n;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t s) -> bool {
    if (s == gens.size()) {
      ++res.candidates_tried;
      return extend();
    }
    for (int t : targets[s]) {
      choice[s] = t;
      if (rec(s + 1)) return true;
    }
    return false;
  };
  if (rec(0)) {
    res.map = map;
    res.reason = "explicit isomorphism on " + std::to_string(gens.size()) + " generators";
  } else {
    res.reason = "exhaustive search over " + std::to_string(res.candidates_tried) +
                 " generator assignments found no isomorphism";
  }
  return res;
}

std::optional<std::vector<int>> isomorphic(const FiniteGroup& g1, const FiniteGroup& g2) {
  return isomorphism_search(g1, g2).map;
}

bool semidirect_witness(const FiniteGroup& g, const std::vector<int>& n, const std::vector<int>& k) {
  if (!is_subgroup(g, n) || !is_subgroup(g, k) || !is_normal(g, n)) return false;
  for (int x : n) {
    if (x != g.identity() && std::find(k.begin(), k.end(), x) != k.end()) return false;
  }
  return n.size() * k.size() == static_cast<std::size_t>(g.order());
}

}  // namespace bgw
