#include "bgw/verify.hpp"

#include "bgw/modmat.hpp"
#include "verify_internal.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace bgw {

namespace detail {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return nlohmann::json::parse(in);
}

nlohmann::json load_tables(const std::string& path) { return load_json(path).at("tables"); }

}  // namespace detail

namespace {

using namespace detail;
using nlohmann::json;

class Replay {
 public:
  explicit Replay(TableResult& res) : res_(res) {}

  void cell(bool ok, const std::string& what) {
    ++res_.cells;
    if (!ok) res_.mismatches.push_back(what);
  }
  // An erratum cell passes when the computed value is the correction and not the printed value.
  void erratum(bool matches_corrected, bool matches_printed, const std::string& what) {
    ++res_.cells;
    if (matches_corrected && !matches_printed) {
      ++res_.errata;
    } else {
      res_.mismatches.push_back(what + (matches_printed ? " (printed value is right after all)" : ""));
    }
  }

 private:
  TableResult& res_;
};

std::vector<std::string> strings(const json& j) {
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(x.get<std::string>());
  return out;
}

// Flattens nested arrays of strings.
void flatten(const json& j, std::vector<std::string>& out) {
  if (j.is_string()) {
    out.push_back(j.get<std::string>());
    return;
  }
  for (const auto& x : j) flatten(x, out);
}

std::optional<Perm> try_parse(const std::string& s, int degree, int base) {
  try {
    return cycles_parse(s, degree, base);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

bool same_perm(const Perm& p, const std::string& printed, int base) {
  auto q = try_parse(printed, p.degree(), base);
  return q && *q == p;
}

ModMatrix matrix_of(const json& m, int p) {
  return ModMatrix::make(p, m[0][0].get<int>(), m[0][1].get<int>(), m[1][0].get<int>(), m[1][1].get<int>());
}

int wanted_det(int det, int p) { return ((det % p) + p) % p; }

void tuple_products(const json& t, Replay& r) {
  const auto& c = catalog_group(t["group"]);
  const auto& g = *c.group;
  for (const auto& row : t["rows"]) {
    std::string gname = row["g"];
    int x = ev(c, gname);
    std::vector<std::string> src, want;
    if (row.contains("source")) {
      flatten(t["named_tuples"][row["source"].get<std::string>()], src);
    } else {
      flatten(t["tuple"], src);
    }
    flatten(row["expected"], want);
    if (src.size() != want.size()) throw std::invalid_argument("tuple length mismatch");
    for (std::size_t l = 0; l < src.size(); ++l) {
      int got = g.mul(x, ev(c, src[l]));
      r.cell(got == ev(c, want[l]), gname + " * " + src[l] + " = " + catalog_repr(c, got) + ", table has " + want[l]);
    }
  }
}

void block_tops(const json& t, Replay& r) {
  const auto& c = catalog_group(t["group"]);
  auto pts = evs(c, strings(t["points"]));
  int base = t.value("base", 0);
  int blocks = static_cast<int>(pts.size()) / 2;
  for (const auto& row : t["rows"]) {
    Perm p = c.group->left_regular_perm(ev(c, row["g"]), pts);
    std::vector<int> im(static_cast<std::size_t>(blocks));
    for (int b = 0; b < blocks; ++b) im[b] = p(2 * b) / 2;
    Perm top(im);
    r.cell(same_perm(top, row["top"], base), "top of " + row["g"].get<std::string>() + " is " + cycles_print(top, base));
  }
}

void dic_identities(const json& t, Replay& r) {
  auto subst = [](std::string s, int n, int l) {
    auto rep = [&](const std::string& from, const std::string& to) {
      for (std::size_t at; (at = s.find(from)) != std::string::npos;) s.replace(at, from.size(), to);
    };
    rep("(n-l)", std::to_string(n - l));
    rep("(-l)", std::to_string(-l));
    if (!s.empty() && s[0] == '-') s = "-1*" + s.substr(1);
    return s;
  };
  for (int n = t["n_min"]; n <= t["n_max"].get<int>(); ++n) {
    const auto& c = catalog_group("dic" + std::to_string(n));
    const auto& g = *c.group;
    auto s = evs(c, strings(t["subgroup"]));
    int rho = ev(c, "rho");
    int x = ev(c, "x");
    auto row = [&](int l) {
      std::vector<int> out;
      for (int h : s) out.push_back(g.mul(g.pow(rho, l), h));
      return out;
    };
    std::string tag = "n=" + std::to_string(n);
    for (int l = 0; l < n; ++l) {
      auto src = row(l);
      auto f = strings(t["x_row"]["formula"]);
      for (std::size_t p = 0; p < src.size(); ++p) {
        int got = g.mul(x, src[p]);
        std::string w = subst(f[p], n, l);
        r.cell(got == ev(c, w), tag + " x[" + std::to_string(l) + "] position " + std::to_string(p) + " is " +
                                    catalog_repr(c, got) + ", formula " + w);
      }
    }
    auto x0 = strings(t["x0"]);
    auto r0 = row(0);
    for (std::size_t p = 0; p < r0.size(); ++p) r.cell(g.mul(x, r0[p]) == ev(c, x0[p]), tag + " x[0] position " + std::to_string(p));
    auto last = strings(t["rho_last"]);
    auto rl = row(n - 1);
    for (std::size_t p = 0; p < rl.size(); ++p) {
      r.cell(g.mul(rho, rl[p]) == ev(c, last[p]), tag + " rho[n-1] position " + std::to_string(p));
    }
  }
}

void matrix_perms(const json& t, Replay& r) {
  int p = t["p"];
  int det = wanted_det(t["det"], p);
  auto labels = VectorLabeling::standard_mod3();
  std::set<std::vector<int>> seen;
  auto perm_of = [&](const ModMatrix& m) -> std::optional<Perm> {
    if (m.det() == 0) return std::nullopt;
    return mat_act_perm(m, labels);
  };
  for (const auto& row : t["rows"]) {
    ModMatrix m = matrix_of(row["matrix"], p);
    std::string printed = row["perm"];
    std::string what = to_string(m) + " -> " + printed;
    if (row.contains("erratum") && row["erratum"]["field"] == "perm") {
      auto got = perm_of(m);
      std::string corr = row["erratum"]["corrected"];
      r.erratum(got && m.det() == det && same_perm(*got, corr, 0), got && same_perm(*got, printed, 0),
                what + ": computed " + (got ? cycles_print(*got) : "none"));
      seen.insert({m.a, m.b, m.c, m.d});
    } else if (row.contains("erratum") && row["erratum"]["field"] == "matrix") {
      ModMatrix fixed = matrix_of(row["erratum"]["corrected"], p);
      auto want = perm_of(fixed);
      auto got = perm_of(m);
      bool printed_ok = got && m.det() == det && same_perm(*got, printed, 0);
      r.erratum(want && fixed.det() == det && same_perm(*want, printed, 0), printed_ok,
                what + ": corrected matrix " + to_string(fixed));
      seen.insert({fixed.a, fixed.b, fixed.c, fixed.d});
    } else {
      auto got = perm_of(m);
      r.cell(got && m.det() == det && same_perm(*got, printed, 0), what + ": computed " + (got ? cycles_print(*got) : "singular"));
      seen.insert({m.a, m.b, m.c, m.d});
    }
  }
  if (t.value("complete", false)) {
    int total = 0;
    const auto& gl = catalog_group(p == 3 ? "gl2-3" : "sl2-5");
    for (const auto& e : gl.group->elements()) total += std::get<ModMatrix>(e).det() == det;
    r.cell(static_cast<int>(seen.size()) == total && static_cast<int>(t["rows"].size()) == total,
           "listing covers all " + std::to_string(total) + " matrices");
  }
}

void psl_quotient(const json& t, Replay& r) {
  const auto& sl = catalog_group("sl2-3");
  auto labels = VectorLabeling::standard_mod3();
  std::set<Perm> all;
  for (const auto& e : sl.group->elements()) all.insert(mat_act_perm(std::get<ModMatrix>(e), labels));
  std::set<Perm> listed;
  for (const auto& row : t["rows"]) {
    Perm img = cycles_parse(row["image"].get<std::string>(), 4);
    for (const auto& pre : row["preimages"]) {
      std::string s = pre;
      auto p = try_parse(s, 8, 0);
      bool ok = p && all.count(*p);
      if (ok) {
        listed.insert(*p);
        std::vector<int> im(4);
        for (int b = 0; b < 4; ++b) im[b] = (*p)(b) % 4;
        ok = Perm(im) == img;
      }
      r.cell(ok, s + " maps to " + row["image"].get<std::string>());
    }
  }
  r.cell(listed == all, "the preimages are exactly the 24 elements");
}

int vertex_index(const std::vector<std::vector<int>>& verts, const std::vector<int>& v) {
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] == v) return static_cast<int>(i);
  }
  return -1;
}

std::optional<Perm> vertex_perm(const std::vector<std::vector<int>>& verts, const std::function<std::vector<int>(const std::vector<int>&)>& act) {
  std::vector<int> im;
  for (const auto& v : verts) {
    int k = vertex_index(verts, act(v));
    if (k < 0) return std::nullopt;
    im.push_back(k);
  }
  std::vector<int> sorted = im;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i)) return std::nullopt;
  }
  return Perm(im);
}

void tetrahedron(const json& t, Replay& r) {
  auto verts = t["vertices"].get<std::vector<std::vector<int>>>();
  std::set<Perm> covered;
  for (const auto& row : t["rows"]) {
    auto m = row["matrix"].get<std::vector<std::vector<int>>>();
    std::string printed = row["perm"];
    auto act = [](const std::vector<std::vector<int>>& mm) {
      return [mm](const std::vector<int>& v) {
        std::vector<int> out(3, 0);
        for (int i = 0; i < 3; ++i) {
          for (int k = 0; k < 3; ++k) out[i] += mm[i][k] * v[k];
        }
        return out;
      };
    };
    auto p = vertex_perm(verts, act(m));
    bool det_one = signed_from_matrix(m).det() == 1;
    r.cell(det_one && p && same_perm(*p, printed, 0), "matrix for " + printed);
    if (p) covered.insert(*p);
    if (row.value("plus_minus", false)) {
      std::vector<std::vector<int>> tr(3, std::vector<int>(3));
      for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) tr[i][k] = m[k][i];
      }
      auto q = vertex_perm(verts, act(tr));
      auto want = try_parse(printed, 4, 0);
      r.cell(q && want && *q == want->inverse(), "inverse matrix for " + printed + "^-1");
      if (q) covered.insert(*q);
    }
  }
  r.cell(covered.size() == 12, "the table covers the twelve elements of A4");
}

void coset_listing(const json& t, Replay& r) {
  const auto& c = catalog_group(t["group"]);
  const auto& g = *c.group;
  auto h = evs(c, strings(t["subgroup"]));
  std::set<int> all;
  for (const auto& row : t["rows"]) {
    int rep = ev(c, row["rep"]);
    auto elems = strings(row["elements"]);
    int err_pos = -1;
    if (row.contains("erratum")) err_pos = row["erratum"]["position"];
    for (std::size_t l = 0; l < h.size(); ++l) {
      int got = g.mul(rep, h[l]);
      all.insert(got);
      std::string where = row["label"].get<std::string>() + " position " + std::to_string(l);
      if (static_cast<int>(l) == err_pos) {
        auto printed = std::optional<int>();
        try {
          printed = ev(c, elems[l]);
        } catch (const std::invalid_argument&) {
        }
        r.erratum(got == ev(c, row["erratum"]["corrected"]), printed && *printed == got,
                  where + ": computed " + catalog_repr(c, got));
      } else {
        r.cell(got == ev(c, elems[l]), where + ": computed " + catalog_repr(c, got) + ", table has " + elems[l]);
      }
    }
  }
  r.cell(static_cast<int>(all.size()) == g.order(), "the rows partition the group");
}

void coset_action_cycles(const json& t, Replay& r) {
  const auto& c = catalog_group(t["group"]);
  std::vector<int> h = t.contains("subgroup") ? evs(c, strings(t["subgroup"]))
                                              : c.group->subgroup_of(evs(c, strings(t["subgroup_generators"])));
  int base = t.value("base", 0);
  std::vector<int> reps, labels;
  for (const auto& co : t["cosets"]) {
    reps.push_back(ev(c, co["rep"]));
    labels.push_back(co["label"].get<int>() - base);
  }
  auto dec = left_cosets(c.group, h, reps);
  int deg = dec.count();
  for (const auto& row : t["rows"]) {
    Perm eta = coset_action(dec, ev(c, row["g"]));
    std::vector<int> im(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) im[labels[i]] = labels[eta(i)];
    Perm p(im);
    std::string printed = row["cycles"];
    std::string what = row["g"].get<std::string>() + " acts as " + cycles_print(p, base) + ", table has " + printed;
    if (row.contains("erratum")) {
      r.erratum(same_perm(p, row["erratum"]["corrected"], base), same_perm(p, printed, base), what);
    } else {
      r.cell(same_perm(p, printed, base), what);
    }
  }
}

void brackets(const json& t, Replay& r) {
  const auto& c = catalog_group(t["group"]);
  auto h = evs(c, strings(t["subgroup"]));
  std::vector<std::string> names;
  std::vector<int> reps;
  for (const auto& [name, rep] : t["cosets"].items()) {
    names.push_back(name);
    reps.push_back(ev(c, rep.get<std::string>()));
  }
  auto dec = left_cosets(c.group, h, reps);
  auto index = [&](const std::string& n) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw std::invalid_argument("unknown coset " + n);
    return static_cast<int>(it - names.begin());
  };
  for (const auto& row : t["rows"]) {
    std::string gname = row["g"];
    std::string src = row["source"];
    std::string tgt = row["target"];
    int m = row["m"];
    int x = ev(c, gname);
    auto bracket = [&](const std::string& s) {
      auto b = rotation_bracket(dec, x, index(s));
      return std::make_pair(b.m, names[b.target]);
    };
    auto got = bracket(src);
    std::string what = gname + "(" + src + ") = [" + std::to_string(got.first) + ", " + got.second + "], table has [" +
                       std::to_string(m) + ", " + tgt + "]";
    if (row.contains("erratum") && row["erratum"]["field"] == "target") {
      std::string corr = row["erratum"]["corrected"];
      r.erratum(got.first == m && got.second == corr, got.first == m && got.second == tgt, what);
    } else if (row.contains("erratum") && row["erratum"]["field"] == "source") {
      auto fixed = bracket(row["erratum"]["corrected"]);
      r.erratum(fixed.first == m && fixed.second == tgt, got.first == m && got.second == tgt, what);
    } else {
      r.cell(got.first == m && got.second == tgt, what);
    }
  }
}

void p_prime(const json& t, Replay& r) {
  const auto& c = catalog_group(t["group"]);
  auto verts = t["vertices"].get<std::vector<std::vector<int>>>();
  for (const auto& row : t["rows"]) {
    std::string gname = row["g"];
    Mat3 m = su2_to_so3(std::get<Quaternion>(c.group->element(ev(c, gname))));
    auto act = [&](const std::vector<int>& v) {
      std::vector<int> out(3, 99);
      for (int i = 0; i < 3; ++i) {
        FieldElem s(0);
        for (int k = 0; k < 3; ++k) s += m(i, k) * FieldElem(v[k]);
        for (int cand : {-1, 1}) {
          if (s == FieldElem(cand)) out[i] = cand;
        }
      }
      return out;
    };
    auto p = vertex_perm(verts, act);
    r.cell(p && same_perm(*p, row["perm"], 0), "p'(" + gname + ") = " + row["perm"].get<std::string>());
  }
}

void equalities(const json& t, Replay& r) {
  const auto& c = catalog_group(t["group"]);
  for (const auto& row : t["rows"]) {
    std::string l = row["lhs"], rr = row["rhs"];
    int a = ev(c, l);
    r.cell(a == ev(c, rr), l + " = " + rr + " (computed " + catalog_repr(c, a) + ")");
  }
}

void h2(const json& t, Replay& r) {
  auto labels = t["labels"].get<std::vector<std::vector<int>>>();
  int base = t.value("base", 0);
  bool row_action = t.value("action", "row") == "row";
  std::set<Perm> seen;
  for (const auto& rw : t["rows"]) {
    auto m = rw["matrix"].get<std::vector<std::vector<int>>>();
    auto p = vertex_perm(labels, [&](const std::vector<int>& v) {
      if (row_action) return std::vector<int>{v[0] * m[0][0] + v[1] * m[1][0], v[0] * m[0][1] + v[1] * m[1][1]};
      return std::vector<int>{m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
    });
    std::string printed = rw["perm"];
    r.cell(p && same_perm(*p, printed, base), "signed matrix for " + printed + (p ? ", computed " + cycles_print(*p, base) : ""));
    if (p) seen.insert(*p);
  }
  r.cell(seen.size() == t["rows"].size(), "the eight permutations are distinct");
}

std::vector<int> word_row(const CatalogGroup& c, const json& words) {
  std::vector<std::string> flat;
  flatten(words, flat);
  return evs(c, flat);
}

void sigma_images(const json& t, Replay& r) {
  const auto& c = catalog_group("sym" + std::to_string(t["n"].get<int>()));
  std::vector<std::vector<int>> rows;
  for (const auto& rw : t["rows_words"]) rows.push_back(word_row(c, rw));
  auto e = kk_embed(cosets_from_rows(c.group, evs(c, strings(t["subgroup"])), rows));
  for (const auto& im : t["images"]) {
    std::string got = to_string(signed_from_z2(e.image(ev(c, im["g"]))));
    std::string want = im["signed"];
    r.cell(got == want, im["g"].get<std::string>() + " -> " + got + ", table has " + want);
  }
}

void sigma_cosets(const json& t, Replay& r) {
  const auto& c = catalog_group("sym" + std::to_string(t["n"].get<int>()));
  const auto& g = *c.group;
  int t_last = ev(c, "t" + std::to_string(t["n"].get<int>() - 1));
  std::vector<std::set<int>> rows;
  for (const auto& rw : t["rows_words"]) {
    for (const auto& pair : rw) {
      int u = ev(c, pair[0]);
      int v = ev(c, pair[1]);
      r.cell(g.mul(u, t_last) == v, "arrow " + pair[0].get<std::string>() + " -- " + pair[1].get<std::string>());
    }
    auto flat = word_row(c, rw);
    rows.emplace_back(flat.begin(), flat.end());
  }
  const auto& h = rows[0];
  std::set<int> all;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    int rep = *rows[k].begin();
    std::set<int> coset;
    for (int x : h) coset.insert(g.mul(rep, x));
    r.cell(coset == rows[k], "row " + std::to_string(k + 1) + " is a left coset of the first row");
    all.insert(rows[k].begin(), rows[k].end());
  }
  r.cell(static_cast<int>(all.size()) == g.order(), "rows partition the group");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    int ti = ev(c, "t" + std::to_string(i));
    std::set<int> img;
    for (int x : rows[i - 1]) img.insert(g.mul(ti, x));
    r.cell(img == rows[i], "t" + std::to_string(i) + "[" + std::to_string(i) + "] = [" + std::to_string(i + 1) + "]");
  }
  if (t.contains("t1_blocks")) {
    // Each coset is an ordered triple of arrows. t1 carries arrow k of [col] onto arrow k' of [row],
    // with the same or the opposite orientation, which gives column k of the block as +-e_{k'}.
    int t1 = ev(c, "t1");
    const auto& rw = t["rows_words"];
    for (const auto& b : t["t1_blocks"]) {
      int col = b["column"].get<int>() - 1;
      int row = b["row"].get<int>() - 1;
      std::string got = "(";
      bool ok = true;
      for (std::size_t k = 0; k < rw[col].size(); ++k) {
        int s = g.mul(t1, ev(c, rw[col][k][0]));
        int e = g.mul(t1, ev(c, rw[col][k][1]));
        std::string entry;
        for (std::size_t q = 0; q < rw[row].size(); ++q) {
          int s2 = ev(c, rw[row][q][0]);
          int e2 = ev(c, rw[row][q][1]);
          if (s == s2 && e == e2) entry = "e" + std::to_string(q + 1);
          if (s == e2 && e == s2) entry = "-e" + std::to_string(q + 1);
        }
        if (entry.empty()) ok = false, entry = "?";
        got += (k ? "," : "") + entry;
      }
      got += ")";
      std::string want = b["signed"];
      r.cell(ok && got == want, "t1 block in column " + std::to_string(col + 1) + ", row " + std::to_string(row + 1) +
                                    " is " + got + ", table has " + want);
    }
  }
}

void perm_words(const json& t, Replay& r) {
  int deg = t["degree"];
  int base = t.value("base", 0);
  for (const auto& row : t["rows"]) {
    Perm ltr = Perm::identity(deg);
    Perm rtl = Perm::identity(deg);
    std::string word;
    for (const auto& w : row["word"]) {
      Perm p = cycles_parse(w.get<std::string>(), deg, base);
      ltr = p * ltr;
      rtl = rtl * p;
      word += w.get<std::string>();
    }
    bool left = row.value("reading", "left-to-right") == "left-to-right";
    const Perm& got = left ? ltr : rtl;
    std::string printed = row["printed"];
    r.cell(same_perm(got, printed, base), word + " read " + (left ? "left-to-right" : "right-to-left") + " is " +
                                              cycles_print(got, base) + ", table has " + printed);
  }
}

const std::map<std::string, std::function<void(const json&, Replay&)>>& handlers() {
  static const std::map<std::string, std::function<void(const json&, Replay&)>> m = {
      {"tuple_products", tuple_products},   {"block_tops", block_tops},     {"dic_identities", dic_identities},
      {"matrix_perms", matrix_perms},       {"psl_quotient", psl_quotient}, {"tetrahedron", tetrahedron},
      {"coset_listing", coset_listing},     {"coset_action_cycles", coset_action_cycles},
      {"brackets", brackets},               {"p_prime", p_prime},           {"equalities", equalities},
      {"h2", h2},                           {"sigma_images", sigma_images}, {"sigma_cosets", sigma_cosets},
      {"perm_words", perm_words}};
  return m;
}

}  // namespace

TableResult detail::replay_table(const json& table, const std::string& file) {
  TableResult res;
  res.id = table.value("id", "?");
  res.file = std::filesystem::path(file).filename().string();
  res.location = table.value("location", "");
  res.kind = table.value("kind", "");
  Replay r(res);
  try {
    auto it = handlers().find(res.kind);
    if (it == handlers().end()) throw std::invalid_argument("unknown table kind '" + res.kind + "'");
    it->second(table, r);
  } catch (const std::exception& ex) {
    res.mismatches.push_back(std::string("replay failed: ") + ex.what());
  }
  return res;
}

std::vector<TableResult> replay_tables(const std::string& dir) {
  std::vector<std::string> files;
  if (!std::filesystem::is_directory(dir)) throw std::invalid_argument("no golden table directory at " + dir);
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path().string());
  }
  if (files.empty()) throw std::invalid_argument("no golden tables in " + dir);
  std::sort(files.begin(), files.end());
  std::vector<TableResult> out;
  for (const auto& f : files) {
    for (const auto& t : load_tables(f)) out.push_back(replay_table(t, f));
  }
  return out;
}

Report verify_tables(const std::string& dir) {
  return timed([&] {
    Report r{"tables", "replay of the transcribed tables"};
    int cells = 0, errata = 0;
    std::vector<TableResult> tables;
    try {
      tables = replay_tables(dir);
    } catch (const std::exception& e) {
      r.check(false, e.what());
    }
    for (const auto& t : tables) {
      r.check(t.ok(), t.file + " / " + t.id + " (" + std::to_string(t.cells) + " cells)");
      for (const auto& m : t.mismatches) r.notes.push_back(t.id + ": " + m);
      r.data["tables"][t.id] = {{"file", t.file}, {"location", t.location}, {"kind", t.kind},
                                {"cells", t.cells}, {"errata", t.errata}, {"mismatches", t.mismatches}};
      cells += t.cells;
      errata += t.errata;
    }
    r.data["cells"] = cells;
    r.data["errata"] = errata;
    r.notes.push_back(std::to_string(cells) + " cells replayed, " + std::to_string(errata) + " confirmed errata");
    return r;
  });
}

}  // namespace bgw
