#include "bgw/catalog.hpp"

#include "bgw/modmat.hpp"
#include "bgw/quaternion.hpp"

#include <cctype>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace bgw {

namespace {

using Builder = std::function<CatalogGroup()>;

int must_index(const GroupPtr& g, const GroupElem& e, const std::string& what) {
  int i = g->index_of(e);
  if (i < 0) throw std::logic_error("catalog: " + what + " is not in " + g->name());
  return i;
}

CatalogGroup quaternion_group(std::string key, std::string title, const std::vector<std::pair<std::string, Quaternion>>& gens,
                              const std::vector<std::pair<std::string, Quaternion>>& extra) {
  CatalogGroup c;
  c.key = std::move(key);
  c.title = std::move(title);
  std::vector<GroupElem> ge;
  for (const auto& [n, q] : gens) ge.emplace_back(q);
  c.group = FiniteGroup::closure(c.title, ge);
  for (const auto& [n, q] : gens) {
    c.names[n] = must_index(c.group, GroupElem(q), n);
    c.generator_names.push_back(n);
  }
  for (const auto& [n, q] : extra) c.names[n] = must_index(c.group, GroupElem(q), n);
  c.names["1"] = must_index(c.group, GroupElem(quat::one()), "1");
  c.names["-1"] = must_index(c.group, GroupElem(-quat::one()), "-1");
  return c;
}

CatalogGroup matrix_group(std::string key, int p, DetCondition cond) {
  CatalogGroup c;
  c.key = std::move(key);
  c.group = enumerate_linear_groups(p, cond);
  c.title = c.group->name();
  c.names["1"] = c.group->identity();
  c.names["-1"] = must_index(c.group, GroupElem(ModMatrix::make(p, -1, 0, 0, -1)), "-I");
  for (int s : c.group->generators()) {
    std::string n = "g" + std::to_string(c.generator_names.size() + 1);
    c.names[n] = s;
    c.generator_names.push_back(n);
  }
  return c;
}

CatalogGroup sym_group(int n) {
  CatalogGroup c;
  c.key = "sym" + std::to_string(n);
  c.title = "Sigma" + std::to_string(n);
  std::vector<GroupElem> gens;
  std::vector<Perm> ts;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) im[x] = x;
    std::swap(im[i], im[i + 1]);
    ts.emplace_back(im);
  }
  c.group = symmetric_group(n);
  c.names["1"] = c.group->identity();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    std::string nm = "t" + std::to_string(i + 1);
    c.names[nm] = must_index(c.group, GroupElem(ts[i]), nm);
    c.generator_names.push_back(nm);
  }
  return c;
}

CatalogGroup dic_group(int n) {
  CatalogGroup c;
  c.key = "dic" + std::to_string(n);
  c.title = "Dic" + std::to_string(n);
  c.group = FiniteGroup::closure(c.title, {GroupElem(DicWord::rho(n)), GroupElem(DicWord::x(n))});
  c.names["rho"] = must_index(c.group, GroupElem(DicWord::rho(n)), "rho");
  c.names["x"] = must_index(c.group, GroupElem(DicWord::x(n)), "x");
  c.names["1"] = c.group->identity();
  c.names["-1"] = must_index(c.group, GroupElem(DicWord::make(n, n, 0)), "rho^n");
  c.generator_names = {"rho", "x"};
  return c;
}

const std::map<std::string, Builder>& builders() {
  using namespace quat;
  static const std::map<std::string, Builder> table = [] {
    std::map<std::string, Builder> m;
    const std::vector<std::pair<std::string, Quaternion>> tet = {{"i", i()}, {"j", j()}, {"k", k()}, {"a", a()},
                                                                 {"b", b()}, {"c", c()}, {"d", d()}};
    m["q8"] = [] { return quaternion_group("q8", "Q8", {{"i", i()}, {"j", j()}}, {{"k", k()}}); };
    m["binary-tetrahedral"] = [tet] {
      return quaternion_group("binary-tetrahedral", "binary tetrahedral", {{"a", a()}, {"b", b()}}, tet);
    };
    m["binary-octahedral"] = [tet] {
      return quaternion_group("binary-octahedral", "binary octahedral", {{"a", a()}, {"f", f()}}, tet);
    };
    m["binary-icosahedral"] = [tet] {
      return quaternion_group("binary-icosahedral", "binary icosahedral", {{"a", a()}, {"t", t()}}, tet);
    };
    m["sl2-3"] = [] { return matrix_group("sl2-3", 3, DetCondition::det_one); };
    m["gl2-3"] = [] { return matrix_group("gl2-3", 3, DetCondition::det_nonzero); };
    m["sl2-5"] = [] { return matrix_group("sl2-5", 5, DetCondition::det_one); };
    for (int n = 3; n <= 5; ++n) m["sym" + std::to_string(n)] = [n] { return sym_group(n); };
    for (int n = 2; n <= 8; ++n) m["dic" + std::to_string(n)] = [n] { return dic_group(n); };
    return m;
  }();
  return table;
}

std::string resolve(const std::string& key) {
  static const std::map<std::string, std::string> aliases = {
      {"Q8", "q8"},           {"SL2(Z/3)", "sl2-3"}, {"GL2(Z/3)", "gl2-3"},        {"SL2(Z/5)", "sl2-5"},
      {"2T", "binary-tetrahedral"}, {"2O", "binary-octahedral"}, {"2I", "binary-icosahedral"}};
  if (auto it = aliases.find(key); it != aliases.end()) return it->second;
  return key;
}

// Recursive descent over: expr := factor ('*' factor)* ; factor := atom ('^' int)* ;
// atom := name | '1' | '-1' | '(' expr ')' | '{' literal '}'.
class Parser {
 public:
  Parser(const CatalogGroup& g, const std::string& text) : g_(g), s_(text) {}

  int parse() {
    int v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("expression \"" + s_ + "\" at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  int expr() {
    int v = factor();
    while (eat('*')) v = g_.group->mul(v, factor());
    return v;
  }
  int factor() {
    int v = atom();
    while (eat('^')) {
      skip();
      std::size_t start = pos_;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num = s_.substr(start, pos_ - start);
      if (num.empty() || num == "-" || num == "+") fail("exponent expected");
      v = g_.group->pow(v, std::stoll(num));
    }
    return v;
  }
  int named(const std::string& n) {
    auto it = g_.names.find(n);
    if (it == g_.names.end()) fail("unknown name '" + n + "' in " + g_.key);
    return it->second;
  }
  int atom() {
    skip();
    if (pos_ >= s_.size()) fail("operand expected");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      int v = expr();
      if (!eat(')')) fail("')' expected");
      return v;
    }
    if (ch == '{') {
      std::size_t close = s_.find('}', pos_);
      if (close == std::string::npos) fail("'}' expected");
      std::string lit = s_.substr(pos_ + 1, close - pos_ - 1);
      pos_ = close + 1;
      return literal(lit);
    }
    if (ch == '-') {
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '1' && (pos_ + 1 == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))) {
        ++pos_;
        return named("-1");
      }
      fail("unary '-' is only allowed in the literal -1");
    }
    if (ch == '1' && (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      return g_.group->identity();
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return named(s_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }
  int literal(const std::string& lit) {
    const GroupElem& sample = g_.group->element(0);
    GroupElem e;
    try {
      if (std::holds_alternative<Quaternion>(sample)) {
        e = parse_quaternion(lit);
      } else if (std::holds_alternative<Perm>(sample)) {
        e = cycles_parse(lit, std::get<Perm>(sample).degree());
      } else if (std::holds_alternative<ModMatrix>(sample)) {
        e = parse_mod_matrix(lit, std::get<ModMatrix>(sample).p);
      } else if (std::holds_alternative<SignedPerm>(sample)) {
        e = parse_signed_perm(lit);
      } else {
        fail("literals are not supported for " + g_.key);
      }
    } catch (const std::invalid_argument& ex) {
      fail(ex.what());
    }
    int idx = g_.group->index_of(e);
    if (idx < 0) fail("literal {" + lit + "} is not an element of " + g_.key);
    return idx;
  }

  const CatalogGroup& g_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> catalog_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, b] : builders()) keys.push_back(k);
  return keys;
}

const CatalogGroup& catalog_group(const std::string& key) {
  static std::mutex mu;
  static std::map<std::string, CatalogGroup> cache;
  std::string k = resolve(key);
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(k); it != cache.end()) return it->second;
  auto b = builders().find(k);
  if (b == builders().end()) throw std::invalid_argument("unknown group '" + key + "'");
  return cache.emplace(k, b->second()).first->second;
}

int eval_expr(const CatalogGroup& g, const std::string& expr) { return Parser(g, expr).parse(); }

std::string catalog_repr(const CatalogGroup& g, int element) {
  std::string best;
  for (const auto& [n, idx] : g.names) {
    if (idx != element) continue;
    if (best.empty() || n.size() < best.size()) best = n;
  }
  return best.empty() ? g.group->repr(element) : best;
}

}  // namespace bgw
