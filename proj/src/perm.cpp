#include "bgw/perm.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace bgw {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("Perm: images are not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  Perm p;
  p.images_ = std::move(im);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>(images_[i])] = i;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<int> cyc;
    for (int x = i; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.begin(), t.end());
  return t;
}

int Perm::order() const {
  int o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, static_cast<int>(c.size()));
  return o;
}

int Perm::sign() const {
  int s = 1;
  for (const auto& c : cycles()) {
    if (c.size() % 2 == 0) s = -s;
  }
  return s;
}

std::vector<int> Perm::fixed_points() const {
  std::vector<int> f;
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] == i) f.push_back(i);
  }
  return f;
}

std::size_t Perm::hash() const { return boost::hash_range(images_.begin(), images_.end()); }

Perm perm_compose(const Perm& s, const Perm& t) {
  if (s.degree() != t.degree()) throw std::invalid_argument("perm_compose: degree mismatch");
  std::vector<int> im(static_cast<std::size_t>(s.degree()));
  for (int x = 0; x < s.degree(); ++x) im[x] = s(t(x));
  return Perm(std::move(im));
}

Perm perm_pow(const Perm& s, long long e) {
  Perm base = e < 0 ? s.inverse() : s;
  unsigned long long n = static_cast<unsigned long long>(e < 0 ? -e : e);
  Perm r = Perm::identity(s.degree());
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

PermProps perm_props(const Perm& s) { return {s.order(), s.sign(), s.fixed_points()}; }

Perm cycles_parse(std::string_view text, int degree, int base) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cycle notation \"" + std::string(text) + "\": " + why);
  };
  bool commas = text.find(',') != std::string_view::npos;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        if (!commas || cyc.empty()) fail("misplaced ','");
        ++pos;
        skip_ws();
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        fail("expected a point");
      }
      int v = 0;
      if (commas) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        v = std::stoi(std::string(text.substr(start, pos - start)));
      } else {
        v = text[pos++] - '0';
      }
      v -= base;
      if (v < 0 || v >= degree) fail("point out of range");
      if (used[v]) fail("repeated point " + std::to_string(v + base));
      used[v] = 1;
      cyc.push_back(v);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) im[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Perm(std::move(im));
}

namespace {
std::string print_cycles(const Perm& s, int base, const char* sep) {
  auto cyc = s.cycles();
  if (cyc.empty()) return "()";
  std::string out;
  for (const auto& c : cyc) {
    out += "(";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += sep;
      out += std::to_string(c[k] + base);
    }
    out += ")";
  }
  return out;
}
}  // namespace

std::string cycles_print(const Perm& s, int base) { return print_cycles(s, base, ","); }

std::string cycles_print_compact(const Perm& s, int base) {
  if (s.degree() + base > 10) throw std::invalid_argument("compact cycles need single-digit points");
  return print_cycles(s, base, "");
}

SignedPerm::SignedPerm(Perm perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (static_cast<int>(signs_.size()) != perm_.degree()) {
    throw std::invalid_argument("SignedPerm: sign count does not match degree");
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("SignedPerm: signs must be +-1");
  }
}

SignedPerm SignedPerm::identity(int degree) {
  return SignedPerm(Perm::identity(degree), std::vector<int>(static_cast<std::size_t>(degree), 1));
}

int SignedPerm::entry(int row, int col) const { return perm_(col) == row ? signs_[col] : 0; }

int SignedPerm::det() const {
  int d = perm_.sign();
  for (int s : signs_) d *= s;
  return d;
}

SignedPerm SignedPerm::inverse() const {
  // Inverse matrix is the transpose: column perm(j) holds signs[j] e_j.
  Perm inv = perm_.inverse();
  std::vector<int> s(signs_.size());
  for (int j = 0; j < degree(); ++j) s[perm_(j)] = signs_[j];
  return SignedPerm(inv, std::move(s));
}

std::vector<int> SignedPerm::apply(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != degree()) throw std::invalid_argument("apply: size mismatch");
  std::vector<int> out(v.size(), 0);
  for (int j = 0; j < degree(); ++j) out[perm_(j)] += signs_[j] * v[j];
  return out;
}

std::size_t SignedPerm::hash() const {
  std::size_t seed = perm_.hash();
  boost::hash_range(seed, signs_.begin(), signs_.end());
  return seed;
}

SignedPerm signed_compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("signed_compose: degree mismatch");
  std::vector<int> s(static_cast<std::size_t>(a.degree()));
  for (int j = 0; j < a.degree(); ++j) s[j] = b.signs()[j] * a.signs()[b.perm()(j)];
  return SignedPerm(a.perm() * b.perm(), std::move(s));
}

std::string to_string(const SignedPerm& s) {
  std::string out = "(";
  for (int j = 0; j < s.degree(); ++j) {
    if (j) out += ",";
    if (s.signs()[j] < 0) out += "-";
    out += "e" + std::to_string(s.perm()(j) + 1);
  }
  return out + ")";
}

SignedPerm parse_signed_perm(std::string_view text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') {
    throw std::invalid_argument("signed permutation must look like (-e2,e1,...)");
  }
  std::vector<int> im, signs;
  std::size_t pos = 1;
  while (pos < t.size() - 1) {
    int sign = 1;
    if (t[pos] == '-' || t[pos] == '+') sign = t[pos++] == '-' ? -1 : 1;
    if (pos >= t.size() || t[pos] != 'e') throw std::invalid_argument("expected basis vector e<k>");
    ++pos;
    std::size_t start = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("expected index after e");
    im.push_back(std::stoi(t.substr(start, pos - start)) - 1);
    signs.push_back(sign);
    if (t[pos] == ',') ++pos;
  }
  return SignedPerm(Perm(std::move(im)), std::move(signs));
}

SignedPerm signed_from_matrix(const std::vector<std::vector<int>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<int> im(static_cast<std::size_t>(n), -1), signs(static_cast<std::size_t>(n), 1);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(m[r].size()) != n) throw std::invalid_argument("matrix not square");
      int v = m[r][c];
      if (v == 0) continue;
      if ((v != 1 && v != -1) || im[c] != -1) {
        throw std::invalid_argument("not a signed permutation matrix");
      }
      im[c] = r;
      signs[c] = v;
    }
    if (im[c] == -1) throw std::invalid_argument("not a signed permutation matrix");
  }
  return SignedPerm(Perm(std::move(im)), std::move(signs));
}

}  // namespace bgw
