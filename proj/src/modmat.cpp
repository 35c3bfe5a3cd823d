#include "bgw/modmat.hpp"

#include "bgw/group.hpp"

#include <cctype>
#include <stdexcept>

namespace bgw {

namespace {
int mod(long long v, int p) { return static_cast<int>(((v % p) + p) % p); }
}  // namespace

ModMatrix ModMatrix::make(int p, long long a, long long b, long long c, long long d) {
  if (p < 2) throw std::invalid_argument("modulus must be >= 2");
  return {p, mod(a, p), mod(b, p), mod(c, p), mod(d, p)};
}

int ModMatrix::det() const { return mod(static_cast<long long>(a) * d - static_cast<long long>(b) * c, p); }

ModMatrix mm_mul(const ModMatrix& x, const ModMatrix& y) {
  if (x.p != y.p) throw std::invalid_argument("mm_mul: modulus mismatch");
  return ModMatrix::make(x.p, x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                         x.c * y.b + x.d * y.d);
}

ModMatrix mm_inv(const ModMatrix& x) {
  int det = x.det();
  if (det == 0) throw std::domain_error("mm_inv: singular matrix");
  int inv = 0;
  for (int t = 1; t < x.p; ++t) {
    if ((det * t) % x.p == 1) inv = t;
  }
  if (inv == 0) throw std::domain_error("mm_inv: determinant not invertible");
  return ModMatrix::make(x.p, x.d * inv, -x.b * inv, -x.c * inv, x.a * inv);
}

int balanced(int r, int p) { return r > p / 2 ? r - p : r; }

std::string to_string(const ModMatrix& m) {
  auto e = [&](int v) { return std::to_string(m.p == 3 ? balanced(v, 3) : v); };
  return "[[" + e(m.a) + "," + e(m.b) + "],[" + e(m.c) + "," + e(m.d) + "]] mod " + std::to_string(m.p);
}

ModMatrix parse_mod_matrix(std::string_view text, int default_p) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  int p = default_p;
  auto at = t.find("mod");
  if (at != std::string::npos) {
    p = std::stoi(t.substr(at + 3));
    t = t.substr(0, at);
  }
  std::vector<long long> v;
  std::string num;
  for (char c : t) {
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      num += c;
    } else if (c == ',' || c == ']') {
      if (!num.empty()) v.push_back(std::stoll(num));
      num.clear();
    } else if (c != '[') {
      throw std::invalid_argument("bad matrix text: " + std::string(text));
    }
  }
  if (v.size() != 4 || t.rfind("[[", 0) != 0) throw std::invalid_argument("expected [[a,b],[c,d]]: " + std::string(text));
  return ModMatrix::make(p, v[0], v[1], v[2], v[3]);
}

VectorLabeling::VectorLabeling(int p, std::vector<std::pair<int, int>> vectors) : p_(p), vectors_(std::move(vectors)) {
  int n = p * p - 1;
  if (static_cast<int>(vectors_.size()) != n) throw std::invalid_argument("labeling must cover all nonzero vectors");
  index_.assign(static_cast<std::size_t>(p * p), -1);
  for (int l = 0; l < n; ++l) {
    auto [x, y] = vectors_[l];
    x = mod(x, p);
    y = mod(y, p);
    vectors_[l] = {x, y};
    if ((x == 0 && y == 0) || index_[x * p + y] >= 0) throw std::invalid_argument("labeling is not a bijection");
    index_[x * p + y] = l;
  }
  int off = n / 2;
  for (int l = 0; l < off; ++l) {
    auto [x, y] = vectors_[l];
    if (label(-x, -y) != l + off) throw std::invalid_argument("antipodal labels must differ by (p^2-1)/2");
  }
}

VectorLabeling VectorLabeling::standard_mod3() {
  return VectorLabeling(3, {{1, 0}, {1, 1}, {1, -1}, {0, 1}, {-1, 0}, {-1, -1}, {-1, 1}, {0, -1}});
}

VectorLabeling VectorLabeling::default_for(int p) {
  std::vector<std::pair<int, int>> first, second;
  std::vector<char> seen(static_cast<std::size_t>(p * p), 0);
  for (int x = 0; x < p; ++x) {
    for (int y = 0; y < p; ++y) {
      if ((x == 0 && y == 0) || seen[x * p + y]) continue;
      int nx = mod(-x, p), ny = mod(-y, p);
      seen[x * p + y] = seen[nx * p + ny] = 1;
      first.emplace_back(x, y);
      second.emplace_back(nx, ny);
    }
  }
  first.insert(first.end(), second.begin(), second.end());
  return VectorLabeling(p, first);
}

int VectorLabeling::label(int x, int y) const { return index_[mod(x, p_) * p_ + mod(y, p_)]; }

Perm mat_act_perm(const ModMatrix& m, const VectorLabeling& labels) {
  if (m.p != labels.p()) throw std::invalid_argument("mat_act_perm: modulus mismatch");
  if (m.det() == 0) throw std::domain_error("mat_act_perm: singular matrix");
  std::vector<int> im(static_cast<std::size_t>(labels.size()));
  for (int l = 0; l < labels.size(); ++l) {
    auto [x, y] = labels.vector(l);
    im[l] = labels.label(m.a * x + m.b * y, m.c * x + m.d * y);
  }
  return Perm(std::move(im));
}

std::shared_ptr<const FiniteGroup> enumerate_linear_groups(int p, DetCondition cond) {
  if (p != 3 && p != 5) throw std::invalid_argument("enumerate_linear_groups: p must be 3 or 5");
  std::vector<GroupElem> elems;
  // Identity first so index 0 is the identity, as with closure-built groups.
  elems.emplace_back(ModMatrix::identity(p));
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      for (int c = 0; c < p; ++c) {
        for (int d = 0; d < p; ++d) {
          ModMatrix m = ModMatrix::make(p, a, b, c, d);
          if (m == ModMatrix::identity(p)) continue;
          int det = m.det();
          if (det == 0 || (cond == DetCondition::det_one && det != 1)) continue;
          elems.emplace_back(m);
        }
      }
    }
  }
  std::string name = std::string(cond == DetCondition::det_one ? "SL2" : "GL2") + "(Z/" + std::to_string(p) + ")";
  return FiniteGroup::from_elements(name, std::move(elems));
}

}  // namespace bgw
