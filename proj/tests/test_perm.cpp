#include "bgw/perm.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

using namespace bgw;

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix perm_matrix(const Perm& s) {
  int n = s.degree();
  Matrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int j = 0; j < n; ++j) m[s(j)][j] = 1;  // column j is e_{s(j)}
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size();
  Matrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

Matrix signed_matrix(const SignedPerm& s) {
  int n = s.degree();
  Matrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = s.entry(r, c);
  }
  return m;
}

int int_det(Matrix m) {
  // Laplace expansion; small sizes only.
  int n = static_cast<int>(m.size());
  if (n == 1) return m[0][0];
  int d = 0;
  for (int c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Matrix minor;
    for (int r = 1; r < n; ++r) {
      std::vector<int> row;
      for (int cc = 0; cc < n; ++cc) {
        if (cc != c) row.push_back(m[r][cc]);
      }
      minor.push_back(row);
    }
    d += ((c % 2) ? -1 : 1) * m[0][c] * int_det(minor);
  }
  return d;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

TEST_CASE("composition matches the matrix model exhaustively on degree <= 4") {
  for (int n = 1; n <= 4; ++n) {
    auto ps = all_perms(n);
    for (const auto& s : ps) {
      for (const auto& t : ps) CHECK(perm_matrix(s * t) == mat_mul(perm_matrix(s), perm_matrix(t)));
    }
  }
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> a(9), b(9);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Perm s(a), u(b);
    CHECK(perm_matrix(s * u) == mat_mul(perm_matrix(s), perm_matrix(u)));
    CHECK((s * s.inverse()).is_identity());
  }
}

TEST_CASE("composition convention") {
  Perm t12 = cycles_parse("(12)", 4, 1), t23 = cycles_parse("(23)", 4, 1);
  CHECK(cycles_print(t12 * t23, 1) == "(1,2,3)");
  // The word (234)(1423)(234)(1423): right-to-left it is (14)(23); read
  // left-to-right (first factor acts first) it is (13)(24).
  Perm x = cycles_parse("(234)", 4, 1), y = cycles_parse("(1423)", 4, 1);
  CHECK(cycles_print(x * y * x * y, 1) == "(1,4)(2,3)");
  CHECK(cycles_print(y * x * y * x, 1) == "(1,3)(2,4)");
  Perm y2 = cycles_parse("(1324)", 4, 1);
  CHECK((x * y2 * x * y2).is_identity());
  CHECK_THROWS(perm_compose(Perm::identity(3), Perm::identity(4)));
}

TEST_CASE("cycle notation") {
  Perm a = cycles_parse("(04)(123567)", 8);
  CHECK(a(0) == 4);
  CHECK(a(4) == 0);
  CHECK(a(1) == 2);
  CHECK(a(7) == 1);
  CHECK(cycles_print(a) == "(0,4)(1,2,3,5,6,7)");
  CHECK(cycles_print_compact(a) == "(04)(123567)");
  CHECK(cycles_parse("", 5).is_identity());
  CHECK(cycles_print(Perm::identity(3)) == "()");
  CHECK(cycles_print(cycles_parse("(0,2,1)(4,6,5)", 8)) == "(0,2,1)(4,6,5)");
  CHECK(cycles_print(cycles_parse("(2,1,0)", 3)) == "(0,2,1)");
  CHECK(cycles_parse("(1)(2)(3)(4)", 4, 1).is_identity());
  CHECK(cycles_parse("(10,11)", 12)(10) == 11);
  CHECK_THROWS(cycles_parse("(0,1,0)", 3));
  CHECK_THROWS(cycles_parse("(01", 3));
  CHECK_THROWS(cycles_parse("(05)", 4));
  CHECK_THROWS(cycles_parse("(0)(1", 3));
  CHECK_THROWS(cycles_parse("0,1", 3));
  CHECK_THROWS(cycles_parse("(0)", 3, 1));
  std::mt19937 rng(9);
  for (int t = 0; t < 30; ++t) {
    std::vector<int> v(12);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    Perm p(v);
    for (int base : {0, 1}) {
      std::string s = cycles_print(p, base);
      CHECK(cycles_parse(s, 12, base) == p);
      CHECK(cycles_print(cycles_parse(s, 12, base), base) == s);
    }
  }
}

TEST_CASE("perm properties") {
  auto p = perm_props(cycles_parse("(1324)", 4, 1));
  CHECK(p.order == 4);
  CHECK(p.sign == -1);
  auto id = perm_props(Perm::identity(5));
  CHECK(id.order == 1);
  CHECK(id.sign == 1);
  CHECK(id.fixed_points.size() == 5);
  auto a = perm_props(cycles_parse("(04)(123567)", 8));
  CHECK(a.order == 6);
  CHECK(a.sign == 1);
  CHECK(a.fixed_points.empty());
  // sign agrees with the determinant of the permutation matrix
  for (const auto& s : all_perms(4)) CHECK(s.sign() == int_det(perm_matrix(s)));
}

TEST_CASE("signed permutations") {
  SignedPerm s = parse_signed_perm("(-e2,-e1,-e3)");
  CHECK((s * s) == SignedPerm::identity(3));
  CHECK(to_string(s) == "(-e2,-e1,-e3)");
  CHECK(parse_signed_perm("(-e1,-e3,-e2)").det() == 1);
  CHECK(s * SignedPerm::identity(3) == s);
  CHECK(SignedPerm::identity(3) * s == s);
  CHECK_THROWS(signed_compose(s, SignedPerm::identity(2)));
  std::mt19937 rng(2);
  std::vector<SignedPerm> pool;
  for (const auto& p : all_perms(4)) {
    for (int mask = 0; mask < 16; mask += 5) {
      std::vector<int> sg(4);
      for (int i = 0; i < 4; ++i) sg[i] = (mask >> i) & 1 ? -1 : 1;
      pool.emplace_back(p, sg);
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const auto &a = pool[pick(rng)], &b = pool[pick(rng)], &c = pool[pick(rng)];
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).det() == a.det() * b.det());
    CHECK(signed_matrix(a * b) == mat_mul(signed_matrix(a), signed_matrix(b)));
    CHECK(a.det() == int_det(signed_matrix(a)));
    CHECK(a * a.inverse() == SignedPerm::identity(4));
  }
  CHECK(signed_from_matrix({{0, -1}, {1, 0}}) == SignedPerm(Perm({1, 0}), {1, -1}));
  CHECK_THROWS(signed_from_matrix({{1, 1}, {0, 1}}));
}
