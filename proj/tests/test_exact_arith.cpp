#include "bgw/field.hpp"
#include "bgw/quaternion.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace bgw;

namespace {

FieldElem random_elem(std::mt19937& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  while (true) {
    std::array<Rational, 8> c;
    for (auto& r : c) r = (rng() % 3 == 0) ? Rational(0) : Rational(num(rng), den(rng));
    FieldElem f = FieldElem::from_coeffs(c);
    if (!nonzero || !f.is_zero()) return f;
  }
}

// Plain double quaternion used as an independent oracle.
struct DQ {
  double w, x, y, z;
};
DQ dq(const Quaternion& q) { return {q.w.to_double(), q.x.to_double(), q.y.to_double(), q.z.to_double()}; }
DQ dmul(const DQ& p, const DQ& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z, p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x, p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

Quaternion random_quat(std::mt19937& rng) {
  return {random_elem(rng), random_elem(rng), random_elem(rng), random_elem(rng)};
}

}  // namespace

TEST_CASE("rational normal form") {
  Rational r(BigInt(6), BigInt(-8));
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0, 5).den() == 1);
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
  // Big values stay exact.
  Rational big(BigInt("123456789012345678901234567890"), BigInt(3));
  CHECK((big * Rational(3)).num() == BigInt("123456789012345678901234567890"));
}

TEST_CASE("field defining relations") {
  FieldElem r2 = FieldElem::sqrt(2);
  CHECK(r2 * r2 == FieldElem(2));
  FieldElem phi = quat::phi();
  CHECK(phi * (phi - FieldElem(1)) == FieldElem(1));
  CHECK(FieldElem(1) / phi == phi - FieldElem(1));
  FieldElem prod = FieldElem::sqrt(6) * FieldElem::sqrt(10);
  CHECK(prod == FieldElem(2) * FieldElem::sqrt(15));
  CHECK(std::abs(prod.to_double() - std::sqrt(6.0) * std::sqrt(10.0)) < 1e-12);
  CHECK(FieldElem::sqrt(30) * FieldElem::sqrt(30) == FieldElem(30));
  CHECK(FieldElem::sqrt(15) * FieldElem::sqrt(10) == FieldElem(5) * FieldElem::sqrt(6));
  CHECK_THROWS_AS(FieldElem(1) / FieldElem(0), std::domain_error);
  CHECK_THROWS(FieldElem::sqrt(7));
  CHECK(fe_arith(r2, r2, FieldOp::div) == FieldElem(1));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  for (int t = 0; t < 60; ++t) {
    FieldElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng, true);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(c * c.inverse() == FieldElem(1));
    CHECK((a / c) * c == a);
    double tol = 1e-9 * (1 + std::abs(a.to_double()) * std::abs(b.to_double()));
    CHECK(std::abs((a + b).to_double() - (a.to_double() + b.to_double())) < 1e-9);
    CHECK(std::abs((a * b).to_double() - a.to_double() * b.to_double()) < tol);
    double q = a.to_double() / c.to_double();
    CHECK(std::abs((a / c).to_double() - q) < 1e-9 * (1 + std::abs(q)));
  }
}

TEST_CASE("field text round trip") {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    FieldElem a = random_elem(rng);
    CHECK(FieldElem::parse(a.to_string()) == a);
  }
  CHECK(quat::phi().to_string() == "(1/2) + (1/2)r5");
  CHECK(FieldElem(0).to_string() == "0");
}

TEST_CASE("extension scalar for n = 5") {
  ExtFieldElem s = ExtFieldElem::s();
  CHECK(s * s == ExtFieldElem(ExtFieldElem::s_squared()));
  CHECK(std::abs(s.to_double() - std::sin(M_PI / 5)) < 1e-15);
  ExtFieldElem x(FieldElem(3), FieldElem::sqrt(2));
  CHECK(x * x.inverse() == ExtFieldElem(1));
  auto [c5, s5] = ext_cos_sin_pi_over(5);
  CHECK(c5 * c5 + s5 * s5 == ExtFieldElem(1));
  CHECK(std::abs(c5.to_double() - std::cos(M_PI / 5)) < 1e-15);
}

TEST_CASE("quaternion products") {
  using namespace quat;
  CHECK(i() * j() == k());
  CHECK(j() * i() == -k());
  CHECK(j() * k() == i());
  CHECK(k() * i() == j());
  CHECK(i() * i() == -one());
  CHECK(a() * a() * a() == -one());
  CHECK(q_pow(b(), 3) == -one());
  CHECK(q_pow(c(), 3) == -one());
  CHECK(q_pow(d(), 3) == -one());
  Quaternion q = t() * f();
  CHECK(q * one() == q);
  CHECK(one() * q == q);
}

TEST_CASE("quaternion inverse") {
  using namespace quat;
  CHECK(q_inv(i()) == -i());
  FieldElem h(Rational(1, 2));
  FieldElem p = phi();
  Quaternion tinv{h * p, -(h * (p - FieldElem(1))), -h, 0};
  CHECK(q_inv(t()) == tinv);
  CHECK(t() * q_inv(t()) == one());
  Quaternion t9{h * p, h * (FieldElem(1) - p), -h, 0};
  CHECK(q_pow(t(), 9) == t9);
  CHECK_THROWS_AS(q_inv(Quaternion{2, 0, 0, 0}), std::domain_error);
}

TEST_CASE("quaternion associativity and norm on random triples") {
  std::mt19937 rng(3);
  for (int t = 0; t < 25; ++t) {
    Quaternion p = random_quat(rng), q = random_quat(rng), r = random_quat(rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p * q).norm() == p.norm() * q.norm());
    DQ e = dmul(dq(p), dq(q));
    DQ g = dq(p * q);
    CHECK(std::abs(e.w - g.w) + std::abs(e.x - g.x) + std::abs(e.y - g.y) + std::abs(e.z - g.z) <
          1e-9 * (1 + std::abs(e.w) + std::abs(e.x) + std::abs(e.y) + std::abs(e.z)));
  }
}

TEST_CASE("catalog constants") {
  using namespace quat;
  CHECK(q_pow(t(), 10) == one());
  CHECK(q_pow(t(), 5) == -one());
  CHECK(!(q_pow(t(), 2) == one()));
  CHECK(q_pow(f(), 4) == -one());
  CHECK(q_pow(f(), 8) == one());
  FieldElem h(Rational(1, 2));
  FieldElem p = phi();
  CHECK(q_pow(t(), 2) == Quaternion{h * (p - FieldElem(1)), h, h * p, 0});
  for (int n : {1, 2, 3, 4, 6}) {
    CHECK(v_n(n, 0) == j());
    CHECK(u_n(n, 0) == one());
    CHECK(q_pow(u_n(n, 1), 2 * n) == one());
    CHECK(q_pow(u_n(n, 1), n) == -one());
  }
  CHECK(u_n(2, 1) == i());
  CHECK_THROWS_AS(u_n(5, 1), std::domain_error);
  CHECK_THROWS_AS(u_n(7, 1), std::domain_error);
  CHECK_THROWS_AS(ext_u_n(7, 1), std::domain_error);
  CHECK(q_pow(ext_u_n(5, 1), 10) == ExtQuaternion::one());
  CHECK(q_pow(ext_u_n(5, 1), 5) == -ExtQuaternion::one());
  CHECK(ext_v_n(5, 0) == to_ext(j()));
  for (const auto& [name, q] : catalog_constants()) {
    CHECK_MESSAGE(q.is_unit(), name);
  }
}

TEST_CASE("quaternion text form") {
  CHECK(to_string(quat::a()) == "(1/2) + (1/2)i + (1/2)j + (1/2)k");
  CHECK(to_string(quat::f()) == "(1/2)r2 + (1/2)r2i");
  CHECK(to_string(-quat::one()) == "-1");
  CHECK(to_string(quat::k()) == "k");
  CHECK(to_string(-quat::j()) == "-j");
  CHECK(to_string(Quaternion()) == "0");
  for (const auto& [name, q] : catalog_constants()) {
    CHECK_MESSAGE(parse_quaternion(to_string(q)) == q, name);
  }
  CHECK(parse_quaternion("(1/2) + (1/2)i + (1/2)j + (1/2)k") == quat::a());
  CHECK(parse_quaternion(" -1 ") == -quat::one());
  CHECK(parse_quaternion("(-1/2)r2 + r2i") == Quaternion{FieldElem(Rational(-1, 2)) * FieldElem::sqrt(2), FieldElem::sqrt(2), 0, 0});
  CHECK_THROWS(parse_quaternion("1 +"));
  CHECK_THROWS(parse_quaternion("q"));
  CHECK_THROWS(parse_quaternion(""));
  CHECK_THROWS(parse_quaternion("r7"));
}

TEST_CASE("projection to SO(3)") {
  CHECK(su2_to_so3(quat::one()) == Mat3::identity());
  Mat3 pi = su2_to_so3(quat::i());
  Mat3 diag;
  diag(0, 0) = 1;
  diag(1, 1) = -1;
  diag(2, 2) = -1;
  CHECK(pi == diag);
  CHECK(su2_to_so3(-quat::a()) == su2_to_so3(quat::a()));
  CHECK_THROWS_AS(su2_to_so3(Quaternion{1, 1, 0, 0}), std::domain_error);
  Mat3 m = su2_to_so3(quat::t());
  CHECK(m * m.transpose() == Mat3::identity());
  CHECK(m.det() == FieldElem(1));
}

namespace {
// Exact cos(2 pi l / n) for n <= 6 from the standard closed forms.
FieldElem cos_2pi(int n, int l) {
  int r = ((l % n) + n) % n;
  FieldElem r5 = FieldElem::sqrt(5);
  FieldElem q(Rational(1, 4));
  if (r == 0) return 1;
  switch (n) {
    case 2: return -1;
    case 3: return FieldElem(Rational(-1, 2));
    case 4: return r == 2 ? FieldElem(-1) : FieldElem(0);
    case 5: return (r == 1 || r == 4) ? q * (r5 - FieldElem(1)) : -(q * (r5 + FieldElem(1)));
    case 6: return (r == 3) ? FieldElem(-1) : ((r == 1 || r == 5) ? FieldElem(Rational(1, 2)) : FieldElem(Rational(-1, 2)));
    default: break;
  }
  return 0;
}
}  // namespace

TEST_CASE("projection of u_n and v_n") {
  for (int n = 2; n <= 6; ++n) {
    for (int l = 0; l < 2 * n; ++l) {
      ExtMat3 pu = su2_to_so3(ext_u_n(n, l));
      ExtMat3 pv = su2_to_so3(ext_v_n(n, l));
      double th = 2 * l * M_PI / n;
      ExtFieldElem c(cos_2pi(n, l));
      CHECK(pu(0, 0) == ExtFieldElem(1));
      CHECK(pu(0, 1).is_zero());
      CHECK(pu(0, 2).is_zero());
      CHECK(pu(1, 0).is_zero());
      CHECK(pu(2, 0).is_zero());
      CHECK(pu(1, 1) == c);
      CHECK(pu(2, 2) == c);
      CHECK(pu(2, 1) == -pu(1, 2));
      CHECK(std::abs(pu(2, 1).to_double() - std::sin(th)) < 1e-12);
      CHECK(pv(0, 0) == ExtFieldElem(-1));
      CHECK(pv(1, 1) == c);
      CHECK(pv(2, 2) == -c);
      CHECK(pv(1, 2) == pv(2, 1));
      CHECK(std::abs(pv(1, 2).to_double() - std::sin(th)) < 1e-12);
      CHECK(pu * pu.transpose() == ExtMat3::identity());
      CHECK(pu.det() == ExtFieldElem(1));
      CHECK(pv.det() == ExtFieldElem(1));
      if (n != 5) {
        CHECK(to_ext(u_n(n, l)) == ext_u_n(n, l));
      }
    }
  }
}
