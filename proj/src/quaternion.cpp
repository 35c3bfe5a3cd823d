#include "bgw/quaternion.hpp"

#include "terms.hpp"

#include <boost/functional/hash.hpp>

namespace bgw {

ExtQuaternion to_ext(const Quaternion& q) {
  return {ExtFieldElem(q.w), ExtFieldElem(q.x), ExtFieldElem(q.y), ExtFieldElem(q.z)};
}

std::string to_string(const Quaternion& q) {
  std::string out;
  bool first = true;
  const std::array<const FieldElem*, 4> comps = {&q.w, &q.x, &q.y, &q.z};
  const std::array<char, 4> units = {0, 'i', 'j', 'k'};
  for (int u = 0; u < 4; ++u) {
    for (int rad : FieldElem::kRadicands) {
      const Rational& c = comps[u]->coeff(rad);
      if (c.is_zero()) continue;
      detail::append_term(out, {c, rad, units[u]}, first);
      first = false;
    }
  }
  return first ? "0" : out;
}

Quaternion parse_quaternion(std::string_view text) {
  Quaternion q;
  for (const auto& t : detail::parse_terms(text, "ijk")) {
    FieldElem v = FieldElem(t.coeff) * FieldElem::sqrt(t.radicand);
    switch (t.unit) {
      case 'i': q.x += v; break;
      case 'j': q.y += v; break;
      case 'k': q.z += v; break;
      default: q.w += v; break;
    }
  }
  return q;
}

std::size_t hash_value(const Quaternion& q) {
  std::size_t seed = q.w.hash();
  boost::hash_combine(seed, q.x.hash());
  boost::hash_combine(seed, q.y.hash());
  boost::hash_combine(seed, q.z.hash());
  return seed;
}

namespace quat {

namespace {
const FieldElem kHalf = FieldElem(Rational(1, 2));
}

Quaternion one() { return Quaternion::one(); }
Quaternion i() { return {0, 1, 0, 0}; }
Quaternion j() { return {0, 0, 1, 0}; }
Quaternion k() { return {0, 0, 0, 1}; }
Quaternion a() { return {kHalf, kHalf, kHalf, kHalf}; }
Quaternion b() { return {kHalf, kHalf, kHalf, -kHalf}; }
Quaternion c() { return {kHalf, kHalf, -kHalf, -kHalf}; }
Quaternion d() { return {kHalf, kHalf, -kHalf, kHalf}; }

Quaternion f() {
  FieldElem h = kHalf * FieldElem::sqrt(2);
  return {h, h, 0, 0};
}

FieldElem phi() { return kHalf + kHalf * FieldElem::sqrt(5); }

Quaternion t() {
  FieldElem p = phi();
  return {kHalf * p, kHalf * (p - FieldElem(1)), kHalf, 0};
}

}  // namespace quat

std::map<std::string, Quaternion> catalog_constants() {
  std::map<std::string, Quaternion> m;
  m["1"] = quat::one();
  m["-1"] = -quat::one();
  m["i"] = quat::i();
  m["-i"] = -quat::i();
  m["j"] = quat::j();
  m["-j"] = -quat::j();
  m["k"] = quat::k();
  m["-k"] = -quat::k();
  m["a"] = quat::a();
  m["b"] = quat::b();
  m["c"] = quat::c();
  m["d"] = quat::d();
  m["f"] = quat::f();
  m["t"] = quat::t();
  return m;
}

std::pair<FieldElem, FieldElem> cos_sin_pi_over(int n) {
  FieldElem half(Rational(1, 2));
  switch (n) {
    case 1: return {FieldElem(-1), FieldElem(0)};
    case 2: return {FieldElem(0), FieldElem(1)};
    case 3: return {half, half * FieldElem::sqrt(3)};
    case 4: return {half * FieldElem::sqrt(2), half * FieldElem::sqrt(2)};
    case 6: return {half * FieldElem::sqrt(3), half};
    default: break;
  }
  throw std::domain_error("cos/sin(pi/" + std::to_string(n) +
                          ") is not in Q(sqrt2, sqrt3, sqrt5)");
}

std::pair<ExtFieldElem, ExtFieldElem> ext_cos_sin_pi_over(int n) {
  if (n == 5) {
    FieldElem quarter(Rational(1, 4));
    return {ExtFieldElem(quarter + quarter * FieldElem::sqrt(5)), ExtFieldElem::s()};
  }
  if (n < 1 || n > 6) {
    throw std::domain_error("cos/sin(pi/" + std::to_string(n) + ") is unsupported");
  }
  auto [c, s] = cos_sin_pi_over(n);
  return {ExtFieldElem(c), ExtFieldElem(s)};
}

namespace {
template <class S>
BasicQuaternion<S> u_from(const S& c, const S& s, int l) {
  return q_pow(BasicQuaternion<S>(c, s, S(0), S(0)), l);
}
}  // namespace

Quaternion u_n(int n, int l) {
  auto [c, s] = cos_sin_pi_over(n);
  return u_from(c, s, l);
}

Quaternion v_n(int n, int l) { return u_n(n, l) * quat::j(); }

ExtQuaternion ext_u_n(int n, int l) {
  auto [c, s] = ext_cos_sin_pi_over(n);
  return u_from(c, s, l);
}

ExtQuaternion ext_v_n(int n, int l) { return ext_u_n(n, l) * to_ext(quat::j()); }

}  // namespace bgw
