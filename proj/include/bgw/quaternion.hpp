#pragma once

#include "bgw/field.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bgw {

template <class S>
struct BasicQuaternion {
  S w, x, y, z;

  BasicQuaternion() : w(0), x(0), y(0), z(0) {}
  BasicQuaternion(S w_, S x_, S y_, S z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static BasicQuaternion one() { return {S(1), S(0), S(0), S(0)}; }

  BasicQuaternion operator-() const { return {-w, -x, -y, -z}; }
  friend BasicQuaternion operator+(const BasicQuaternion& p, const BasicQuaternion& q) {
    return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
  }
  friend BasicQuaternion operator-(const BasicQuaternion& p, const BasicQuaternion& q) {
    return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
  }
  friend BasicQuaternion operator*(const BasicQuaternion& p, const BasicQuaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
  }
  friend BasicQuaternion operator*(const S& s, const BasicQuaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
  }
  friend bool operator==(const BasicQuaternion& p, const BasicQuaternion& q) {
    return p.w == q.w && p.x == q.x && p.y == q.y && p.z == q.z;
  }

  S norm() const { return w * w + x * x + y * y + z * z; }
  BasicQuaternion conjugate() const { return {w, -x, -y, -z}; }
  bool is_unit() const { return norm() == S(1); }
};

using Quaternion = BasicQuaternion<FieldElem>;
using ExtQuaternion = BasicQuaternion<ExtFieldElem>;

template <class S>
BasicQuaternion<S> q_mul(const BasicQuaternion<S>& p, const BasicQuaternion<S>& q) {
  return p * q;
}

// Inverse of a unit quaternion (its conjugate).
template <class S>
BasicQuaternion<S> q_inv(const BasicQuaternion<S>& q) {
  if (!q.is_unit()) throw std::domain_error("q_inv: quaternion is not of unit norm");
  return q.conjugate();
}

template <class S>
BasicQuaternion<S> q_pow(const BasicQuaternion<S>& q, long long e) {
  BasicQuaternion<S> base = e < 0 ? q_inv(q) : q;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  BasicQuaternion<S> r = BasicQuaternion<S>::one();
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

ExtQuaternion to_ext(const Quaternion& q);

// "(1/2) + (1/2)i + (1/2)j + (1/2)k"; radicals as r2, r3, r5, ...; zero prints "0".
std::string to_string(const Quaternion& q);
Quaternion parse_quaternion(std::string_view text);
std::size_t hash_value(const Quaternion& q);

template <class S>
struct BasicMat3 {
  std::array<S, 9> e;

  BasicMat3() { e.fill(S(0)); }
  static BasicMat3 identity() {
    BasicMat3 m;
    m(0, 0) = S(1);
    m(1, 1) = S(1);
    m(2, 2) = S(1);
    return m;
  }
  S& operator()(int r, int c) { return e[r * 3 + c]; }
  const S& operator()(int r, int c) const { return e[r * 3 + c]; }

  friend BasicMat3 operator*(const BasicMat3& a, const BasicMat3& b) {
    BasicMat3 m;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        S s(0);
        for (int k = 0; k < 3; ++k) s += a(r, k) * b(k, c);
        m(r, c) = s;
      }
    }
    return m;
  }
  friend bool operator==(const BasicMat3& a, const BasicMat3& b) { return a.e == b.e; }

  BasicMat3 transpose() const {
    BasicMat3 m;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) m(r, c) = (*this)(c, r);
    }
    return m;
  }
  S det() const {
    const auto& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }
};

using Mat3 = BasicMat3<FieldElem>;
using ExtMat3 = BasicMat3<ExtFieldElem>;

// Rotation matrix of a unit quaternion under the double cover S^3 -> SO(3).
template <class S>
BasicMat3<S> su2_to_so3(const BasicQuaternion<S>& q) {
  if (!q.is_unit()) throw std::domain_error("su2_to_so3: quaternion is not of unit norm");
  const S& w = q.w;
  const S& x = q.x;
  const S& y = q.y;
  const S& z = q.z;
  S one(1), two(2);
  BasicMat3<S> m;
  m(0, 0) = one - two * (y * y + z * z);
  m(0, 1) = two * (x * y - z * w);
  m(0, 2) = two * (x * z + y * w);
  m(1, 0) = two * (x * y + z * w);
  m(1, 1) = one - two * (x * x + z * z);
  m(1, 2) = two * (y * z - x * w);
  m(2, 0) = two * (x * z - y * w);
  m(2, 1) = two * (y * z + x * w);
  m(2, 2) = one - two * (x * x + y * y);
  return m;
}

// Named constants: 1, i, j, k, a, b, c, d, f, t and phi.
namespace quat {
Quaternion one();
Quaternion i();
Quaternion j();
Quaternion k();
Quaternion a();  // (1+i+j+k)/2
Quaternion b();  // (1+i+j-k)/2
Quaternion c();  // (1+i-j-k)/2
Quaternion d();  // (1+i-j+k)/2
Quaternion f();  // (1+i)/sqrt2
Quaternion t();  // (phi + (phi-1)i + j)/2
FieldElem phi();
}  // namespace quat

std::map<std::string, Quaternion> catalog_constants();

// cos(pi/n), sin(pi/n). The plain field handles n in {1,2,3,4,6};
// other n throw std::domain_error (unsupported field).
std::pair<FieldElem, FieldElem> cos_sin_pi_over(int n);
std::pair<ExtFieldElem, ExtFieldElem> ext_cos_sin_pi_over(int n);  // n <= 6

// u_n(l) = cos(l pi/n) + sin(l pi/n) i, v_n(l) = cos(l pi/n) j + sin(l pi/n) k.
Quaternion u_n(int n, int l);
Quaternion v_n(int n, int l);
ExtQuaternion ext_u_n(int n, int l);
ExtQuaternion ext_v_n(int n, int l);

}  // namespace bgw

template <>
struct std::hash<bgw::Quaternion> {
  std::size_t operator()(const bgw::Quaternion& q) const { return bgw::hash_value(q); }
};
