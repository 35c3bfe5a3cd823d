#pragma once

#include "bgw/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace bgw {

// Exact element of Q(sqrt2, sqrt3, sqrt5) in the basis
// 1, sqrt2, sqrt3, sqrt5, sqrt6, sqrt10, sqrt15, sqrt30.
class FieldElem {
 public:
  static constexpr std::array<int, 8> kRadicands = {1, 2, 3, 5, 6, 10, 15, 30};

  FieldElem() = default;
  FieldElem(long long n);  // NOLINT(google-explicit-constructor)
  FieldElem(const Rational& r);  // NOLINT(google-explicit-constructor)

  // Coefficients listed in kRadicands order.
  static FieldElem from_coeffs(const std::array<Rational, 8>& c);
  // sqrt(k) for k one of the eight radicands.
  static FieldElem sqrt(int radicand);

  const Rational& coeff(int radicand) const;
  bool is_zero() const;
  bool is_rational() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.c_ == b.c_; }

  // Throws std::domain_error on zero.
  FieldElem inverse() const;
  // Evaluates with positive real square roots.
  double to_double() const;
  std::string to_string() const;
  static FieldElem parse(std::string_view text);
  std::size_t hash() const;

  // Internal basis: index = bitmask over (sqrt2, sqrt3, sqrt5).
  const Rational& by_mask(int mask) const { return c_[mask]; }
  Rational& by_mask(int mask) { return c_[mask]; }
  static int radicand_of_mask(int mask);
  static int mask_of_radicand(int radicand);

 private:
  std::array<Rational, 8> c_{};
};

enum class FieldOp { add, sub, mul, div };
FieldElem fe_arith(const FieldElem& a, const FieldElem& b, FieldOp op);

// a + b*s with s = sin(pi/5), s^2 = (5 - sqrt5)/8. Only needed for the n = 5
// dicyclic generators, which leave Q(sqrt2, sqrt3, sqrt5).
class ExtFieldElem {
 public:
  ExtFieldElem() = default;
  ExtFieldElem(long long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  ExtFieldElem(const FieldElem& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  ExtFieldElem(FieldElem a, FieldElem b) : a_(std::move(a)), b_(std::move(b)) {}

  static ExtFieldElem s();
  static FieldElem s_squared();

  const FieldElem& base() const { return a_; }
  const FieldElem& s_coeff() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool in_base_field() const { return b_.is_zero(); }

  ExtFieldElem operator-() const { return {-a_, -b_}; }
  ExtFieldElem& operator+=(const ExtFieldElem& o);
  ExtFieldElem& operator-=(const ExtFieldElem& o);
  ExtFieldElem& operator*=(const ExtFieldElem& o);
  friend ExtFieldElem operator+(ExtFieldElem x, const ExtFieldElem& y) { return x += y; }
  friend ExtFieldElem operator-(ExtFieldElem x, const ExtFieldElem& y) { return x -= y; }
  friend ExtFieldElem operator*(ExtFieldElem x, const ExtFieldElem& y) { return x *= y; }
  friend bool operator==(const ExtFieldElem& x, const ExtFieldElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  ExtFieldElem inverse() const;
  double to_double() const;
  std::string to_string() const;

 private:
  FieldElem a_;
  FieldElem b_;
};

}  // namespace bgw

template <>
struct std::hash<bgw::FieldElem> {
  std::size_t operator()(const bgw::FieldElem& f) const { return f.hash(); }
};
