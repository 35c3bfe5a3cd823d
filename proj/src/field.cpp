#include "bgw/field.hpp"

#include "terms.hpp"

#include <boost/functional/hash.hpp>

#include <cmath>
#include <stdexcept>

namespace bgw {

namespace {
constexpr std::array<int, 8> kMaskRadicand = {1, 2, 3, 6, 5, 10, 15, 30};
constexpr std::array<int, 3> kPrimes = {2, 3, 5};

int mask_factor(int common) {
  int f = 1;
  for (int b = 0; b < 3; ++b) {
    if (common & (1 << b)) f *= kPrimes[b];
  }
  return f;
}
}  // namespace

int FieldElem::radicand_of_mask(int mask) { return kMaskRadicand.at(mask); }

int FieldElem::mask_of_radicand(int radicand) {
  for (int m = 0; m < 8; ++m) {
    if (kMaskRadicand[m] == radicand) return m;
  }
  throw std::invalid_argument("radicand " + std::to_string(radicand) +
                              " is not one of 1,2,3,5,6,10,15,30");
}

FieldElem::FieldElem(long long n) { c_[0] = Rational(n); }
FieldElem::FieldElem(const Rational& r) { c_[0] = r; }

FieldElem FieldElem::from_coeffs(const std::array<Rational, 8>& c) {
  FieldElem f;
  for (int i = 0; i < 8; ++i) f.c_[mask_of_radicand(kRadicands[i])] = c[i];
  return f;
}

FieldElem FieldElem::sqrt(int radicand) {
  FieldElem f;
  f.c_[mask_of_radicand(radicand)] = Rational(1);
  return f;
}

const Rational& FieldElem::coeff(int radicand) const { return c_[mask_of_radicand(radicand)]; }

bool FieldElem::is_zero() const {
  for (const auto& r : c_) {
    if (!r.is_zero()) return false;
  }
  return true;
}

bool FieldElem::is_rational() const {
  for (int m = 1; m < 8; ++m) {
    if (!c_[m].is_zero()) return false;
  }
  return true;
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  for (int m = 0; m < 8; ++m) {
    if (!o.c_[m].is_zero()) c_[m] += o.c_[m];
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  for (int m = 0; m < 8; ++m) {
    if (!o.c_[m].is_zero()) c_[m] -= o.c_[m];
  }
  return *this;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  FieldElem r;
  for (int m1 = 0; m1 < 8; ++m1) {
    if (a.c_[m1].is_zero()) continue;
    for (int m2 = 0; m2 < 8; ++m2) {
      if (b.c_[m2].is_zero()) continue;
      Rational p = a.c_[m1] * b.c_[m2];
      int f = mask_factor(m1 & m2);
      if (f != 1) p *= Rational(f);
      r.c_[m1 ^ m2] += p;
    }
  }
  return r;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) { return *this = *this * o; }

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this = *this * o.inverse(); }

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in field");
  // Column m of A holds the coordinates of (*this) * basis_m; solve A x = e_0.
  std::array<std::array<Rational, 9>, 8> a{};
  for (int m = 0; m < 8; ++m) {
    FieldElem basis;
    basis.c_[m] = Rational(1);
    FieldElem col = *this * basis;
    for (int r = 0; r < 8; ++r) a[r][m] = col.c_[r];
  }
  a[0][8] = Rational(1);
  for (int col = 0; col < 8; ++col) {
    int piv = -1;
    for (int r = col; r < 8; ++r) {
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw std::domain_error("singular multiplication matrix");
    std::swap(a[col], a[piv]);
    Rational inv = Rational(1) / a[col][col];
    for (int k = col; k < 9; ++k) a[col][k] *= inv;
    for (int r = 0; r < 8; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (int k = col; k < 9; ++k) a[r][k] -= f * a[col][k];
    }
  }
  FieldElem x;
  for (int m = 0; m < 8; ++m) x.c_[m] = a[m][8];
  return x;
}

double FieldElem::to_double() const {
  double s = 0;
  for (int m = 0; m < 8; ++m) {
    if (!c_[m].is_zero()) s += c_[m].to_double() * std::sqrt(static_cast<double>(kMaskRadicand[m]));
  }
  return s;
}

std::string FieldElem::to_string() const {
  std::string out;
  bool first = true;
  for (int rad : kRadicands) {
    const Rational& c = coeff(rad);
    if (c.is_zero()) continue;
    detail::append_term(out, {c, rad, 0}, first);
    first = false;
  }
  return first ? "0" : out;
}

FieldElem FieldElem::parse(std::string_view text) {
  FieldElem f;
  for (const auto& t : detail::parse_terms(text, "")) {
    f.c_[mask_of_radicand(t.radicand)] += t.coeff;
  }
  return f;
}

std::size_t FieldElem::hash() const {
  std::size_t seed = 0;
  for (const auto& c : c_) boost::hash_combine(seed, c.hash());
  return seed;
}

FieldElem fe_arith(const FieldElem& a, const FieldElem& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
  }
  throw std::invalid_argument("unknown field op");
}

ExtFieldElem ExtFieldElem::s() { return {FieldElem(0), FieldElem(1)}; }

FieldElem ExtFieldElem::s_squared() {
  return (FieldElem(5) - FieldElem::sqrt(5)) / FieldElem(8);
}

ExtFieldElem& ExtFieldElem::operator+=(const ExtFieldElem& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

ExtFieldElem& ExtFieldElem::operator-=(const ExtFieldElem& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

ExtFieldElem& ExtFieldElem::operator*=(const ExtFieldElem& o) {
  FieldElem a = a_ * o.a_;
  if (!b_.is_zero() && !o.b_.is_zero()) a += b_ * o.b_ * s_squared();
  FieldElem b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

ExtFieldElem ExtFieldElem::inverse() const {
  // s is not in the base field, so a^2 - b^2 s^2 vanishes only at zero.
  FieldElem norm = a_ * a_ - b_ * b_ * s_squared();
  FieldElem inv = norm.inverse();
  return {a_ * inv, -(b_ * inv)};
}

double ExtFieldElem::to_double() const {
  return a_.to_double() + b_.to_double() * std::sin(M_PI / 5);
}

std::string ExtFieldElem::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string tail = "(" + b_.to_string() + ")s";
  if (a_.is_zero()) return tail;
  return a_.to_string() + " + " + tail;
}

}  // namespace bgw
