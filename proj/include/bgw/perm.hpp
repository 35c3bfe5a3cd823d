#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bgw {

// Permutation of {0, ..., degree-1}; images_[i] is the image of i.
// Composition is right-to-left: compose(s, t)(x) = s(t(x)), so that the
// permutation matrices M(s) = (e_s(0) ... e_s(n-1)) multiply as M(s)M(t).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;
  int order() const;
  // +1 for even, -1 for odd.
  int sign() const;
  bool is_even() const { return sign() == 1; }
  std::vector<int> fixed_points() const;
  // Cycles of length >= 2, each starting at its minimum, sorted by minimum.
  std::vector<std::vector<int>> cycles() const;
  std::vector<int> cycle_type() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

  std::size_t hash() const;

 private:
  std::vector<int> images_;
};

Perm perm_compose(const Perm& s, const Perm& t);
inline Perm operator*(const Perm& s, const Perm& t) { return perm_compose(s, t); }
Perm perm_pow(const Perm& s, long long e);

struct PermProps {
  int order;
  int sign;
  std::vector<int> fixed_points;
};
PermProps perm_props(const Perm& s);

// Cycle notation. Points are separated by commas when present, otherwise
// each digit is one point ("(04)(123567)"). base shifts the labels.
Perm cycles_parse(std::string_view text, int degree, int base = 0);
// Canonical form "(0,2,1)(4,6,5)"; identity prints "()".
std::string cycles_print(const Perm& s, int base = 0);
// Compact form without commas ("(04)(123567)"), only for degree <= 10.
std::string cycles_print_compact(const Perm& s, int base = 0);

// Signed permutation matrix: column j is signs[j] * e_{perm(j)}.
class SignedPerm {
 public:
  SignedPerm() = default;
  SignedPerm(Perm perm, std::vector<int> signs);
  static SignedPerm identity(int degree);

  int degree() const { return perm_.degree(); }
  const Perm& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  // Matrix entry (row, col) in {-1, 0, 1}.
  int entry(int row, int col) const;
  int det() const;
  SignedPerm inverse() const;
  std::vector<int> apply(const std::vector<int>& v) const;

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
    return a.perm_ == b.perm_ && a.signs_ == b.signs_;
  }
  std::size_t hash() const;

 private:
  Perm perm_;
  std::vector<int> signs_;
};

SignedPerm signed_compose(const SignedPerm& a, const SignedPerm& b);
inline SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
  return signed_compose(a, b);
}
// Columns as "(-e2,-e1,-e3)" (1-based basis vectors).
std::string to_string(const SignedPerm& s);
SignedPerm parse_signed_perm(std::string_view text);
// From a row-major square matrix with one +-1 per row and column.
SignedPerm signed_from_matrix(const std::vector<std::vector<int>>& m);

}  // namespace bgw

template <>
struct std::hash<bgw::Perm> {
  std::size_t operator()(const bgw::Perm& p) const { return p.hash(); }
};
template <>
struct std::hash<bgw::SignedPerm> {
  std::size_t operator()(const bgw::SignedPerm& p) const { return p.hash(); }
};
