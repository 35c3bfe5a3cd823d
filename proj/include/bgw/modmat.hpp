#pragma once

#include "bgw/perm.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bgw {

class FiniteGroup;

// 2x2 matrix [[a,b],[c,d]] over Z/p with residues in {0..p-1}.
struct ModMatrix {
  int p = 3;
  int a = 1, b = 0, c = 0, d = 1;

  static ModMatrix make(int p, long long a, long long b, long long c, long long d);
  static ModMatrix identity(int p) { return make(p, 1, 0, 0, 1); }

  int det() const;
  friend bool operator==(const ModMatrix& x, const ModMatrix& y) {
    return x.p == y.p && x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  std::size_t hash() const { return static_cast<std::size_t>((((p * 7 + a) * 7 + b) * 7 + c) * 7 + d); }
};

ModMatrix mm_mul(const ModMatrix& x, const ModMatrix& y);
ModMatrix mm_inv(const ModMatrix& x);
// Balanced residue: for p = 3 entries print in {-1, 0, 1}.
int balanced(int r, int p);
// "[[1,0],[-1,1]] mod 3"
std::string to_string(const ModMatrix& m);
// Accepts "[[1,0],[-1,1]]" with optional " mod p" (default p = 3).
ModMatrix parse_mod_matrix(std::string_view text, int default_p = 3);

// Labels for the nonzero vectors of (Z/p)^2; label v and label -v differ by
// (p^2 - 1)/2.
class VectorLabeling {
 public:
  VectorLabeling(int p, std::vector<std::pair<int, int>> vectors);
  // The labeling 0<->(1,0), 1<->(1,1), 2<->(1,-1), 3<->(0,1) and negatives +4.
  static VectorLabeling standard_mod3();
  // First half lexicographic representatives, second half their negatives.
  static VectorLabeling default_for(int p);

  int p() const { return p_; }
  int size() const { return static_cast<int>(vectors_.size()); }
  int antipodal_offset() const { return size() / 2; }
  std::pair<int, int> vector(int label) const { return vectors_.at(static_cast<std::size_t>(label)); }
  int label(int x, int y) const;

 private:
  int p_;
  std::vector<std::pair<int, int>> vectors_;
  std::vector<int> index_;
};

// Permutation of labels under v -> M v (column vectors).
Perm mat_act_perm(const ModMatrix& m, const VectorLabeling& labels);

enum class DetCondition { det_one, det_nonzero };
std::shared_ptr<const FiniteGroup> enumerate_linear_groups(int p, DetCondition cond);

}  // namespace bgw

template <>
struct std::hash<bgw::ModMatrix> {
  std::size_t operator()(const bgw::ModMatrix& m) const { return m.hash(); }
};
