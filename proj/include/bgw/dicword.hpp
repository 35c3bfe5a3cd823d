#pragma once

#include <cstddef>
#include <string>

namespace bgw {

// rho^k x^eps in Dic_n = <rho, x | rho^2n = 1, x^2 = rho^n, rho x = x rho^-1>.
struct DicWord {
  int n = 2;
  int k = 0;    // 0 <= k < 2n
  int eps = 0;  // 0 or 1

  static DicWord make(int n, long long k, int eps);
  static DicWord rho(int n) { return make(n, 1, 0); }
  static DicWord x(int n) { return make(n, 0, 1); }
  static DicWord one(int n) { return make(n, 0, 0); }

  friend bool operator==(const DicWord& a, const DicWord& b) {
    return a.n == b.n && a.k == b.k && a.eps == b.eps;
  }
  std::size_t hash() const { return static_cast<std::size_t>((n * 1000 + k) * 2 + eps); }
};

DicWord dic_mul(const DicWord& a, const DicWord& b);
DicWord dic_inv(const DicWord& a);
// "1", "rho^3", "x", "rho^2*x"
std::string to_string(const DicWord& w);

}  // namespace bgw

template <>
struct std::hash<bgw::DicWord> {
  std::size_t operator()(const bgw::DicWord& w) const { return w.hash(); }
};
