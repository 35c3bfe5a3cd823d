#include "bgw/dicword.hpp"

#include <stdexcept>

namespace bgw {

DicWord DicWord::make(int n, long long k, int eps) {
  if (n < 1) throw std::invalid_argument("Dic_n needs n >= 1");
  if (eps != 0 && eps != 1) throw std::invalid_argument("DicWord eps must be 0 or 1");
  long long m = 2LL * n;
  return {n, static_cast<int>(((k % m) + m) % m), eps};
}

DicWord dic_mul(const DicWord& a, const DicWord& b) {
  if (a.n != b.n) throw std::invalid_argument("dic_mul: different n");
  if (a.eps == 0) return DicWord::make(a.n, a.k + b.k, b.eps);
  // x rho^k = rho^-k x, and x^2 = rho^n.
  if (b.eps == 0) return DicWord::make(a.n, a.k - b.k, 1);
  return DicWord::make(a.n, a.k - b.k + a.n, 0);
}

DicWord dic_inv(const DicWord& a) {
  if (a.eps == 0) return DicWord::make(a.n, -a.k, 0);
  return DicWord::make(a.n, a.k + a.n, 1);
}

std::string to_string(const DicWord& w) {
  std::string r;
  if (w.k == 1) r = "rho";
  if (w.k > 1) r = "rho^" + std::to_string(w.k);
  if (w.eps == 0) return r.empty() ? "1" : r;
  return r.empty() ? "x" : r + "*x";
}

}  // namespace bgw
