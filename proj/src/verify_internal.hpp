#pragma once

// Helpers shared by the verify_*.cpp sources.

#include "bgw/catalog.hpp"
#include "bgw/verify.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace bgw::detail {

int ev(const CatalogGroup& c, const std::string& expr);
std::vector<int> evs(const CatalogGroup& c, const std::vector<std::string>& exprs);

// Left multiplication on the listed elements, one permutation per element of g.
std::vector<Perm> regular_action(const FiniteGroup& g, const std::vector<int>& points);
// {0,4},{1,5},{2,6},{3,7}
BlockSystem antipodal_blocks();

// Column j of the result is -e_{top(j)} exactly when the bead on strand top(j) is nontrivial.
SignedPerm signed_from_z2(const WreathElem& w);

struct SigmaTower {
  CosetDecomposition c3;
  Embedding sigma3;
  CosetDecomposition c4;
  Embedding outer;   // Sigma4 into H^4 x| Sigma4, H = Sigma{2,3,4}
  Embedding inner;   // H into (Z/2)^3 x| Sigma3
  Embedding nested;
};
SigmaTower build_sigma_tower();

// Actions of a and t on the cosets t^n <a,b> (n = 0..4) of the binary icosahedral group.
struct IcosaCosets {
  CosetDecomposition cosets;
  Perm a, t, a3, t5;
};
IcosaCosets icosa_cosets();

// The item 4 map written through the table labelling of the cosets of N = <a^2>
// in the binary tetrahedral group.
Embedding tetrahedral_ribbons();

nlohmann::json load_json(const std::string& path);
// The "tables" array of a golden file, by value.
nlohmann::json load_tables(const std::string& path);
TableResult replay_table(const nlohmann::json& table, const std::string& file);

template <class F>
Report timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  Report r = f();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace bgw::detail
