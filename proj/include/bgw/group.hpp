#pragma once

#include "bgw/dicword.hpp"
#include "bgw/modmat.hpp"
#include "bgw/perm.hpp"
#include "bgw/quaternion.hpp"
#include "bgw/wreath.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace bgw {

using GroupElem = std::variant<Quaternion, Perm, SignedPerm, ModMatrix, DicWord, WreathElem>;

GroupElem elem_mul(const GroupElem& a, const GroupElem& b);
GroupElem elem_inv(const GroupElem& a);
std::string elem_repr(const GroupElem& a);
const char* elem_tag(const GroupElem& a);

struct GroupElemHash {
  std::size_t operator()(const GroupElem& e) const;
};

// Fully materialized finite group with a multiplication table.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultCap = 10000;

  // Left-multiplication closure of the generators. Throws std::length_error
  // past `cap` elements and std::invalid_argument on mixed element types.
  static std::shared_ptr<FiniteGroup> closure(std::string name, const std::vector<GroupElem>& generators,
                                              std::size_t cap = kDefaultCap);
  // Builds the table by direct products; the list must be a group.
  static std::shared_ptr<FiniteGroup> from_elements(std::string name, std::vector<GroupElem> elements);

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  const GroupElem& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<GroupElem>& elements() const { return elements_; }
  // -1 when absent.
  int index_of(const GroupElem& e) const;
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int identity() const { return identity_; }
  const std::vector<int>& generators() const { return generators_; }
  const std::vector<int>& table() const { return table_; }

  int pow(int a, long long e) const;
  int elem_order(int a) const;
  std::string repr(int a) const { return elem_repr(element(a)); }

  // Sorted element set of the generated subgroup.
  std::vector<int> subgroup_of(const std::vector<int>& gens) const;
  std::vector<int> center() const;
  // Sorted multiset of element orders.
  std::vector<int> order_spectrum() const;
  bool is_latin_square() const;
  // Compares `checks` random table entries and associativity triples with
  // direct element arithmetic.
  bool spot_check(int checks, unsigned seed = 1) const;

  // A new group whose elements are the given members, in the given order.
  std::shared_ptr<FiniteGroup> subgroup_group(std::string name, const std::vector<int>& ordered) const;

  // Left-regular permutation of h acting on the listed elements:
  // position l goes to the position of h * ordered[l].
  Perm left_regular_perm(int h, const std::vector<int>& ordered) const;

 private:
  FiniteGroup() = default;
  void finish();

  std::string name_;
  int n_ = 0;
  std::vector<GroupElem> elements_;
  std::unordered_map<GroupElem, int, GroupElemHash> index_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> generators_;
  int identity_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& set);
bool is_normal(const FiniteGroup& g, const std::vector<int>& subgroup);

struct Quotient {
  GroupPtr group;          // action on the left cosets of N, as permutations
  std::vector<int> proj;   // element index of G -> element index of G/N
  std::vector<std::vector<int>> cosets;
};
// Throws std::invalid_argument when N is not normal.
Quotient quotient(const GroupPtr& g, const std::vector<int>& normal_subgroup);

// Symmetric group on n points generated by (0 1) and (0 1 ... n-1).
GroupPtr symmetric_group(int n);
GroupPtr perm_group(std::string name, const std::vector<Perm>& gens);

}  // namespace bgw
