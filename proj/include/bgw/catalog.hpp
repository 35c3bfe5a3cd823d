#pragma once

#include "bgw/group.hpp"

#include <map>
#include <string>
#include <vector>

namespace bgw {

// A group with named elements that expressions can refer to.
struct CatalogGroup {
  std::string key;
  std::string title;
  GroupPtr group;
  std::map<std::string, int> names;        // name -> element index
  std::vector<std::string> generator_names;
};

std::vector<std::string> catalog_keys();
// Accepts the keys above plus dic2..dic8 and a few aliases ("Q8", "SL2(Z/3)").
// Throws std::invalid_argument for unknown names.
const CatalogGroup& catalog_group(const std::string& key);

// Words like "a*f^2*a^-1", "(a*f)^2", "-1", "1", "{(1/2) + (1/2)i}" with the
// braces holding an element literal of the group's type. Throws
// std::invalid_argument on parse errors and unknown names.
int eval_expr(const CatalogGroup& g, const std::string& expr);

// Repr used in tables and CLI output: the catalog name when one exists
// (shortest spelling, then alphabetical), otherwise the element's own repr.
std::string catalog_repr(const CatalogGroup& g, int element);

}  // namespace bgw
