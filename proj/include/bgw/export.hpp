#pragma once

#include "bgw/catalog.hpp"
#include "bgw/embedding.hpp"

#include <nlohmann/json.hpp>

namespace bgw {

// {name, order, generators, elements: [{index, repr, order}], table?}
nlohmann::json group_to_json(const FiniteGroup& g, bool with_table = false);
// {arity, base_group, beads: [reprs], top: "cycle string"}
nlohmann::json wreath_to_json(const WreathElem& w);
// {domain, base_group, arity, provenance, images: [{index, element, image}]}.
// Domain elements are named through `names` when given.
nlohmann::json embedding_to_json(const Embedding& e, const CatalogGroup* names = nullptr);

// Empty when `j` has the shape written by the functions above, else the first problem found.
std::string check_group_json(const nlohmann::json& j);
std::string check_wreath_json(const nlohmann::json& j);
std::string check_embedding_json(const nlohmann::json& j);

}  // namespace bgw
