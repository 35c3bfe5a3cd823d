#include "bgw/export.hpp"

namespace bgw {

using nlohmann::json;

json group_to_json(const FiniteGroup& g, bool with_table) {
  json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["generators"] = g.generators();
  j["elements"] = json::array();
  for (int x = 0; x < g.order(); ++x) j["elements"].push_back({{"index", x}, {"repr", g.repr(x)}, {"order", g.elem_order(x)}});
  if (with_table) j["table"] = g.table();
  return j;
}

json wreath_to_json(const WreathElem& w) {
  json j;
  j["arity"] = w.arity();
  j["base_group"] = w.base ? w.base->name() : "";
  j["beads"] = json::array();
  for (int b : w.beads) j["beads"].push_back(w.base->repr(b));
  j["top"] = cycles_print(w.top);
  return j;
}

json embedding_to_json(const Embedding& e, const CatalogGroup* names) {
  json j;
  j["domain"] = e.domain->name();
  j["base_group"] = e.base->name();
  j["arity"] = e.arity;
  j["provenance"] = e.provenance;
  if (e.is_homomorphism) j["verified"] = {{"homomorphism", *e.is_homomorphism}, {"injective", e.is_injective.value_or(false)}};
  j["images"] = json::array();
  for (int g = 0; g < e.domain->order(); ++g) {
    std::string label = names && names->group == e.domain ? catalog_repr(*names, g) : e.domain->repr(g);
    j["images"].push_back({{"index", g}, {"element", label}, {"image", wreath_to_json(e.image(g))}});
  }
  return j;
}

namespace {

std::string need(const json& j, const char* key, json::value_t type) {
  if (!j.is_object() || !j.contains(key)) return std::string("missing ") + key;
  auto t = j.at(key).type();
  if (t == type) return "";
  if (type == json::value_t::number_integer && t == json::value_t::number_unsigned) return "";
  return std::string("wrong type for ") + key;
}

}  // namespace

std::string check_group_json(const json& j) {
  for (auto [k, t] : {std::pair{"name", json::value_t::string}, {"order", json::value_t::number_integer},
                      {"generators", json::value_t::array}, {"elements", json::value_t::array}})
    if (auto m = need(j, k, t); !m.empty()) return m;
  int n = j["order"];
  if (static_cast<int>(j["elements"].size()) != n) return "elements do not match the order";
  for (std::size_t i = 0; i < j["elements"].size(); ++i) {
    const auto& e = j["elements"][i];
    for (auto [k, t] : {std::pair{"index", json::value_t::number_integer}, {"repr", json::value_t::string},
                        {"order", json::value_t::number_integer}})
      if (auto m = need(e, k, t); !m.empty()) return "element: " + m;
    if (e["index"] != i) return "element indices out of sequence";
  }
  if (j.contains("table") && j["table"].size() != static_cast<std::size_t>(n) * n) return "table size";
  return "";
}

std::string check_wreath_json(const json& j) {
  for (auto [k, t] : {std::pair{"arity", json::value_t::number_integer}, {"base_group", json::value_t::string},
                      {"beads", json::value_t::array}, {"top", json::value_t::string}})
    if (auto m = need(j, k, t); !m.empty()) return m;
  if (j["beads"].size() != j["arity"].get<std::size_t>()) return "bead count differs from arity";
  for (const auto& b : j["beads"])
    if (!b.is_string()) return "bead is not a string";
  return "";
}

std::string check_embedding_json(const json& j) {
  for (auto [k, t] : {std::pair{"domain", json::value_t::string}, {"base_group", json::value_t::string},
                      {"arity", json::value_t::number_integer}, {"provenance", json::value_t::object},
                      {"images", json::value_t::array}})
    if (auto m = need(j, k, t); !m.empty()) return m;
  for (const auto& im : j["images"]) {
    if (auto m = need(im, "image", json::value_t::object); !m.empty()) return m;
    if (auto m = check_wreath_json(im["image"]); !m.empty()) return "image: " + m;
    if (im["image"]["arity"] != j["arity"]) return "image arity";
  }
  return "";
}

}  // namespace bgw
