#include "bgw/verify.hpp"

#include "verify_internal.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#ifndef BGW_DEFAULT_GOLDEN_DIR
#define BGW_DEFAULT_GOLDEN_DIR "data/golden"
#endif

namespace bgw {

std::string to_string(Status s) {
  switch (s) {
    case Status::verified:
      return "verified";
    case Status::verified_with_derivation:
      return "verified-with-derivation";
    case Status::discrepancy:
      return "discrepancy";
  }
  return "?";
}

Status Report::status() const {
  for (const auto& [what, ok] : checks) {
    if (!ok) return Status::discrepancy;
  }
  return checks.empty() ? Status::discrepancy : claimed;
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto& [what, ok] : checks) {
    if (!ok) out.push_back(what);
  }
  return out;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["title"] = title;
  j["status"] = to_string(status());
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& [what, ok] : checks) cs.push_back({{"check", what}, {"ok", ok}});
  j["checks"] = cs;
  j["notes"] = notes;
  j["data"] = data;
  j["seconds"] = seconds;
  return j;
}

std::string golden_dir() {
  if (const char* env = std::getenv("BGW_GOLDEN_DIR"); env && *env) return env;
  return BGW_DEFAULT_GOLDEN_DIR;
}

std::string format_report(const Report& r) {
  std::ostringstream os;
  os << "[" << to_string(r.status()) << "] " << r.id << ": " << r.title << "  (" << r.checks.size() << " checks, ";
  os.precision(3);
  os << std::fixed << r.seconds << " s)\n";
  for (const auto& [what, ok] : r.checks) {
    if (!ok) os << "    FAILED " << what << "\n";
  }
  for (const auto& n : r.notes) os << "    note: " << n << "\n";
  return os.str();
}

std::vector<std::string> embedding_keys() {
  std::vector<std::string> keys;
  for (int k = 1; k <= 11; ++k) keys.push_back("item" + std::to_string(k));
  for (int n = 2; n <= 8; ++n) keys.push_back("item3-dic" + std::to_string(n));
  for (const char* k : {"tetrahedral-ribbons", "sigma3", "sigma4", "sigma4-inner", "sigma4-nested"}) keys.emplace_back(k);
  return keys;
}

Embedding named_embedding(const std::string& key) {
  std::string k = key.rfind("item", 0) == 0 ? key.substr(4) : key;
  if (k.rfind("3-dic", 0) == 0 && k.size() == 6 && k[5] >= '2' && k[5] <= '8') return item_embedding(3, k[5] - '0');
  if (!k.empty() && k.size() <= 2 && std::all_of(k.begin(), k.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    int n = std::stoi(k);
    if (n >= 1 && n <= 11) return item_embedding(n);
  }
  if (key == "tetrahedral-ribbons") return detail::tetrahedral_ribbons();
  if (key == "sigma3") return detail::build_sigma_tower().sigma3;
  if (key == "sigma4") return detail::build_sigma_tower().outer;
  if (key == "sigma4-inner") return detail::build_sigma_tower().inner;
  if (key == "sigma4-nested") return detail::build_sigma_tower().nested;
  throw std::invalid_argument("unknown representation: " + key);
}

std::vector<Report> verify_all() {
  std::vector<Report> out = {group_orders_check()};
  for (auto& r : verify_theorem()) out.push_back(std::move(r));
  out.push_back(verify_tables());
  out.push_back(no_extension_search());
  out.push_back(item8_search());
  out.push_back(icosa_twist_search());
  out.push_back(sigma_tower());
  out.push_back(t_powers_check());
  out.push_back(double_cover_check());
  return out;
}

std::vector<Report> verify_theorem() {
  std::vector<Report> out;
  for (int k = 1; k <= 11; ++k) out.push_back(verify_item(k));
  return out;
}

}  // namespace bgw
