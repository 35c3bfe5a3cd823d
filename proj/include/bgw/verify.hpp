#pragma once

#include "bgw/embedding.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace bgw {

enum class Status { verified, verified_with_derivation, discrepancy };
std::string to_string(Status s);

struct Report {
  Report() = default;
  Report(std::string id_, std::string title_) : id(std::move(id_)), title(std::move(title_)) {}

  std::string id;
  std::string title;
  // Status when every check passes; any failed check turns it into discrepancy.
  Status claimed = Status::verified;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::string> notes;
  nlohmann::json data = nlohmann::json::object();
  double seconds = 0;

  bool check(bool ok, const std::string& what) {
    checks.emplace_back(what, ok);
    return ok;
  }
  Status status() const;
  bool passed() const { return status() != Status::discrepancy; }
  std::vector<std::string> failures() const;
  nlohmann::json to_json() const;
};

// Default location of the golden tables: $BGW_GOLDEN_DIR, else the build-time path.
std::string golden_dir();

// Primary embedding for item k (1..11; `n` selects
// the dicyclic parameter for item 3). Throws std::invalid_argument for k out of range.
Embedding item_embedding(int k, int n = 3);

// Every representation the library builds, by key: "item1".."item11",
// "item3-dic2".."item3-dic8", "tetrahedral-ribbons", "sigma3", "sigma4",
// "sigma4-inner", "sigma4-nested".
std::vector<std::string> embedding_keys();
// Also accepts a bare item number. Throws std::invalid_argument for unknown keys.
Embedding named_embedding(const std::string& key);

Report verify_item(int k);
std::vector<Report> verify_theorem();

struct TableResult {
  std::string id;
  std::string file;
  std::string location;
  std::string kind;
  int cells = 0;
  int errata = 0;                       // erratum cells whose correction was confirmed
  std::vector<std::string> mismatches;  // cell-level diffs
  bool ok() const { return mismatches.empty() && cells > 0; }
};
std::vector<TableResult> replay_tables(const std::string& dir = golden_dir());
Report verify_tables(const std::string& dir = golden_dir());

Report no_extension_search();
Report item8_search();
Report icosa_twist_search();
Report sigma_tower();
Report t_powers_check();
Report double_cover_check();
Report group_orders_check();

// Everything above, in a fixed order.
std::vector<Report> verify_all();

// Human-readable block for one report.
std::string format_report(const Report& r);

}  // namespace bgw
