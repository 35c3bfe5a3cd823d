// bgw: build, verify, search, render and export the wreath-product representations.

#include "bgw/catalog.hpp"
#include "bgw/diagram.hpp"
#include "bgw/export.hpp"
#include "bgw/named_groups.hpp"
#include "bgw/structure.hpp"
#include "bgw/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

using namespace bgw;
using nlohmann::json;

namespace {

// Bad input from the command line; exits with status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const CatalogGroup& group_arg(const std::string& name) {
  try {
    return catalog_group(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int expr_arg(const CatalogGroup& c, const std::string& expr) {
  try {
    return eval_expr(c, expr);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int report_exit(const std::vector<Report>& reports, bool as_json) {
  if (as_json) {
    json j = json::array();
    for (const auto& r : reports) j.push_back(r.to_json());
    std::cout << (reports.size() == 1 ? j[0] : j).dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << format_report(r);
    int bad = static_cast<int>(std::count_if(reports.begin(), reports.end(), [](const Report& r) { return !r.passed(); }));
    if (reports.size() > 1) std::cout << reports.size() - bad << " of " << reports.size() << " reports passed\n";
  }
  bool ok = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
  return ok ? 0 : 1;
}

std::vector<std::string> all_group_names() {
  auto keys = catalog_keys();
  for (int n = 2; n <= 8; ++n) {
    std::string k = "dic" + std::to_string(n);
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  }
  return keys;
}

int cmd_list_groups(bool as_json) {
  json j = json::array();
  for (const auto& k : all_group_names()) {
    const auto& c = catalog_group(k);
    j.push_back({{"key", k}, {"title", c.title}, {"order", c.group->order()}});
  }
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& g : j) {
      std::ostringstream line;
      line << g["key"].get<std::string>();
      std::string s = line.str();
      s.resize(std::max<std::size_t>(s.size() + 1, 22), ' ');
      std::cout << s << g["order"] << "\t" << g["title"].get<std::string>() << "\n";
    }
  }
  return 0;
}

int cmd_group_info(const std::string& name, bool as_json) {
  const auto& c = group_arg(name);
  const auto& g = *c.group;
  std::map<int, int> orders;
  for (int x = 0; x < g.order(); ++x) ++orders[g.elem_order(x)];
  json gens = json::array();
  for (const auto& n : c.generator_names) gens.push_back({{"name", n}, {"repr", g.repr(c.names.at(n))}});
  json center = json::array();
  for (int z : g.center()) center.push_back(catalog_repr(c, z));
  json spectrum = json::object();
  for (auto [o, k] : orders) spectrum[std::to_string(o)] = k;
  json j = {{"key", c.key},         {"title", c.title},        {"order", g.order()},
            {"isomorphism type", identify_group(g)}, {"generators", gens}, {"element orders", spectrum},
            {"center", center}};
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << c.title << " (" << c.key << ")\n";
  std::cout << "order            " << g.order() << "\n";
  std::cout << "type             " << identify_group(g) << "\n";
  std::cout << "generators      ";
  for (const auto& x : gens) std::cout << " " << x["name"].get<std::string>() << " = " << x["repr"].get<std::string>() << ";";
  std::cout << "\nelement orders  ";
  for (auto [o, k] : orders) std::cout << " " << k << " of order " << o << ";";
  std::cout << "\ncenter          ";
  for (const auto& z : center) std::cout << " " << z.get<std::string>();
  std::cout << "\n";
  return 0;
}

int cmd_eval(const std::string& name, const std::string& expr, bool as_json) {
  const auto& c = group_arg(name);
  int x = expr_arg(c, expr);
  std::string repr = catalog_repr(c, x);
  int order = c.group->elem_order(x);
  if (as_json)
    std::cout << json{{"group", c.key}, {"expr", expr}, {"element", repr}, {"order", order}}.dump(2) << "\n";
  else
    std::cout << repr << "\norder " << order << "\n";
  return 0;
}

std::vector<int> parse_subgroup(const CatalogGroup& c, const std::string& spec, std::vector<int>& gens) {
  const auto& g = *c.group;
  if (spec == "trivial" || spec == "1") return {g.identity()};
  if (spec == "center") return g.center();
  if (spec == "derived") return derived_subgroup(g);
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) gens.push_back(expr_arg(c, tok));
  if (gens.empty()) throw UsageError("empty --subgroup");
  return g.subgroup_of(gens);
}

BlockSystem parse_blocks(const std::string& spec, int degree) {
  std::vector<std::vector<int>> blocks;
  std::stringstream ss(spec);
  std::string block;
  while (std::getline(ss, block, ';')) {
    std::vector<int> pts;
    std::stringstream bs(block);
    std::string p;
    while (std::getline(bs, p, ',')) {
      try {
        pts.push_back(std::stoi(p));
      } catch (const std::exception&) {
        throw UsageError("bad --blocks point: " + p);
      }
    }
    blocks.push_back(pts);
  }
  try {
    return make_block_system(degree, blocks);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_embed(const std::string& name, const std::string& sub, const std::string& ordering, const std::string& blocks) {
  const auto& c = group_arg(name);
  const auto& g = *c.group;
  std::vector<int> gens;
  auto h = parse_subgroup(c, sub, gens);
  if (ordering == "powers") {
    if (gens.size() != 1) throw UsageError("--ordering powers needs a single generator");
    if (static_cast<int>(h.size()) != g.elem_order(gens[0])) throw UsageError("subgroup is not cyclic on that generator");
    h.clear();
    for (int k = 0, x = g.identity(); k < g.elem_order(gens[0]); ++k, x = g.mul(x, gens[0])) h.push_back(x);
  } else if (ordering != "index") {
    throw UsageError("unknown --ordering: " + ordering);
  }
  auto cosets = left_cosets(c.group, h);
  Embedding e;
  if (blocks.empty()) {
    e = kk_embed(cosets);
  } else {
    std::vector<Perm> action;
    for (int x = 0; x < g.order(); ++x) action.push_back(coset_action(cosets, x));
    BlockSystem bs;
    if (blocks == "auto") {
      auto systems = find_block_systems(action, cosets.count());
      auto it = std::find_if(systems.begin(), systems.end(), [](const BlockSystem& s) { return !s.trivial(); });
      if (it == systems.end()) throw UsageError("the coset action has no nontrivial block system");
      bs = *it;
    } else {
      bs = parse_blocks(blocks, cosets.count());
    }
    try {
      e = block_embed(c.group, action, bs);
    } catch (const std::invalid_argument& err) {
      throw UsageError(err.what());
    }
  }
  auto rep = verify_embedding(e);
  auto j = embedding_to_json(e, &c);
  j["report"] = {{"homomorphism", rep.homomorphism}, {"injective", rep.injective}, {"top", rep.top_name},
                 {"beads", rep.bead_name}, {"base", rep.base_name}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_render(const std::string& name, const std::string& expr, std::string rep, const std::string& format,
               const std::string& style, const std::string& out, const std::string& caption) {
  const auto& c = group_arg(name);
  int x = expr_arg(c, expr);
  DiagramFormat fmt;
  DiagramStyle st;
  try {
    fmt = parse_format(format);
    st = parse_style(style);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<std::string> candidates;
  if (rep == "auto")
    candidates = embedding_keys();
  else
    candidates = {rep};
  for (const auto& key : candidates) {
    Embedding e;
    try {
      e = named_embedding(key);
    } catch (const std::invalid_argument& err) {
      throw UsageError(err.what());
    }
    int at = e.domain->index_of(c.group->element(x));
    if (at < 0) continue;
    DiagramSpec d;
    try {
      d = diagram_from_wreath(e.image(at), st, caption.empty() ? catalog_repr(c, x) : caption);
    } catch (const std::invalid_argument& err) {
      throw UsageError(err.what());
    }
    write_out(render(d, fmt), out);
    return 0;
  }
  throw UsageError(rep == "auto" ? "no representation has " + c.key + " as its domain"
                                 : "representation " + rep + " is not defined on " + c.key);
}

int cmd_export(const std::string& name, const std::string& path) {
  const auto& c = group_arg(name);
  auto j = group_to_json(*c.group, true);
  j["key"] = c.key;
  j["names"] = c.names;
  write_out(j.dump(2) + "\n", path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wreath-product representations of the finite subgroups of SU(2)"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  auto* list = app.add_subcommand("list-groups", "catalog groups");

  auto* group = app.add_subcommand("group", "group queries");
  group->require_subcommand(1);
  std::string group_name;
  auto* info = group->add_subcommand("info", "order, generators, element orders, center");
  info->add_option("name", group_name)->required();

  auto* embed = app.add_subcommand("embed", "coset embedding of a catalog group, as JSON");
  std::string sub, ordering = "index", blocks;
  embed->add_option("group", group_name)->required();
  embed->add_option("--subgroup", sub, "generators (comma separated), or trivial|center|derived")->required();
  embed->add_option("--ordering", ordering, "index|powers")->capture_default_str();
  embed->add_option("--blocks", blocks, "auto, or blocks of coset indices like 0,1;2,3");

  auto* verify = app.add_subcommand("verify", "verification reports");
  verify->require_subcommand(1);
  auto* theorem = verify->add_subcommand("theorem1", "the eleven items");
  int item = 0;
  theorem->add_option("--item", item, "only item k")->check(CLI::Range(1, 11));
  auto* tables = verify->add_subcommand("tables", "replay the golden tables");
  std::string golden;
  tables->add_option("--dir", golden, "golden table directory");
  auto* vall = verify->add_subcommand("all", "every report");

  auto* search = app.add_subcommand("search", "exhaustive searches");
  search->require_subcommand(1);
  auto* noext = search->add_subcommand("no-extension", "extensions of the binary tetrahedral ribbon map");
  auto* icosa = search->add_subcommand("icosa-twists", "twist vectors for the binary icosahedral group");
  auto* item8 = search->add_subcommand("item8", "binary octahedral generators in (Q8)^3 x| Sigma3");

  auto* eval = app.add_subcommand("eval", "evaluate an element expression");
  std::string expr;
  eval->add_option("group", group_name)->required();
  eval->add_option("expr", expr)->required();

  auto* rend = app.add_subcommand("render", "draw the image of an element");
  std::string rep = "auto", format = "ascii", style = "beads", out, caption;
  rend->add_option("group", group_name)->required();
  rend->add_option("expr", expr)->required();
  rend->add_option("--rep", rep, "item number or representation key")->capture_default_str();
  rend->add_option("--format", format, "svg|ascii")->capture_default_str();
  rend->add_option("--style", style, "beads|twists|bundles")->capture_default_str();
  rend->add_option("--out", out, "output file");
  rend->add_option("--caption", caption, "caption (default: the element)");

  auto* exp = app.add_subcommand("export", "group table as JSON");
  std::string path;
  exp->add_option("group", group_name)->required();
  exp->add_option("--json", path, "output file, - for stdout")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*list) return cmd_list_groups(as_json);
    if (*info) return cmd_group_info(group_name, as_json);
    if (*embed) return cmd_embed(group_name, sub, ordering, blocks);
    if (*theorem) return report_exit(item ? std::vector<Report>{verify_item(item)} : verify_theorem(), as_json);
    if (*tables) return report_exit({verify_tables(golden.empty() ? golden_dir() : golden)}, as_json);
    if (*vall) return report_exit(verify_all(), as_json);
    if (*noext) return report_exit({no_extension_search()}, as_json);
    if (*icosa) return report_exit({icosa_twist_search()}, as_json);
    if (*item8) return report_exit({item8_search()}, as_json);
    if (*eval) return cmd_eval(group_name, expr, as_json);
    if (*rend) return cmd_render(group_name, expr, rep, format, style, out, caption);
    if (*exp) return cmd_export(group_name, path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
