// finlang command line: count, compare, cells, tables, oracle.
// Talks to the engine only through the C API.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "finlang/finlang.h"

namespace {

constexpr int kExitUsage = 2;

struct GroupArgs {
  std::string group;
  std::string config;
  std::int64_t q = 0;
  std::string pipeline = "auto";
  std::string json_path;
  std::optional<std::uint64_t> seed;
};

int report_error(flc_status s) {
  std::cerr << "finlang: " << flc_last_error() << "\n";
  return static_cast<int>(s);
}

bool read_file(std::string const& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_output(std::string const& text, std::string const& json_path) {
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out || !(out << text)) {
      std::cerr << "finlang: cannot write " << json_path << "\n";
      return false;
    }
  }
  std::cout << text;
  return true;
}

// --group takes a shortcut name or a config path; --config takes a path.
flc_status load_group(GroupArgs const& a, flc_group** g) {
  std::string path = a.config;
  if (path.empty() && std::filesystem::is_regular_file(a.group)) path = a.group;
  if (!path.empty()) {
    std::string text;
    if (!read_file(path, text)) {
      std::cerr << "finlang: cannot read " << path << "\n";
      return FLC_ERR_CONFIG;
    }
    flc_status const s = flc_group_parse(text.c_str(), a.q, g);
    return s == FLC_OK ? s : static_cast<flc_status>(report_error(s));
  }
  flc_status const s = flc_group_named(a.group.c_str(), a.q, g);
  return s == FLC_OK ? s : static_cast<flc_status>(report_error(s));
}

int run_count(GroupArgs const& a, bool comparing) {
  static std::map<std::string, flc_pipeline> const pipelines = {{"auto", FLC_PIPELINE_AUTO},
                                                                {"spectral", FLC_PIPELINE_SPECTRAL},
                                                                {"stratified", FLC_PIPELINE_STRATIFIED},
                                                                {"both", FLC_PIPELINE_BOTH}};
  flc_group* g = nullptr;
  if (flc_status s = load_group(a, &g); s != FLC_OK) return static_cast<int>(s);

  flc_report* r = nullptr;
  std::uint64_t seed = a.seed.value_or(0);
  std::uint64_t const* seed_ptr = a.seed ? &seed : nullptr;
  flc_pipeline const p = pipelines.at(a.pipeline);
  flc_status const s = comparing ? flc_compare(g, p, seed_ptr, &r) : flc_count(g, p, seed_ptr, &r);
  flc_group_free(g);
  if (s != FLC_OK && s != FLC_ERR_MISMATCH) return report_error(s);

  const char* json = nullptr;
  flc_report_json(r, &json);
  bool const written = write_output(json, a.json_path);
  flc_report_free(r);
  if (!written) return FLC_ERR_CONFIG;
  if (s == FLC_ERR_MISMATCH) return report_error(s);
  return 0;
}

int run_dump(flc_status (*fn)(const char*, char**), std::string const& type) {
  char* text = nullptr;
  if (flc_status s = fn(type.c_str(), &text); s != FLC_OK) return report_error(s);
  std::cout << text;
  flc_string_free(text);
  return 0;
}

void add_group_options(CLI::App* cmd, GroupArgs& a) {
  auto* group = cmd->add_option("--group", a.group, "shortcut name (sl2, gl2, pgl2, sl3, gl3, pgl3, sp4, so5, g2, torus1, o2) or config path");
  auto* config = cmd->add_option("--config", a.config, "config file path")->check(CLI::ExistingFile);
  group->excludes(config);
  config->excludes(group);
  cmd->add_option("--q", a.q, "field size (overrides the config)")->check(CLI::Range(2, 4096));
  cmd->add_option("--pipeline", a.pipeline, "spectral, stratified, both or auto")
      ->check(CLI::IsMember({"auto", "spectral", "stratified", "both"}));
  cmd->add_option("--json", a.json_path, "also write the report here");
  cmd->add_option("--seed", a.seed, "randomize the non-canonical choices");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Langlands correspondence counts"};
  app.require_subcommand(1);

  GroupArgs count_args, compare_args;
  auto* count = app.add_subcommand("count", "count irreducible characters");
  add_group_options(count, count_args);
  auto* compare = app.add_subcommand("compare", "count and check against the brute-force oracle");
  add_group_options(compare, compare_args);

  std::string cells_type, tables_type;
  auto* cells = app.add_subcommand("cells", "two-sided cells of a Weyl group");
  cells->add_option("--type", cells_type, "A1, A2, B2, C2 or G2")->required();
  auto* tables = app.add_subcommand("tables", "special unipotent classes and family groups");
  tables->add_option("--type", tables_type, "A1, A2, B2, C2 or G2")->required();

  std::string oracle_group;
  std::int64_t oracle_q = 0;
  auto* oracle = app.add_subcommand("oracle", "brute-force class count");
  oracle->add_option("--group", oracle_group, "oracle group name")->required();
  oracle->add_option("--q", oracle_q, "field size")->required()->check(CLI::Range(2, 64));

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (auto* cmd : {count, compare}) {
    if (!cmd->parsed()) continue;
    GroupArgs const& a = cmd == count ? count_args : compare_args;
    if (a.group.empty() && a.config.empty()) {
      std::cerr << "finlang: one of --group or --config is required\n";
      return kExitUsage;
    }
    return run_count(a, cmd == compare);
  }
  if (cells->parsed()) return run_dump(flc_cells_report, cells_type);
  if (tables->parsed()) return run_dump(flc_tables_report, tables_type);
  if (oracle->parsed()) {
    char* text = nullptr;
    if (flc_status s = flc_oracle_report(oracle_group.c_str(), oracle_q, &text); s != FLC_OK) return report_error(s);
    std::cout << text;
    flc_string_free(text);
    return 0;
  }
  return kExitUsage;
}
