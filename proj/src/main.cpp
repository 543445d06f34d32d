#include <array>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "laman/cli.hpp"

namespace {

void add_common_flags(CLI::App* cmd, laman::JobConfig& cfg, std::string& format) {
  cmd->add_option("input", cfg.input_path, "Input file, or - for standard input");
  std::map<std::string, laman::InputFormat> informats{
      {"auto", laman::InputFormat::auto_detect},
      {"graph6", laman::InputFormat::graph6},
      {"edges", laman::InputFormat::edge_list}};
  cmd->add_option("--input-format", cfg.in_format, "Input format")
      ->transform(CLI::CheckedTransformer(informats, CLI::ignore_case));
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--output,-o", cfg.output_path, "Output file (default standard output)");
}

void add_engine_flags(CLI::App* cmd, laman::JobConfig& cfg, std::string& strategy) {
  cmd->add_option("--jobs,-j", cfg.jobs, "Worker threads for independent graphs")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tree-jobs", cfg.tree_jobs,
                  "Threads forking a single recursion at its root splits (perturbs stats counters)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cache", cfg.cache_path, "Memo cache file (default $LAMAN_CACHE)");
  cmd->add_option("--timeout", cfg.timeout_seconds, "Per-graph time budget in seconds")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--stats", cfg.stats, "Include nodes_visited/memo_hits/seconds in records");
  cmd->add_flag("--sorted", cfg.sorted, "Emit records in input order even with --jobs > 1");
  cmd->add_option("--strategy", strategy, "Biedge selection strategy")
      ->check(CLI::IsMember({"auto", "first-id"}));
  cmd->add_flag("--big", cfg.big, "Arbitrary-precision counts (no 64-bit overflow errors)");
}

laman::OutputFormat parse_format(const std::string& s) {
  if (s == "json") return laman::OutputFormat::json;
  if (s == "csv") return laman::OutputFormat::csv;
  return laman::OutputFormat::text;
}

void finish_config(laman::JobConfig& cfg, const std::string& format, const std::string& strategy,
                   bool engine_command) {
  cfg.out_format = parse_format(format);
  cfg.strategy = strategy == "first-id" ? laman::BiedgeStrategy::first_id
                                        : laman::BiedgeStrategy::auto_estimate;
  if (engine_command && cfg.cache_path.empty()) {
    if (const char* env = std::getenv("LAMAN_CACHE")) cfg.cache_path = env;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts complex realizations of minimally rigid graphs and evaluates the gluing bounds"};
  app.require_subcommand(1);

  laman::JobConfig cfg;
  std::string format = "text";
  std::string strategy = "auto";

  auto* check = app.add_subcommand("check", "Classify each input graph (laman/flexible/overconstrained/mixed)");
  add_common_flags(check, cfg, format);
  check->add_option("--jobs,-j", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  check->add_flag("--sorted", cfg.sorted, "Emit records in input order");

  auto* count = app.add_subcommand("count", "Count complex realizations of each input graph");
  add_common_flags(count, cfg, format);
  add_engine_flags(count, cfg, strategy);

  auto* max = app.add_subcommand("max", "Report the per-n maximum count over the input stream");
  add_common_flags(max, cfg, format);
  add_engine_flags(max, cfg, strategy);

  auto* construct = app.add_subcommand("construct", "Glue copies of a base graph");
  laman::ConstructArgs cargs;
  std::vector<int> edge_flag, triangle_flag;
  std::string construct_format = "graph6";
  construct->add_option("kind", cargs.kind, "caterpillar, fan, or gfan")
      ->required()
      ->check(CLI::IsMember({"caterpillar", "fan", "gfan"}));
  construct->add_option("input", cfg.input_path, "Base graph file, or - for standard input");
  construct->add_option("--input-format", cfg.in_format, "Input format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, laman::InputFormat>{{"auto", laman::InputFormat::auto_detect},
                                                    {"graph6", laman::InputFormat::graph6},
                                                    {"edges", laman::InputFormat::edge_list}},
          CLI::ignore_case));
  construct->add_option("--copies,-k", cargs.copies, "Number of glued copies")
      ->check(CLI::PositiveNumber);
  construct->add_option("--edge", edge_flag, "Shared edge for caterpillar (two vertex ids)")
      ->expected(2);
  construct->add_option("--triangle", triangle_flag, "Shared triangle for fan (three vertex ids)")
      ->expected(3);
  construct->add_option("--subgraph", cargs.subgraph_path, "Shared subgraph file for gfan");
  construct->add_option("--format", construct_format, "Output graph format")
      ->check(CLI::IsMember({"graph6", "edges"}));
  construct->add_option("--output,-o", cfg.output_path, "Output file");

  auto* bound = app.add_subcommand("bound", "Exact lower bound of a gluing construction");
  std::string bound_kind, bound_subgraph;
  long bound_n = 0;
  bound->add_option("kind", bound_kind, "caterpillar, fan, or gfan")
      ->required()
      ->check(CLI::IsMember({"caterpillar", "fan", "gfan"}));
  bound->add_option("input", cfg.input_path, "Base graph file, or - for standard input");
  bound->add_option("-n,--vertices", bound_n, "Target vertex count")->required();
  bound->add_option("--subgraph", bound_subgraph, "Shared subgraph file for gfan");
  bound->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  bound->add_option("--output,-o", cfg.output_path, "Output file");

  auto* rate = app.add_subcommand("rate", "Per-vertex growth rate of a gluing construction");
  std::string rate_kind, rate_subgraph;
  rate->add_option("kind", rate_kind, "caterpillar, fan, or gfan")
      ->required()
      ->check(CLI::IsMember({"caterpillar", "fan", "gfan"}));
  rate->add_option("input", cfg.input_path, "Base graph file, or - for standard input");
  rate->add_option("--subgraph", rate_subgraph, "Shared subgraph file for gfan");
  rate->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  rate->add_option("--output,-o", cfg.output_path, "Output file");

  auto* exports = app.add_subcommand("export-system", "Emit the quadratic realization system as JSON");
  laman::ExportArgs eargs;
  long pin_flag = -1;
  exports->add_option("input", cfg.input_path, "Graph file, or - for standard input");
  exports->add_option("--pin", pin_flag, "Vertex pinned to the origin (default: smallest id)");
  exports->add_option("--seed", eargs.seed, "Seed for the generated realization");
  exports->add_option("--labels", eargs.labels_path,
                      "JSON file with squared edge lengths: [{\"edge\":[u,v],\"re\":..,\"im\":..}]");
  exports->add_option("--format", format, "json for compact output")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  exports->add_option("--output,-o", cfg.output_path, "Output file");

  auto* dataset = app.add_subcommand("dataset", "Print the bundled fixture graphs");
  dataset->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  dataset->add_option("--output,-o", cfg.output_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  finish_config(cfg, format, strategy, count->parsed() || max->parsed());

  if (check->parsed()) return laman::run_check(cfg, std::cin, std::cout, std::cerr);
  if (count->parsed()) return laman::run_count(cfg, std::cin, std::cout, std::cerr);
  if (max->parsed()) return laman::run_max(cfg, std::cin, std::cout, std::cerr);
  if (construct->parsed()) {
    try {
      if (edge_flag.size() == 2) cargs.edge = laman::make_edge(edge_flag[0], edge_flag[1]);
    } catch (const laman::invalid_input_error& e) {
      std::cerr << e.what() << "\n";
      return 1;
    }
    if (triangle_flag.size() == 3) {
      cargs.triangle = std::array<laman::Vertex, 3>{triangle_flag[0], triangle_flag[1], triangle_flag[2]};
    }
    cargs.edges_output = construct_format == "edges";
    return laman::run_construct(cfg, cargs, std::cin, std::cout, std::cerr);
  }
  if (bound->parsed()) {
    return laman::run_bound(cfg, bound_kind, bound_n, bound_subgraph, std::cin, std::cout, std::cerr);
  }
  if (rate->parsed()) {
    return laman::run_rate(cfg, rate_kind, rate_subgraph, std::cin, std::cout, std::cerr);
  }
  if (exports->parsed()) {
    if (pin_flag >= 0) eargs.pin = static_cast<laman::Vertex>(pin_flag);
    return laman::run_export_system(cfg, eargs, std::cin, std::cout, std::cerr);
  }
  if (dataset->parsed()) return laman::run_dataset(cfg, std::cin, std::cout, std::cerr);
  return 0;
}
