// Batch front end: rank / evaluate / bench / generate.
#include <cstdio>
#include <stdexcept>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "biface/baselines.hpp"
#include "biface/centrality.hpp"
#include "biface/errors.hpp"
#include "biface/graph.hpp"
#include "biface/sir.hpp"
#include "biface/timing.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

// Bad flag/config values (as opposed to runtime failures): exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
using Row = nlohmann::ordered_json;

struct RunConfig {
  std::string input;
  std::string format = "tsv";
  std::string manifest;
  std::vector<std::string> measures;
  double beta_start = 0.01;
  double beta_stop = 0.10;
  double beta_step = 0.01;
  std::size_t runs = 1000;
  std::size_t horizon = 10;
  std::uint64_t seed = 0;
  std::string output;
  std::string output_format = "json";
  std::string denominator = "algorithm";
};

biface::LoadOptions load_options(const RunConfig& cfg) {
  biface::LoadOptions opts;
  opts.format = cfg.format == "csv" ? biface::EdgeListFormat::csv : biface::EdgeListFormat::tsv;
  opts.node_manifest_path = cfg.manifest;
  return opts;
}

biface::DenominatorMode denominator_mode(const RunConfig& cfg) {
  return cfg.denominator == "equation" ? biface::DenominatorMode::equation
                                       : biface::DenominatorMode::algorithm;
}

std::vector<std::string> effective_measures(const RunConfig& cfg) {
  return cfg.measures.empty() ? biface::measure_names() : cfg.measures;
}

std::vector<double> beta_grid(const RunConfig& cfg) {
  if (!(cfg.beta_start > 0.0 && cfg.beta_stop <= 1.0 && cfg.beta_step > 0.0 &&
        cfg.beta_start <= cfg.beta_stop))
    throw UsageError("beta grid must lie within (0,1] with a positive step");
  std::vector<double> grid;
  for (double b = cfg.beta_start; b <= cfg.beta_stop + 1e-12; b += cfg.beta_step)
    grid.push_back(b);
  return grid;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw biface::InvalidInput("cannot open output file: " + path);
  out << text;
}

std::string render_rows(const std::vector<Row>& rows, const std::string& format) {
  if (format == "json") {
    Row arr = Row::array();
    for (const auto& r : rows) arr.push_back(r);
    return arr.dump(2) + "\n";
  }
  // CSV mirror: header from the first row's keys (insertion order preserved
  // by using ordered_json rows).
  std::string out;
  if (rows.empty()) return out;
  bool first = true;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
    if (!first) out += ',';
    out += it.key();
    first = false;
  }
  out += '\n';
  for (const auto& r : rows) {
    first = true;
    for (auto it = r.begin(); it != r.end(); ++it) {
      if (!first) out += ',';
      if (it->is_string())
        out += it->get<std::string>();
      else
        out += it->dump();
      first = false;
    }
    out += '\n';
  }
  return out;
}

int cmd_rank(const RunConfig& cfg) {
  auto g = biface::load_edge_list_file(cfg.input, load_options(cfg));
  const std::string ext = cfg.output_format == "csv" ? "csv" : "json";
  for (const auto& name : effective_measures(cfg)) {
    auto [t1, t2] = biface::compute_measure(g, name, denominator_mode(cfg));
    const std::pair<const biface::CentralityScores*, const std::vector<std::string>*> sides[2] = {
        {&t1, &g.type1_labels()}, {&t2, &g.type2_labels()}};
    for (int side = 0; side < 2; ++side) {
      const auto& scores = *sides[side].first;
      const auto& labels = *sides[side].second;
      std::vector<Row> rows;
      for (std::size_t pos = 0; pos < scores.ranking.size(); ++pos) {
        const std::size_t node = scores.ranking[pos];
        Row row;
        row["rank"] = pos + 1;
        row["node"] = labels[node];
        row["score"] = scores.scores[node];
        rows.push_back(row);
      }
      const std::string path =
          cfg.output + name + "_type" + (side == 0 ? "1" : "2") + "." + ext;
      write_text(path, render_rows(rows, cfg.output_format));
    }
  }
  return 0;
}

int cmd_evaluate(const RunConfig& cfg) {
  auto g = biface::load_edge_list_file(cfg.input, load_options(cfg));
  const auto measures = effective_measures(cfg);
  const auto grid = beta_grid(cfg);

  // One simulation pass per beta, shared by every measure.
  std::vector<std::vector<double>> eff1, eff2;
  for (double beta : grid) {
    biface::SirConfig sir{beta, cfg.horizon, cfg.runs, cfg.seed};
    eff1.push_back(biface::spreading_ranking(g, biface::NodeType::type1, sir).efficiency);
    eff2.push_back(biface::spreading_ranking(g, biface::NodeType::type2, sir).efficiency);
  }

  std::vector<Row> rows;
  for (const auto& name : measures) {
    auto [t1, t2] = biface::compute_measure(g, name, denominator_mode(cfg));
    const double xi = biface::timing_harness(g, name).xi_seconds;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double tau1 = biface::kendall_tau(t1.scores, eff1[k]);
      const double tau2 = biface::kendall_tau(t2.scores, eff2[k]);
      Row row;
      row["measure"] = name;
      row["beta"] = grid[k];
      row["tau_type1"] = tau1;
      row["tau_type2"] = tau2;
      row["tau_avg"] = biface::average_tau(tau1, tau2);
      row["xi_seconds"] = xi;
      rows.push_back(row);
    }
  }
  write_text(cfg.output, render_rows(rows, cfg.output_format));
  return 0;
}

int cmd_bench(const RunConfig& cfg) {
  auto g = biface::load_edge_list_file(cfg.input, load_options(cfg));
  std::vector<Row> rows;
  for (const auto& name : effective_measures(cfg)) {
    auto r = biface::timing_harness(g, name);
    Row row;
    row["measure"] = r.measure;
    row["xi_seconds"] = r.xi_seconds;
    row["repetitions"] = r.repetitions;
    rows.push_back(row);
  }
  write_text(cfg.output, render_rows(rows, cfg.output_format));
  return 0;
}

int cmd_generate(std::size_t n1, std::size_t n2, double p, std::uint64_t seed,
                 const std::string& output) {
  auto g = biface::generate_coin_toss(n1, n2, p, seed);
  std::ofstream out(output);
  if (!out) throw biface::InvalidInput("cannot open output file: " + output);
  biface::write_edge_list(g, out);
  return 0;
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg, bool with_sir) {
  cmd->add_option("--input", cfg.input, "edge-list file")->required();
  cmd->add_option("--format", cfg.format, "input format")
      ->check(CLI::IsMember({"tsv", "csv"}));
  cmd->add_option("--manifest", cfg.manifest, "node manifest declaring isolated nodes");
  cmd->add_option("--measure", cfg.measures, "measure (repeatable; default: all)")
      ->check(CLI::IsMember(biface::measure_names()));
  cmd->add_option("--denominator", cfg.denominator, "biface denominator mode")
      ->check(CLI::IsMember({"algorithm", "equation"}));
  cmd->add_option("--output", cfg.output, "output path (rank: file prefix; default stdout)");
  cmd->add_option("--output-format", cfg.output_format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  if (with_sir) {
    cmd->add_option("--beta-start", cfg.beta_start, "first beta of the grid");
    cmd->add_option("--beta-stop", cfg.beta_stop, "last beta of the grid");
    cmd->add_option("--beta-step", cfg.beta_step, "beta increment");
    cmd->add_option("--runs", cfg.runs, "Monte-Carlo runs per seed node");
    cmd->add_option("--horizon", cfg.horizon, "simulation steps");
    cmd->add_option("--seed", cfg.seed, "RNG seed")->envname("BIFACE_SEED");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite network centrality toolkit"};
  app.require_subcommand(1);
  // key=value pairs under a [subcommand] section; give --config before the
  // subcommand name; explicit flags take precedence
  app.set_config("--config", "", "config file");

  RunConfig cfg;
  auto* rank = app.add_subcommand("rank", "write per-measure, per-type score files");
  add_common_flags(rank, cfg, false);

  auto* evaluate = app.add_subcommand("evaluate", "tau-vs-beta spreading evaluation report");
  add_common_flags(evaluate, cfg, true);

  auto* bench = app.add_subcommand("bench", "per-measure timing report");
  add_common_flags(bench, cfg, false);

  std::size_t gen_n1 = 0, gen_n2 = 0;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 0;
  std::string gen_output;
  auto* generate = app.add_subcommand("generate", "write a coin-toss random bipartite graph");
  generate->add_option("--n1", gen_n1, "type-1 node count")->required();
  generate->add_option("--n2", gen_n2, "type-2 node count")->required();
  generate->add_option("-p,--probability", gen_p, "edge probability")->required();
  generate->add_option("--seed", gen_seed, "RNG seed")->envname("BIFACE_SEED");
  generate->add_option("--output", gen_output, "output edge-list file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 2 = usage error, 0 = --help/--version
  }

  try {
    if (rank->parsed()) return cmd_rank(cfg);
    if (evaluate->parsed()) return cmd_evaluate(cfg);
    if (bench->parsed()) return cmd_bench(cfg);
    if (generate->parsed()) return cmd_generate(gen_n1, gen_n2, gen_p, gen_seed, gen_output);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
