#include "biface/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "biface/errors.hpp"

namespace biface {

BipartiteGraph::BipartiteGraph(std::vector<std::string> type1, std::vector<std::string> type2,
                               const std::vector<Edge>& edges)
    : type1_(std::move(type1)), type2_(std::move(type2)) {
  auto check_dupes = [](const std::vector<std::string>& labels, const char* kind) {
    std::set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second)
        throw InvalidInput(std::string("duplicate ") + kind + " label: " + l);
  };
  check_dupes(type1_, "type1");
  check_dupes(type2_, "type2");

  adj1_.assign(type1_.size(), {});
  adj2_.assign(type2_.size(), {});
  std::set<Edge> seen;
  for (const auto& [i, j] : edges) {
    if (i >= type1_.size() || j >= type2_.size())
      throw InvalidInput("edge references an invalid node index");
    if (!seen.insert({i, j}).second) throw InvalidInput("duplicate edge");
    adj1_[i].push_back(j);
    adj2_[j].push_back(i);
  }
  edge_count_ = seen.size();
  for (auto& v : adj1_) std::sort(v.begin(), v.end());
  for (auto& v : adj2_) std::sort(v.begin(), v.end());

  combined_.assign(node_count(), {});
  const std::size_t n1 = type1_.size();
  for (std::size_t i = 0; i < adj1_.size(); ++i)
    for (std::size_t j : adj1_[i]) {
      combined_[i].push_back(n1 + j);
      combined_[n1 + j].push_back(i);
    }
  for (auto& v : combined_) std::sort(v.begin(), v.end());
}

bool BipartiteGraph::has_edge(std::size_t i, std::size_t j) const {
  const auto& nb = adj1_[i];
  return std::binary_search(nb.begin(), nb.end(), j);
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < adj1_.size(); ++i)
    for (std::size_t j : adj1_[i]) out.emplace_back(i, j);
  return out;
}

const std::vector<std::size_t>& BipartiteGraph::neighbors(std::size_t node) const {
  return combined_[node];
}

namespace {

struct Builder {
  std::vector<std::string> labels1, labels2;
  std::unordered_map<std::string, std::size_t> index1, index2;

  std::size_t node1(const std::string& label) {
    auto [it, inserted] = index1.try_emplace(label, labels1.size());
    if (inserted) labels1.push_back(label);
    return it->second;
  }
  std::size_t node2(const std::string& label) {
    auto [it, inserted] = index2.try_emplace(label, labels2.size());
    if (inserted) labels2.push_back(label);
    return it->second;
  }
};

void apply_manifest(Builder& b, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open node manifest: " + path);
  std::string line;
  int section = 0;  // 0 none, 1 type1, 2 type2
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line == "[type1]") {
      section = 1;
    } else if (line == "[type2]") {
      section = 2;
    } else if (section == 1) {
      b.node1(line);
    } else if (section == 2) {
      b.node2(line);
    } else {
      throw ParseError(lineno, "label before a [type1]/[type2] header");
    }
  }
}

}  // namespace

BipartiteGraph load_edge_list(std::istream& in, const LoadOptions& opts, LoadReport* report) {
  const char sep = opts.format == EdgeListFormat::tsv ? '\t' : ',';
  Builder b;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t duplicates = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto pos = line.find(sep);
    if (pos == std::string::npos || pos == 0 || pos + 1 == line.size() ||
        line.find(sep, pos + 1) != std::string::npos)
      throw ParseError(lineno, "expected 'type1_label" + std::string(1, sep) + "type2_label'");
    Edge e{b.node1(line.substr(0, pos)), b.node2(line.substr(pos + 1))};
    if (seen.insert(e).second)
      edges.push_back(e);
    else
      ++duplicates;
  }
  if (edges.empty()) throw InvalidInput("edge list is empty");
  if (!opts.node_manifest_path.empty()) apply_manifest(b, opts.node_manifest_path);
  if (report) report->duplicate_edges = duplicates;
  return BipartiteGraph(std::move(b.labels1), std::move(b.labels2), edges);
}

BipartiteGraph load_edge_list_file(const std::string& path, const LoadOptions& opts,
                                   LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open edge list: " + path);
  return load_edge_list(in, opts, report);
}

void write_edge_list(const BipartiteGraph& g, std::ostream& out, EdgeListFormat format) {
  const char sep = format == EdgeListFormat::tsv ? '\t' : ',';
  for (const auto& [i, j] : g.edges())
    out << g.type1_labels()[i] << sep << g.type2_labels()[j] << '\n';
}

FormalContext to_formal_context(const BipartiteGraph& g) {
  std::vector<std::vector<bool>> incidence(g.type1_count(),
                                           std::vector<bool>(g.type2_count(), false));
  for (const auto& [i, j] : g.edges()) incidence[i][j] = true;
  return FormalContext(g.type1_labels(), g.type2_labels(), incidence);
}

BipartiteGraph from_formal_context(const FormalContext& ctx) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ctx.object_count(); ++i)
    ctx.row(i).for_each([&](std::size_t j) { edges.emplace_back(i, j); });
  return BipartiteGraph(ctx.objects(), ctx.attributes(), edges);
}

BipartiteGraph generate_coin_toss(std::size_t n1, std::size_t n2, double p, std::uint64_t seed) {
  if (n1 < 1 || n2 < 1) throw InvalidInput("coin-toss sizes must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("coin-toss probability must be in [0,1]");
  std::vector<std::string> labels1(n1), labels2(n2);
  for (std::size_t i = 0; i < n1; ++i) labels1[i] = "u" + std::to_string(i + 1);
  for (std::size_t j = 0; j < n2; ++j) labels2[j] = "v" + std::to_string(j + 1);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      if (unit(rng) < p) edges.emplace_back(i, j);
  return BipartiteGraph(std::move(labels1), std::move(labels2), edges);
}

std::vector<Edge> bridges(const BipartiteGraph& g) {
  const std::size_t n = g.node_count();
  const std::size_t n1 = g.type1_count();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<Edge> out;
  std::size_t timer = 1;

  // Iterative DFS with low-links; parent tracked by edge to tolerate
  // (impossible here, but cheap) parallel edges.
  struct Frame {
    std::size_t node;
    std::size_t parent;
    std::size_t next_child = 0;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root]) continue;
    std::vector<Frame> stack{{root, n, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.node);
      if (f.next_child < nb.size()) {
        std::size_t child = nb[f.next_child++];
        if (child == f.parent) continue;
        if (disc[child]) {
          low[f.node] = std::min(low[f.node], disc[child]);
        } else {
          disc[child] = low[child] = timer++;
          stack.push_back({child, f.node, 0});
        }
      } else {
        std::size_t node = f.node, parent = f.parent;
        stack.pop_back();
        if (parent != n) {
          low[parent] = std::min(low[parent], low[node]);
          if (low[node] > disc[parent]) {
            std::size_t u = std::min(parent, node), v = std::max(parent, node);
            out.emplace_back(u, v - n1);  // u is type1 by bipartiteness
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NetworkStats stats(const BipartiteGraph& g) {
  NetworkStats s;
  s.n1 = g.type1_count();
  s.n2 = g.type2_count();
  s.edges = g.edge_count();
  s.density_percent = 100.0 * static_cast<double>(s.edges) /
                      (static_cast<double>(s.n1) * static_cast<double>(s.n2));
  return s;
}

void write_stats_json(const NetworkStats& s, std::ostream& out) {
  std::ostringstream density;
  density.precision(15);
  density << s.density_percent;
  out << "{\"n1\": " << s.n1 << ", \"n2\": " << s.n2 << ", \"edges\": " << s.edges
      << ", \"density_percent\": " << density.str() << "}\n";
}

}  // namespace biface
