#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "biface/context.hpp"

namespace biface {

enum class EdgeListFormat { tsv, csv };

// (type1 index, type2 index)
using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected bipartite graph over two labeled node sets. Immutable once built.
class BipartiteGraph {
 public:
  BipartiteGraph(std::vector<std::string> type1, std::vector<std::string> type2,
                 const std::vector<Edge>& edges);

  std::size_t type1_count() const { return type1_.size(); }
  std::size_t type2_count() const { return type2_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<std::string>& type1_labels() const { return type1_; }
  const std::vector<std::string>& type2_labels() const { return type2_; }

  const std::vector<std::size_t>& neighbors_of_type1(std::size_t i) const { return adj1_[i]; }
  const std::vector<std::size_t>& neighbors_of_type2(std::size_t j) const { return adj2_[j]; }
  bool has_edge(std::size_t i, std::size_t j) const;

  std::vector<Edge> edges() const;

  // Combined-node view, type-1 nodes first. Used by the path-based measures.
  std::size_t node_count() const { return type1_.size() + type2_.size(); }
  const std::vector<std::size_t>& neighbors(std::size_t node) const;

 private:
  std::vector<std::string> type1_;
  std::vector<std::string> type2_;
  std::vector<std::vector<std::size_t>> adj1_;      // type1 -> type2 indices
  std::vector<std::vector<std::size_t>> adj2_;      // type2 -> type1 indices
  std::vector<std::vector<std::size_t>> combined_;  // global ids
  std::size_t edge_count_ = 0;
};

struct NetworkStats {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t edges = 0;
  double density_percent = 0.0;  // 100 * |I| / (n1 * n2)
};

struct LoadOptions {
  EdgeListFormat format = EdgeListFormat::tsv;
  // Optional sidecar declaring isolated nodes, one label per line under
  // [type1] / [type2] section headers. Empty string disables it.
  std::string node_manifest_path;
};

struct LoadReport {
  std::size_t duplicate_edges = 0;
};

BipartiteGraph load_edge_list(std::istream& in, const LoadOptions& opts = {},
                              LoadReport* report = nullptr);
BipartiteGraph load_edge_list_file(const std::string& path, const LoadOptions& opts = {},
                                   LoadReport* report = nullptr);
void write_edge_list(const BipartiteGraph& g, std::ostream& out,
                     EdgeListFormat format = EdgeListFormat::tsv);

FormalContext to_formal_context(const BipartiteGraph& g);
BipartiteGraph from_formal_context(const FormalContext& ctx);

BipartiteGraph generate_coin_toss(std::size_t n1, std::size_t n2, double p, std::uint64_t seed);

// Cut edges of the graph viewed as one undirected graph.
std::vector<Edge> bridges(const BipartiteGraph& g);

NetworkStats stats(const BipartiteGraph& g);
void write_stats_json(const NetworkStats& s, std::ostream& out);

}  // namespace biface
