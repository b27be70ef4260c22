#pragma once

#include <string>

#include "biface/graph.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) {
  return std::string(BIFACE_DATA_DIR) + "/" + name;
}

inline biface::BipartiteGraph airline() {
  return biface::load_edge_list_file(data_path("airline.tsv"));
}

inline biface::BipartiteGraph davis() {
  return biface::load_edge_list_file(data_path("davis.tsv"));
}

// Complete bipartite K_{a,b}.
inline biface::BipartiteGraph complete(std::size_t a, std::size_t b) {
  std::vector<std::string> l1(a), l2(b);
  for (std::size_t i = 0; i < a; ++i) l1[i] = "u" + std::to_string(i);
  for (std::size_t j = 0; j < b; ++j) l2[j] = "v" + std::to_string(j);
  std::vector<biface::Edge> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) edges.emplace_back(i, j);
  return biface::BipartiteGraph(l1, l2, edges);
}

// Path u1 - v - u2.
inline biface::BipartiteGraph path3() {
  return biface::BipartiteGraph({"u1", "u2"}, {"v"}, {{0, 0}, {1, 0}});
}

inline biface::BipartiteGraph single_edge() {
  return biface::BipartiteGraph({"g"}, {"m"}, {{0, 0}});
}

}  // namespace fixtures
