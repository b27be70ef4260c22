#pragma once

#include <cstdint>
#include <vector>

#include "biface/centrality.hpp"
#include "biface/graph.hpp"

namespace biface {

struct SirConfig {
  double beta = 0.05;        // spreading probability, (0, 1]
  std::size_t horizon = 10;  // synchronous steps
  std::size_t runs = 1000;   // Monte-Carlo repetitions per seed node
  std::uint64_t rng_seed = 0;
};

struct SirOutcome {
  NodeType node_type = NodeType::type1;
  std::vector<double> efficiency;  // mean ever-infected count per seed node
  SirConfig config;
};

// Mean ever-infected count at the horizon over cfg.runs repetitions, seeding
// the process at the given node of the given type. Reproducible: each
// (rng_seed, node, run) triple drives its own stream.
double sir_spread(const BipartiteGraph& g, NodeType type, std::size_t node,
                  const SirConfig& cfg);

SirOutcome spreading_ranking(const BipartiteGraph& g, NodeType type, const SirConfig& cfg);

struct JointScoreList {
  std::vector<std::pair<double, double>> pairs;  // (centrality x, efficiency y)
};

// Kendall tau-a: 2 (n_c - n_d) / (n (n-1)); ties contribute zero to the
// numerator. Throws InvalidInput for fewer than two pairs.
double kendall_tau(const JointScoreList& joint);
double kendall_tau(const std::vector<double>& x, const std::vector<double>& y);

double average_tau(double tau1, double tau2);

}  // namespace biface
