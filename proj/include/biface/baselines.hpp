#pragma once

#include <utility>
#include <vector>

#include "biface/centrality.hpp"
#include "biface/graph.hpp"

namespace biface {

using ScorePair = std::pair<CentralityScores, CentralityScores>;

ScorePair degree_centrality(const BipartiteGraph& g);

// Component-restricted normalized closeness; nodes reaching no opposite-type
// node score 0.
ScorePair closeness_centrality(const BipartiteGraph& g);

// Same-type endpoint pairs only; interior nodes of either type accumulate.
ScorePair betweenness_centrality(const BipartiteGraph& g);
ScorePair betweenness_centrality_raw(const BipartiteGraph& g);

// Normalization constants for the two node sets.
double betweenness_norm_type1(std::size_t n1, std::size_t n2);
double betweenness_norm_type2(std::size_t n1, std::size_t n2);

struct PowerIterationConfig {
  double tolerance = 1e-10;
  std::size_t max_iterations = 1000;
};

// Dominant eigenvector of the full adjacency operator; throws
// ConvergenceError when max_iterations is exhausted.
ScorePair eigenvector_centrality(const BipartiteGraph& g, const PowerIterationConfig& cfg = {});

struct VoteRankResult {
  std::vector<std::size_t> elected;  // global node ids, election order
};

VoteRankResult vote_rank(const BipartiteGraph& g, std::size_t k);

// Election-order scores per type (earlier elected = higher), for ranking use.
ScorePair vote_rank_scores(const BipartiteGraph& g);

struct PercolationConfig {
  // Per-node states in [0,1], indexed by global node id; empty means
  // uniform 0.5 everywhere.
  std::vector<double> states;
};

ScorePair percolation_centrality(const BipartiteGraph& g, const PercolationConfig& cfg = {});

}  // namespace biface
