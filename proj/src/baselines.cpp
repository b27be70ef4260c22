#include "biface/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

#include "biface/errors.hpp"

namespace biface {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const BipartiteGraph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.node_count(), kUnreached);
  dist[source] = 0;
  std::queue<std::size_t> q;
  q.push(source);
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop();
    for (std::size_t w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

// Single-source shortest-path dependency accumulation. `count_target`
// selects which reached nodes contribute as pair endpoints.
std::vector<double> brandes_dependencies(const BipartiteGraph& g, std::size_t source,
                                         const std::function<bool(std::size_t)>& count_target) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> dist(n, kUnreached);
  std::vector<double> sigma(n, 0.0);
  std::vector<std::vector<std::size_t>> pred(n);
  std::vector<std::size_t> order;
  order.reserve(n);

  dist[source] = 0;
  sigma[source] = 1.0;
  std::queue<std::size_t> q;
  q.push(source);
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop();
    order.push_back(u);
    for (std::size_t w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
      if (dist[w] == dist[u] + 1) {
        sigma[w] += sigma[u];
        pred[w].push_back(u);
      }
    }
  }

  std::vector<double> delta(n, 0.0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t w = *it;
    const double contribution = (w != source && count_target(w)) ? 1.0 : 0.0;
    for (std::size_t v : pred[w]) delta[v] += sigma[v] / sigma[w] * (delta[w] + contribution);
  }
  delta[source] = 0.0;
  return delta;
}

ScorePair split_scores(const BipartiteGraph& g, const std::vector<double>& combined) {
  std::vector<double> s1(combined.begin(), combined.begin() + g.type1_count());
  std::vector<double> s2(combined.begin() + g.type1_count(), combined.end());
  return {make_scores(NodeType::type1, std::move(s1)), make_scores(NodeType::type2, std::move(s2))};
}

}  // namespace

ScorePair degree_centrality(const BipartiteGraph& g) {
  std::vector<double> d1(g.type1_count()), d2(g.type2_count());
  for (std::size_t i = 0; i < g.type1_count(); ++i)
    d1[i] = static_cast<double>(g.neighbors_of_type1(i).size());
  for (std::size_t j = 0; j < g.type2_count(); ++j)
    d2[j] = static_cast<double>(g.neighbors_of_type2(j).size());
  return {make_scores(NodeType::type1, std::move(d1)), make_scores(NodeType::type2, std::move(d2))};
}

ScorePair closeness_centrality(const BipartiteGraph& g) {
  const std::size_t n1 = g.type1_count(), n2 = g.type2_count();
  const double num1 = static_cast<double>(n2) + 2.0 * (static_cast<double>(n1) - 1.0);
  const double num2 = static_cast<double>(n1) + 2.0 * (static_cast<double>(n2) - 1.0);
  std::vector<double> combined(g.node_count(), 0.0);
  for (std::size_t s = 0; s < g.node_count(); ++s) {
    auto dist = bfs_distances(g, s);
    double sum = 0.0;
    bool reaches_opposite = false;
    for (std::size_t w = 0; w < g.node_count(); ++w) {
      if (w == s || dist[w] == kUnreached) continue;
      sum += static_cast<double>(dist[w]);
      if ((s < n1) != (w < n1)) reaches_opposite = true;
    }
    if (!reaches_opposite || sum == 0.0) continue;  // isolated within its type: score 0
    combined[s] = (s < n1 ? num1 : num2) / sum;
  }
  return split_scores(g, combined);
}

double betweenness_norm_type1(std::size_t n1, std::size_t n2) {
  const double m = static_cast<double>(n2);
  const double s = static_cast<double>((n1 - 1) / n2);
  const double t = static_cast<double>((n1 - 1) % n2);
  return 0.5 * (m * m * (s + 1) * (s + 1) + m * (s + 1) * (2 * t - s - 1) - t * (2 * s - t + 3));
}

double betweenness_norm_type2(std::size_t n1, std::size_t n2) {
  const double gsz = static_cast<double>(n1);
  const double p = static_cast<double>((n2 - 1) / n1);
  const double r = static_cast<double>((n2 - 1) % n1);
  return 0.5 *
         (gsz * gsz * (p + 1) * (p + 1) + gsz * (p + 1) * (2 * r - p - 1) - r * (2 * p - r + 3));
}

ScorePair betweenness_centrality_raw(const BipartiteGraph& g) {
  const std::size_t n1 = g.type1_count();
  std::vector<double> combined(g.node_count(), 0.0);
  for (std::size_t s = 0; s < g.node_count(); ++s) {
    const bool s_is_type1 = s < n1;
    auto delta = brandes_dependencies(g, s, [&](std::size_t t) { return (t < n1) == s_is_type1; });
    for (std::size_t w = 0; w < g.node_count(); ++w) combined[w] += delta[w];
  }
  for (double& v : combined) v /= 2.0;  // each unordered pair was visited from both ends
  return split_scores(g, combined);
}

ScorePair betweenness_centrality(const BipartiteGraph& g) {
  auto [t1, t2] = betweenness_centrality_raw(g);
  const double c1 = betweenness_norm_type1(g.type1_count(), g.type2_count());
  const double c2 = betweenness_norm_type2(g.type1_count(), g.type2_count());
  for (double& v : t1.scores)
    if (c1 != 0.0) v /= c1;
  for (double& v : t2.scores)
    if (c2 != 0.0) v /= c2;
  t1 = make_scores(NodeType::type1, std::move(t1.scores));
  t2 = make_scores(NodeType::type2, std::move(t2.scores));
  return {std::move(t1), std::move(t2)};
}

ScorePair eigenvector_centrality(const BipartiteGraph& g, const PowerIterationConfig& cfg) {
  if (g.edge_count() == 0) throw InvalidInput("eigenvector centrality needs at least one edge");
  if (!(cfg.tolerance > 0.0) || cfg.max_iterations < 1)
    throw InvalidInput("invalid power-iteration configuration");

  const std::size_t n1 = g.type1_count(), n2 = g.type2_count();
  // Alternating update: y <- B^T x, x <- B y. Iterating the type-1 side on
  // B B^T avoids the sign-alternation of the raw bipartite adjacency.
  std::vector<double> x(n1, 1.0 / std::sqrt(static_cast<double>(n1)));
  std::vector<double> y(n2, 0.0), next(n1, 0.0);

  double residual = 0.0;
  bool converged = false;
  for (std::size_t it = 0; it < cfg.max_iterations; ++it) {
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j : g.neighbors_of_type1(i)) y[j] += x[i];
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t j = 0; j < n2; ++j)
      for (std::size_t i : g.neighbors_of_type2(j)) next[i] += y[j];
    double norm = 0.0;
    for (double v : next) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0) throw ConvergenceError(1.0, it);
    residual = 0.0;
    for (std::size_t i = 0; i < n1; ++i) {
      next[i] /= norm;
      residual += (next[i] - x[i]) * (next[i] - x[i]);
    }
    residual = std::sqrt(residual);
    x.swap(next);
    if (residual < cfg.tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) throw ConvergenceError(residual, cfg.max_iterations);

  // lambda^2 is the Rayleigh quotient of B B^T at x (x has unit norm).
  std::fill(y.begin(), y.end(), 0.0);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j : g.neighbors_of_type1(i)) y[j] += x[i];
  double y_norm_sq = 0.0;
  for (double v : y) y_norm_sq += v * v;
  const double lambda = std::sqrt(y_norm_sq);
  for (double& v : y) v /= lambda;  // now A (x,y) = lambda (x,y)

  // Joint L2 normalization of the combined vector.
  double total = 0.0;
  for (double v : x) total += v * v;
  for (double v : y) total += v * v;
  total = std::sqrt(total);
  for (double& v : x) v /= total;
  for (double& v : y) v /= total;

  return {make_scores(NodeType::type1, std::move(x)), make_scores(NodeType::type2, std::move(y))};
}

VoteRankResult vote_rank(const BipartiteGraph& g, std::size_t k) {
  const std::size_t n = g.node_count();
  if (k > n) throw InvalidInput("cannot elect more nodes than the graph has");
  const double mean_degree = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);
  const double delta = mean_degree > 0.0 ? 1.0 / mean_degree : 0.0;

  std::vector<double> ability(n, 1.0);
  std::vector<bool> elected(n, false);
  VoteRankResult result;
  for (std::size_t round = 0; round < k; ++round) {
    std::size_t best = n;
    double best_votes = -1.0;
    for (std::size_t w = 0; w < n; ++w) {
      if (elected[w]) continue;
      double votes = 0.0;
      for (std::size_t nb : g.neighbors(w)) votes += ability[nb];
      if (votes > best_votes) {
        best_votes = votes;
        best = w;
      }
    }
    elected[best] = true;
    ability[best] = 0.0;
    for (std::size_t nb : g.neighbors(best)) ability[nb] = std::max(0.0, ability[nb] - delta);
    result.elected.push_back(best);
  }
  return result;
}

ScorePair vote_rank_scores(const BipartiteGraph& g) {
  const std::size_t n = g.node_count();
  auto result = vote_rank(g, n);
  std::vector<double> combined(n, 0.0);
  for (std::size_t pos = 0; pos < result.elected.size(); ++pos)
    combined[result.elected[pos]] = static_cast<double>(n - pos);
  return split_scores(g, combined);
}

ScorePair percolation_centrality(const BipartiteGraph& g, const PercolationConfig& cfg) {
  const std::size_t n = g.node_count();
  std::vector<double> states = cfg.states.empty() ? std::vector<double>(n, 0.5) : cfg.states;
  if (states.size() != n) throw InvalidInput("percolation states must cover every node");
  for (double v : states)
    if (!(v >= 0.0 && v <= 1.0)) throw InvalidInput("percolation states must lie in [0,1]");

  double state_sum = 0.0;
  for (double v : states) state_sum += v;

  std::vector<double> raw(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    if (states[s] == 0.0) continue;
    auto delta = brandes_dependencies(g, s, [](std::size_t) { return true; });
    for (std::size_t w = 0; w < n; ++w) raw[w] += states[s] * delta[w];
  }
  std::vector<double> combined(n, 0.0);
  for (std::size_t w = 0; w < n; ++w) {
    const double denom = state_sum - states[w];
    combined[w] = denom > 0.0 ? raw[w] / denom : 0.0;
  }
  return split_scores(g, combined);
}

}  // namespace biface
