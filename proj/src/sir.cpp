#include "biface/sir.hpp"

#include <random>

#include "biface/errors.hpp"

namespace biface {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream per (seed, node, run): every simulation is reproducible
// regardless of scheduling order.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t node, std::uint64_t run) {
  return splitmix64(splitmix64(splitmix64(seed) ^ node) ^ run);
}

void check_config(const SirConfig& cfg) {
  if (!(cfg.beta > 0.0 && cfg.beta <= 1.0)) throw InvalidInput("beta must lie in (0,1]");
  if (cfg.horizon < 1) throw InvalidInput("horizon must be at least 1");
  if (cfg.runs < 1) throw InvalidInput("runs must be at least 1");
}

}  // namespace

double sir_spread(const BipartiteGraph& g, NodeType type, std::size_t node,
                  const SirConfig& cfg) {
  check_config(cfg);
  const std::size_t n1 = g.type1_count();
  if ((type == NodeType::type1 && node >= n1) || (type == NodeType::type2 && node >= g.type2_count()))
    throw InvalidInput("unknown seed node");
  const std::size_t seed_node = type == NodeType::type1 ? node : n1 + node;
  const std::uint64_t node_key = type == NodeType::type1 ? node : (1ULL << 32) + node;

  const std::size_t n = g.node_count();
  double total = 0.0;
  std::vector<char> infected(n);
  std::vector<std::size_t> infected_list;
  infected_list.reserve(n);
  for (std::size_t run = 0; run < cfg.runs; ++run) {
    std::mt19937_64 rng(stream_seed(cfg.rng_seed, node_key, run));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::fill(infected.begin(), infected.end(), 0);
    infected_list.clear();
    infected[seed_node] = 1;
    infected_list.push_back(seed_node);
    for (std::size_t step = 0; step < cfg.horizon; ++step) {
      // Synchronous step: only nodes infected before this step transmit.
      const std::size_t frontier_end = infected_list.size();
      for (std::size_t k = 0; k < frontier_end; ++k) {
        for (std::size_t nb : g.neighbors(infected_list[k])) {
          if (!infected[nb] && unit(rng) < cfg.beta) {
            infected[nb] = 1;
            infected_list.push_back(nb);
          }
        }
      }
      if (infected_list.size() == n) break;
    }
    total += static_cast<double>(infected_list.size());
  }
  return total / static_cast<double>(cfg.runs);
}

SirOutcome spreading_ranking(const BipartiteGraph& g, NodeType type, const SirConfig& cfg) {
  check_config(cfg);
  SirOutcome out;
  out.node_type = type;
  out.config = cfg;
  const std::size_t count = type == NodeType::type1 ? g.type1_count() : g.type2_count();
  out.efficiency.resize(count);
  for (std::size_t node = 0; node < count; ++node)
    out.efficiency[node] = sir_spread(g, type, node, cfg);
  return out;
}

double kendall_tau(const JointScoreList& joint) {
  const std::size_t n = joint.pairs.size();
  if (n < 2) throw InvalidInput("kendall tau needs at least two pairs");
  long long concordant = 0, discordant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& [xi, yi] = joint.pairs[i];
      const auto& [xj, yj] = joint.pairs[j];
      const int sx = xi < xj ? -1 : (xi > xj ? 1 : 0);
      const int sy = yi < yj ? -1 : (yi > yj ? 1 : 0);
      if (sx * sy > 0)
        ++concordant;
      else if (sx * sy < 0)
        ++discordant;
      // ties in either coordinate contribute nothing (tau-a)
    }
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  return 2.0 * static_cast<double>(concordant - discordant) / pairs;
}

double kendall_tau(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw InvalidInput("score lists differ in length");
  JointScoreList joint;
  joint.pairs.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) joint.pairs.emplace_back(x[i], y[i]);
  return kendall_tau(joint);
}

double average_tau(double tau1, double tau2) { return (tau1 + tau2) / 2.0; }

}  // namespace biface
