#include "biface/timing.hpp"

#include <algorithm>
#include <chrono>

#include "biface/errors.hpp"

namespace biface {

const std::vector<std::string>& measure_names() {
  static const std::vector<std::string> names = {
      "degree", "closeness", "betweenness", "eigenvector", "voterank", "percolation", "biface"};
  return names;
}

bool is_measure_name(const std::string& name) {
  const auto& names = measure_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

ScorePair compute_measure(const BipartiteGraph& g, const std::string& name,
                          DenominatorMode mode) {
  if (name == "degree") return degree_centrality(g);
  if (name == "closeness") return closeness_centrality(g);
  if (name == "betweenness") return betweenness_centrality(g);
  if (name == "eigenvector") return eigenvector_centrality(g);
  if (name == "voterank") return vote_rank_scores(g);
  if (name == "percolation") return percolation_centrality(g);
  if (name == "biface") return biface_centrality(g, mode);
  throw InvalidInput("unknown measure name: " + name);
}

TimingResult timing_harness(const BipartiteGraph& g, const std::string& measure,
                            std::size_t repetitions) {
  if (!is_measure_name(measure)) throw InvalidInput("unknown measure name: " + measure);
  if (repetitions < 1) throw InvalidInput("repetitions must be at least 1");

  using clock = std::chrono::steady_clock;
  std::vector<double> xis;
  xis.reserve(repetitions);
  const double n = static_cast<double>(g.type1_count());
  const double m = static_cast<double>(g.type2_count());
  for (std::size_t rep = 0; rep < repetitions; ++rep) {
    const auto start = clock::now();
    volatile double sink = compute_measure(g, measure).first.scores.front();
    (void)sink;
    const auto stop = clock::now();
    const double seconds = std::chrono::duration<double>(stop - start).count();
    // One run yields both types; attribute half the elapsed time to each.
    xis.push_back(0.5 * ((seconds / 2.0) / n + (seconds / 2.0) / m));
  }
  std::sort(xis.begin(), xis.end());
  TimingResult out;
  out.measure = measure;
  out.xi_seconds = xis[xis.size() / 2];
  out.repetitions = repetitions;
  return out;
}

}  // namespace biface
