#pragma once

#include <string>
#include <vector>

#include "biface/baselines.hpp"
#include "biface/centrality.hpp"

namespace biface {

// Measure names accepted everywhere a measure is selected by string.
const std::vector<std::string>& measure_names();
bool is_measure_name(const std::string& name);

// Compute one measure for both node types; throws InvalidInput on an unknown
// name. The biface measure uses the algorithm denominator.
ScorePair compute_measure(const BipartiteGraph& g, const std::string& name,
                          DenominatorMode mode = DenominatorMode::algorithm);

struct TimingResult {
  std::string measure;
  double xi_seconds = 0.0;  // two-type average of amortized per-node time
  std::size_t repetitions = 0;
};

// Median over `repetitions` single-threaded wall-clock measurements. A whole
// run computes both types at once, so half the elapsed time is attributed to
// each type before amortizing over its node count.
TimingResult timing_harness(const BipartiteGraph& g, const std::string& measure,
                            std::size_t repetitions = 5);

}  // namespace biface
