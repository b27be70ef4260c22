#include "biface/centrality.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "biface/errors.hpp"

namespace biface {

std::vector<std::size_t> ranking_of(const std::vector<double>& scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  return order;
}

CentralityScores make_scores(NodeType type, std::vector<double> scores) {
  CentralityScores out;
  out.node_type = type;
  out.ranking = ranking_of(scores);
  out.scores = std::move(scores);
  return out;
}

namespace {

bool is_biclique_concept(const Concept& c) { return !c.extent.empty() && !c.intent.empty(); }

IndexSet face_intersection(const std::vector<IndexSet>& faces, std::size_t universe) {
  if (faces.empty()) return IndexSet(universe);  // empty intersection, no removal
  IndexSet inter = faces.front();
  for (std::size_t k = 1; k < faces.size(); ++k) inter &= faces[k];
  return inter;
}

}  // namespace

FaceBiclique refine_biclique(const ConceptLattice& lat, std::size_t c) {
  if (c >= lat.size()) throw InvalidInput("concept index out of range");
  const Concept& con = lat.concept_at(c);
  if (!is_biclique_concept(con))
    throw InvalidInput("concept does not represent a biclique (empty extent or intent)");

  FaceBiclique out{c, con.extent, con.intent};
  if (con.extent.count() > 1)
    out.refined_extent =
        con.extent.minus(face_intersection(extensional_faces(lat, c), con.extent.universe()));
  if (con.intent.count() > 1)
    out.refined_intent =
        con.intent.minus(face_intersection(intensional_faces(lat, c), con.intent.universe()));
  return out;
}

std::vector<FaceBiclique> face_bicliques(const ConceptLattice& lat) {
  std::vector<FaceBiclique> out;
  for (std::size_t c = 0; c < lat.size(); ++c)
    if (is_biclique_concept(lat.concept_at(c))) out.push_back(refine_biclique(lat, c));
  return out;
}

// The full generator family can be exponentially large, but bridges only use
// the singleton generators, which have a closed form: {u} generates the
// extent A iff the concept has lower covers and u lies in none of their
// extents (any cover containing u would close {u} to a smaller extent).
// With no covers the generator family is the trivial {∅}: no singletons.
FaceBridgeSet face1_bridges(const ConceptLattice& lat) {
  FaceBridgeSet out;
  for (std::size_t c = 0; c < lat.size(); ++c) {
    const Concept& con = lat.concept_at(c);
    if (con.intent.count() != 1) continue;
    const auto& lows = lat.lower_covers(c);
    if (lows.empty()) continue;
    const std::size_t attr = con.intent.to_vector().front();
    IndexSet rest = con.extent;
    for (std::size_t l : lows) rest = rest.minus(lat.concept_at(l).extent);
    rest.for_each([&](std::size_t u) { out.face1.push_back({u, attr}); });
  }
  return out;
}

FaceBridgeSet face2_bridges(const ConceptLattice& lat) {
  FaceBridgeSet out;
  for (std::size_t c = 0; c < lat.size(); ++c) {
    const Concept& con = lat.concept_at(c);
    if (con.extent.count() != 1) continue;
    const auto& ups = lat.upper_covers(c);
    if (ups.empty()) continue;
    const std::size_t obj = con.extent.to_vector().front();
    IndexSet rest = con.intent;
    for (std::size_t d : ups) rest = rest.minus(lat.concept_at(d).intent);
    rest.for_each([&](std::size_t m) { out.face2.push_back({m, obj}); });
  }
  return out;
}

namespace {

std::size_t equation_denominator(const std::vector<FaceBiclique>& refined) {
  std::set<std::pair<IndexSet, IndexSet>> distinct;
  for (const auto& fb : refined) distinct.insert({fb.refined_extent, fb.refined_intent});
  return distinct.size();
}

std::vector<double> biface_scores(std::size_t node_count,
                                  const std::vector<FaceBiclique>& refined,
                                  const std::vector<FaceBridge>& bridges,
                                  DenominatorMode mode, bool type1) {
  const double denom = static_cast<double>(
      mode == DenominatorMode::algorithm ? refined.size() : equation_denominator(refined));

  std::vector<double> biclique_count(node_count, 0.0);
  for (const auto& fb : refined) {
    const IndexSet& side = type1 ? fb.refined_extent : fb.refined_intent;
    if (side.empty()) continue;
    side.for_each([&](std::size_t u) { biclique_count[u] += 1.0; });
  }

  std::vector<double> bridge_count(node_count, 0.0);
  for (const auto& b : bridges) bridge_count[b.terminal] += 1.0;
  const double total_bridges = static_cast<double>(bridges.size());

  std::vector<double> scores(node_count, 0.0);
  for (std::size_t u = 0; u < node_count; ++u) {
    const double biclique_term = denom > 0.0 ? biclique_count[u] / denom : 0.0;
    // With no face bridges the ratio is 0 by convention: nobody is penalized.
    const double bridge_ratio = total_bridges > 0.0 ? bridge_count[u] / total_bridges : 0.0;
    scores[u] = biclique_term + (1.0 - bridge_ratio);
  }
  return scores;
}

}  // namespace

CentralityScores biface_type1(const BipartiteGraph& g, DenominatorMode mode) {
  return biface_centrality(g, mode).first;
}

CentralityScores biface_type2(const BipartiteGraph& g, DenominatorMode mode) {
  return biface_centrality(g, mode).second;
}

std::pair<CentralityScores, CentralityScores> biface_centrality(const BipartiteGraph& g,
                                                                DenominatorMode mode) {
  if (g.edge_count() == 0) throw InvalidInput("Bi-face centrality needs a nonempty graph");
  const ConceptLattice lat = build_lattice(to_formal_context(g));
  const std::vector<FaceBiclique> refined = face_bicliques(lat);
  const FaceBridgeSet gamma1 = face1_bridges(lat);
  const FaceBridgeSet gamma2 = face2_bridges(lat);
  return {
      make_scores(NodeType::type1,
                  biface_scores(g.type1_count(), refined, gamma1.face1, mode, true)),
      make_scores(NodeType::type2,
                  biface_scores(g.type2_count(), refined, gamma2.face2, mode, false)),
  };
}

}  // namespace biface
