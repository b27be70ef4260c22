#pragma once

#include <vector>

#include "biface/graph.hpp"
#include "biface/lattice.hpp"

namespace biface {

enum class NodeType { type1, type2 };

/// Per-node scores for one node type plus the deterministic ranking
/// (score descending, index ascending on ties).
struct CentralityScores {
  NodeType node_type = NodeType::type1;
  std::vector<double> scores;        // by node index
  std::vector<std::size_t> ranking;  // node indices, best first
};

std::vector<std::size_t> ranking_of(const std::vector<double>& scores);
CentralityScores make_scores(NodeType type, std::vector<double> scores);

/// A concept-biclique with the non-influential nodes (the intersection of its
/// faces) removed. Sides of size <= 1 are kept as is.
struct FaceBiclique {
  std::size_t origin;      // concept index in the lattice
  IndexSet refined_extent;
  IndexSet refined_intent;
};

struct FaceBridge {
  std::size_t terminal;  // node index within its type
  std::size_t other;     // the single opposite-type node of the concept
};

/// Terminal nodes with their bridge edges, counted with multiplicity
/// (one entry per qualifying concept/generator pair).
struct FaceBridgeSet {
  std::vector<FaceBridge> face1;  // terminal type-1 nodes, from attribute concepts
  std::vector<FaceBridge> face2;  // terminal type-2 nodes, from object concepts
};

/// Which constant divides the face-biclique term: the count of input
/// bicliques (algorithm) or the count of distinct refined bicliques
/// (equation). Rankings agree either way.
enum class DenominatorMode { algorithm, equation };

FaceBiclique refine_biclique(const ConceptLattice& lat, std::size_t c);
std::vector<FaceBiclique> face_bicliques(const ConceptLattice& lat);

FaceBridgeSet face1_bridges(const ConceptLattice& lat);
FaceBridgeSet face2_bridges(const ConceptLattice& lat);

CentralityScores biface_type1(const BipartiteGraph& g,
                              DenominatorMode mode = DenominatorMode::algorithm);
CentralityScores biface_type2(const BipartiteGraph& g,
                              DenominatorMode mode = DenominatorMode::algorithm);

/// Both types from one lattice construction.
std::pair<CentralityScores, CentralityScores> biface_centrality(
    const BipartiteGraph& g, DenominatorMode mode = DenominatorMode::algorithm);

}  // namespace biface
