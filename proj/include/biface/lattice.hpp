#pragma once

#include <vector>

#include "biface/context.hpp"
#include "biface/indexset.hpp"

namespace biface {

struct Concept {
  IndexSet extent;  // closed object set
  IndexSet intent;  // closed attribute set
};

/// All formal concepts of a context together with the cover relation
/// (transitive reduction of extent inclusion).
class ConceptLattice {
 public:
  explicit ConceptLattice(const FormalContext& ctx);

  std::size_t size() const { return concepts_.size(); }
  const Concept& concept_at(std::size_t i) const { return concepts_[i]; }
  const std::vector<Concept>& concepts() const { return concepts_; }

  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_[i]; }

  std::size_t top() const { return top_; }
  std::size_t bottom() const { return bottom_; }

  // Index of the concept with the given extent; throws InvalidInput when absent.
  std::size_t index_of_extent(const IndexSet& extent) const;

 private:
  std::vector<Concept> concepts_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<std::size_t>> lower_;
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;
};

// Throws InvalidInput on an empty context.
ConceptLattice build_lattice(const FormalContext& ctx);

// One face per cover; the top (bottom) concept has none.
std::vector<IndexSet> intensional_faces(const ConceptLattice& lat, std::size_t c);
std::vector<IndexSet> extensional_faces(const ConceptLattice& lat, std::size_t c);

// Minimal generators per the incremental blocker construction. A concept with
// no covers on the relevant side yields the single empty generator.
std::vector<IndexSet> minigen_intent(const ConceptLattice& lat, std::size_t c);
std::vector<IndexSet> minigen_extent(const ConceptLattice& lat, std::size_t c);

// Core of the generator construction, shared with the extensional dual:
// fold the faces one by one, keeping the family of minimal blockers.
std::vector<IndexSet> minimal_blockers(std::size_t universe, const std::vector<IndexSet>& faces);

}  // namespace biface
