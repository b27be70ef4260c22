#include "biface/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "biface/errors.hpp"

namespace biface {
namespace {

// Lectic successor for NextClosure. Returns false when B is already the last
// closed set (the full attribute set).
bool next_closed_intent(const FormalContext& ctx, IndexSet& intent) {
  const std::size_t m = ctx.attribute_count();
  for (std::size_t k = m; k-- > 0;) {
    if (intent.test(k)) {
      intent.reset(k);
    } else {
      IndexSet candidate = intent;
      // keep only attributes < k, then add k
      for (std::size_t j = k; j < m; ++j) candidate.reset(j);
      candidate.set(k);
      IndexSet closed = closure_intent(ctx, candidate);
      bool canonical = true;
      for (std::size_t j = 0; j < k && canonical; ++j)
        if (closed.test(j) && !intent.test(j)) canonical = false;
      if (canonical) {
        intent = closed;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

ConceptLattice::ConceptLattice(const FormalContext& ctx) {
  if (ctx.object_count() == 0 || ctx.attribute_count() == 0)
    throw InvalidInput("cannot build a lattice over an empty context");

  IndexSet intent = closure_intent(ctx, IndexSet(ctx.attribute_count()));
  concepts_.push_back({derive_intent(ctx, intent), intent});
  while (next_closed_intent(ctx, intent))
    concepts_.push_back({derive_intent(ctx, intent), intent});

  const std::size_t n = concepts_.size();
  upper_.assign(n, {});
  lower_.assign(n, {});

  // Covers: among the strict extent-supersets of each concept, keep the
  // minimal ones. Scanning supersets in increasing extent size lets an
  // accepted cover veto everything above it.
  std::vector<std::size_t> by_size(n);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::vector<std::size_t> extent_size(n);
  for (std::size_t i = 0; i < n; ++i) extent_size[i] = concepts_[i].extent.count();
  std::sort(by_size.begin(), by_size.end(),
            [&](std::size_t a, std::size_t b) { return extent_size[a] < extent_size[b]; });

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : by_size) {
      if (extent_size[j] <= extent_size[i]) continue;
      if (!concepts_[i].extent.is_strict_subset_of(concepts_[j].extent)) continue;
      bool minimal = true;
      for (std::size_t u : upper_[i]) {
        if (concepts_[u].extent.is_strict_subset_of(concepts_[j].extent)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        upper_[i].push_back(j);
        lower_[j].push_back(i);
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (upper_[i].empty()) top_ = i;
    if (lower_[i].empty()) bottom_ = i;
  }
}

std::size_t ConceptLattice::index_of_extent(const IndexSet& extent) const {
  for (std::size_t i = 0; i < concepts_.size(); ++i)
    if (concepts_[i].extent == extent) return i;
  throw InvalidInput("no concept with the given extent");
}

ConceptLattice build_lattice(const FormalContext& ctx) { return ConceptLattice(ctx); }

std::vector<IndexSet> intensional_faces(const ConceptLattice& lat, std::size_t c) {
  if (c >= lat.size()) throw InvalidInput("concept index out of range");
  std::vector<IndexSet> faces;
  const IndexSet& intent = lat.concept_at(c).intent;
  for (std::size_t d : lat.upper_covers(c)) faces.push_back(intent.minus(lat.concept_at(d).intent));
  return faces;
}

std::vector<IndexSet> extensional_faces(const ConceptLattice& lat, std::size_t c) {
  if (c >= lat.size()) throw InvalidInput("concept index out of range");
  std::vector<IndexSet> faces;
  const IndexSet& extent = lat.concept_at(c).extent;
  for (std::size_t l : lat.lower_covers(c)) faces.push_back(extent.minus(lat.concept_at(l).extent));
  return faces;
}

namespace {

// Drop duplicates and any candidate having a strict subset in the pool.
std::vector<IndexSet> keep_minimal(std::vector<IndexSet> pool) {
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  std::vector<IndexSet> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    bool has_subset = false;
    for (std::size_t j = 0; j < pool.size() && !has_subset; ++j)
      if (j != i && pool[j].is_strict_subset_of(pool[i])) has_subset = true;
    if (!has_subset) out.push_back(pool[i]);
  }
  return out;
}

}  // namespace

std::vector<IndexSet> minimal_blockers(std::size_t universe, const std::vector<IndexSet>& faces) {
  std::vector<IndexSet> gens;
  for (const IndexSet& face : faces) {
    if (gens.empty()) {
      face.for_each([&](std::size_t a) { gens.push_back(IndexSet::singleton(universe, a)); });
      continue;
    }
    std::vector<IndexSet> next;
    for (const IndexSet& h : gens) {
      if (h.intersects(face)) {
        next.push_back(h);
      } else {
        face.for_each([&](std::size_t a) {
          IndexSet extended = h;
          extended.set(a);
          next.push_back(extended);
        });
      }
    }
    gens = keep_minimal(std::move(next));
  }
  if (gens.empty()) gens.push_back(IndexSet(universe));  // the trivial empty generator
  return gens;
}

std::vector<IndexSet> minigen_intent(const ConceptLattice& lat, std::size_t c) {
  const std::size_t universe = lat.concept_at(c).intent.universe();
  return minimal_blockers(universe, intensional_faces(lat, c));
}

std::vector<IndexSet> minigen_extent(const ConceptLattice& lat, std::size_t c) {
  const std::size_t universe = lat.concept_at(c).extent.universe();
  return minimal_blockers(universe, extensional_faces(lat, c));
}

}  // namespace biface
