#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "biface/indexset.hpp"

namespace biface {

/// Binary object x attribute incidence relation.
///
/// Rows are cached as attribute sets and columns as object sets so that the
/// derivation operators reduce to word-wise intersections.
class FormalContext {
 public:
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                const std::vector<std::vector<bool>>& incidence);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }

  bool incidence(std::size_t obj, std::size_t attr) const { return rows_[obj].test(attr); }
  const IndexSet& row(std::size_t obj) const { return rows_[obj]; }
  const IndexSet& column(std::size_t attr) const { return cols_[attr]; }

  std::size_t object_index(const std::string& label) const;     // throws InvalidInput
  std::size_t attribute_index(const std::string& label) const;  // throws InvalidInput

  IndexSet object_set(const std::vector<std::string>& labels) const;
  IndexSet attribute_set(const std::vector<std::string>& labels) const;

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<IndexSet> rows_;  // per object: its attributes
  std::vector<IndexSet> cols_;  // per attribute: its objects
};

// Derivation operators. The empty set derives to the full opposite side.
IndexSet derive_extent(const FormalContext& ctx, const IndexSet& objects);
IndexSet derive_intent(const FormalContext& ctx, const IndexSet& attributes);
IndexSet closure_intent(const FormalContext& ctx, const IndexSet& attributes);
IndexSet closure_extent(const FormalContext& ctx, const IndexSet& objects);

// Label-level wrappers validating the identifiers.
std::vector<std::string> derive_extent(const FormalContext& ctx,
                                       const std::vector<std::string>& objects);
std::vector<std::string> derive_intent(const FormalContext& ctx,
                                       const std::vector<std::string>& attributes);
std::vector<std::string> closure_intent(const FormalContext& ctx,
                                        const std::vector<std::string>& attributes);

// CSV layout: header row of attribute labels, first column object labels, 0/1 cells.
void write_context_csv(const FormalContext& ctx, std::ostream& out);
FormalContext read_context_csv(std::istream& in);

}  // namespace biface
