#include "biface/context.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "biface/errors.hpp"

namespace biface {
namespace {

void check_no_duplicates(const std::vector<std::string>& labels, const char* kind) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw InvalidInput(std::string("duplicate ") + kind + " label: " + l);
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             const std::vector<std::vector<bool>>& incidence)
    : objects_(std::move(objects)), attributes_(std::move(attributes)) {
  check_no_duplicates(objects_, "object");
  check_no_duplicates(attributes_, "attribute");
  if (incidence.size() != objects_.size())
    throw InvalidInput("incidence row count does not match object count");
  rows_.assign(objects_.size(), IndexSet(attributes_.size()));
  cols_.assign(attributes_.size(), IndexSet(objects_.size()));
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (incidence[i].size() != attributes_.size())
      throw InvalidInput("incidence column count does not match attribute count");
    for (std::size_t j = 0; j < attributes_.size(); ++j) {
      if (incidence[i][j]) {
        rows_[i].set(j);
        cols_[j].set(i);
      }
    }
  }
}

std::size_t FormalContext::object_index(const std::string& label) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == label) return i;
  throw InvalidInput("unknown object identifier: " + label);
}

std::size_t FormalContext::attribute_index(const std::string& label) const {
  for (std::size_t j = 0; j < attributes_.size(); ++j)
    if (attributes_[j] == label) return j;
  throw InvalidInput("unknown attribute identifier: " + label);
}

IndexSet FormalContext::object_set(const std::vector<std::string>& labels) const {
  IndexSet s(objects_.size());
  for (const auto& l : labels) s.set(object_index(l));
  return s;
}

IndexSet FormalContext::attribute_set(const std::vector<std::string>& labels) const {
  IndexSet s(attributes_.size());
  for (const auto& l : labels) s.set(attribute_index(l));
  return s;
}

IndexSet derive_extent(const FormalContext& ctx, const IndexSet& objects) {
  IndexSet result(ctx.attribute_count(), true);
  objects.for_each([&](std::size_t g) { result &= ctx.row(g); });
  return result;
}

IndexSet derive_intent(const FormalContext& ctx, const IndexSet& attributes) {
  IndexSet result(ctx.object_count(), true);
  attributes.for_each([&](std::size_t m) { result &= ctx.column(m); });
  return result;
}

IndexSet closure_intent(const FormalContext& ctx, const IndexSet& attributes) {
  return derive_extent(ctx, derive_intent(ctx, attributes));
}

IndexSet closure_extent(const FormalContext& ctx, const IndexSet& objects) {
  return derive_intent(ctx, derive_extent(ctx, objects));
}

namespace {
std::vector<std::string> pick(const std::vector<std::string>& labels, const IndexSet& s) {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(labels[i]); });
  return out;
}
}  // namespace

std::vector<std::string> derive_extent(const FormalContext& ctx,
                                       const std::vector<std::string>& objects) {
  return pick(ctx.attributes(), derive_extent(ctx, ctx.object_set(objects)));
}

std::vector<std::string> derive_intent(const FormalContext& ctx,
                                       const std::vector<std::string>& attributes) {
  return pick(ctx.objects(), derive_intent(ctx, ctx.attribute_set(attributes)));
}

std::vector<std::string> closure_intent(const FormalContext& ctx,
                                        const std::vector<std::string>& attributes) {
  return pick(ctx.attributes(), closure_intent(ctx, ctx.attribute_set(attributes)));
}

void write_context_csv(const FormalContext& ctx, std::ostream& out) {
  for (const auto& a : ctx.attributes()) out << ',' << a;
  out << '\n';
  for (std::size_t i = 0; i < ctx.object_count(); ++i) {
    out << ctx.objects()[i];
    for (std::size_t j = 0; j < ctx.attribute_count(); ++j)
      out << ',' << (ctx.incidence(i, j) ? '1' : '0');
    out << '\n';
  }
}

FormalContext read_context_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput("empty context file");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::vector<std::string> attributes;
  {
    std::stringstream ss(line);
    std::string cell;
    bool first = true;
    while (std::getline(ss, cell, ',')) {
      if (first) {
        first = false;  // corner cell, ignored
        continue;
      }
      attributes.push_back(cell);
    }
    if (line.empty() || line[0] == ',') {
      // ok: header starts with the empty corner cell
    }
  }
  if (attributes.empty()) throw InvalidInput("context header has no attributes");

  std::vector<std::string> objects;
  std::vector<std::vector<bool>> incidence;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    if (!std::getline(ss, cell, ',')) throw ParseError(lineno, "missing object label");
    objects.push_back(cell);
    std::vector<bool> row;
    while (std::getline(ss, cell, ',')) {
      if (cell == "0")
        row.push_back(false);
      else if (cell == "1")
        row.push_back(true);
      else
        throw ParseError(lineno, "cell is not 0/1: '" + cell + "'");
    }
    if (row.size() != attributes.size())
      throw ParseError(lineno, "row width does not match header");
    incidence.push_back(std::move(row));
  }
  if (objects.empty()) throw InvalidInput("context has no objects");
  return FormalContext(std::move(objects), std::move(attributes), incidence);
}

}  // namespace biface
