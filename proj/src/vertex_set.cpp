#include "domtri/vertex_set.h"

#include <algorithm>
#include <bit>
#include <iterator>

#include "domtri/error.h"

namespace domtri {

VertexSet::VertexSet(std::vector<VertexId> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw Error("VertexSet: duplicate vertex id");
  if (!members_.empty() && members_.front() < 0) throw Error("VertexSet: negative vertex id");
}

VertexSet::VertexSet(std::initializer_list<VertexId> ids) : VertexSet(std::vector<VertexId>(ids)) {}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  std::vector<VertexId> ids;
  ids.reserve(std::popcount(mask));
  while (mask) {
    ids.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  VertexSet s;
  s.members_ = std::move(ids);
  return s;
}

VertexSet VertexSet::from_flags(const std::vector<bool>& flags) {
  VertexSet s;
  for (std::size_t v = 0; v < flags.size(); ++v)
    if (flags[v]) s.members_.push_back(static_cast<VertexId>(v));
  return s;
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::united(const VertexSet& other) const {
  VertexSet s;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(s.members_));
  return s;
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
  VertexSet s;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(s.members_));
  return s;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet s;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(s.members_));
  return s;
}

}  // namespace domtri
