#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace domtri {

using VertexId = int;
using FaceId = int;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts `ids`; throws domtri::Error on duplicates or negative ids.
  explicit VertexSet(std::vector<VertexId> ids);
  VertexSet(std::initializer_list<VertexId> ids);

  static VertexSet from_mask(std::uint64_t mask);
  static VertexSet from_flags(const std::vector<bool>& flags);

  bool contains(VertexId v) const;
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  std::span<const VertexId> members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  VertexSet united(const VertexSet& other) const;
  VertexSet intersected(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> members_;
};

}  // namespace domtri
