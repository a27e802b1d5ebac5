#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "digitop/errors.hpp"

namespace digitop {

// A set of point labels, kept sorted and deduplicated. Used for rims, balls,
// joint rims and the parts of a double cone; membership in an ambient space
// is validated where it matters.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<std::string> labels);
  PointSet(std::initializer_list<std::string> labels);

  bool contains(const std::string& label) const;
  bool empty() const { return labels_.empty(); }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  PointSet unite(const PointSet& other) const;
  PointSet intersect(const PointSet& other) const;
  PointSet minus(const PointSet& other) const;
  PointSet with(const std::string& label) const;
  PointSet without(const std::string& label) const;

  bool operator==(const PointSet& other) const = default;

  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

 private:
  std::vector<std::string> labels_;
};

// A digital space: a finite simple graph over labeled points. Immutable after
// construction; every operation that changes the space returns a new value.
// Points are kept in lexicographic label order, which fixes all iteration and
// serialization orders.
class DigitalSpace {
 public:
  DigitalSpace() = default;  // the empty space

  static DigitalSpace build(
      const std::vector<std::string>& points,
      const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t point_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return labels_.empty(); }

  const std::vector<std::string>& labels() const { return labels_; }
  bool has_point(const std::string& label) const;
  bool adjacent(const std::string& a, const std::string& b) const;

  // Edges as (min,max) label pairs in lexicographic pair order.
  std::vector<std::pair<std::string, std::string>> edge_list() const;

  PointSet point_set() const { return PointSet(labels_); }

  // Index-level access; indices follow label order.
  std::size_t index_of(const std::string& label) const;
  const std::string& label_at(std::size_t i) const { return labels_[i]; }
  const std::vector<std::uint32_t>& neighbors_at(std::size_t i) const {
    return neighbors_[i];
  }
  bool adjacent_at(std::size_t i, std::size_t j) const;
  std::size_t degree_at(std::size_t i) const { return neighbors_[i].size(); }

  // Equal as labeled objects: same labels, same edges.
  bool operator==(const DigitalSpace& other) const;

 private:
  friend DigitalSpace induced_by_indices(const DigitalSpace&,
                                         const std::vector<std::uint32_t>&);
  static DigitalSpace from_sorted_parts(
      std::vector<std::string> labels,
      std::vector<std::pair<std::uint32_t, std::uint32_t>> index_edges);

  std::vector<std::string> labels_;                    // sorted, unique
  std::vector<std::vector<std::uint32_t>> neighbors_;  // sorted per row
  std::vector<std::vector<std::uint64_t>> adj_bits_;   // row bitsets
  std::size_t edge_count_ = 0;
};

// Subspace induced by a point set (keeps exactly the edges with both
// endpoints in the set).
DigitalSpace induced_subspace(const DigitalSpace& space, const PointSet& points);

// Induced subspace by index subset (sorted or not; deduplicated).
DigitalSpace induced_by_indices(const DigitalSpace& space,
                                const std::vector<std::uint32_t>& indices);

// All points adjacent to v, excluding v itself.
PointSet rim(const DigitalSpace& space, const std::string& v);

// rim(v) together with v.
PointSet ball(const DigitalSpace& space, const std::string& v);

// The subspace induced by the rim of v.
DigitalSpace rim_space(const DigitalSpace& space, const std::string& v);

// Points simultaneously adjacent to every point of the nonempty set H.
PointSet joint_rim(const DigitalSpace& space, const PointSet& h);

// Disjoint union of the point-disjoint spaces plus all cross edges.
DigitalSpace join(const DigitalSpace& g, const DigitalSpace& h);

// join of the one-point space {apex} with g.
DigitalSpace cone(const std::string& apex, const DigitalSpace& g);

// Two adjacent apexes v,u; v cones a and c, u cones b and c; a, b, c keep
// their internal edges and get no edges between each other.
DigitalSpace double_cone(const std::string& v, const std::string& u,
                         const DigitalSpace& a, const DigitalSpace& b,
                         const DigitalSpace& c);

bool is_connected(const DigitalSpace& space);
bool is_complete(const DigitalSpace& space);

}  // namespace digitop
