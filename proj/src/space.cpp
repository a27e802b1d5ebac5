#include "digitop/space.hpp"

#include <algorithm>
#include <iterator>
#include <queue>
#include <set>

namespace digitop {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::self_loop: return "SelfLoop";
    case ErrorCode::unknown_point: return "UnknownPoint";
    case ErrorCode::duplicate_point: return "DuplicatePoint";
    case ErrorCode::point_collision: return "PointCollision";
    case ErrorCode::empty_space: return "EmptySpace";
    case ErrorCode::empty_subspace: return "EmptySubspace";
    case ErrorCode::size_cap_exceeded: return "SizeCapExceeded";
    case ErrorCode::not_simple: return "NotSimple";
    case ErrorCode::not_simple_edge: return "NotSimpleEdge";
    case ErrorCode::not_adjacent: return "NotAdjacent";
    case ErrorCode::already_adjacent: return "AlreadyAdjacent";
    case ErrorCode::rim_not_contractible: return "RimNotContractible";
    case ErrorCode::not_simple_pair: return "NotSimplePair";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::invalid_spec: return "InvalidSpec";
  }
  return "Error";
}

PointSet::PointSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

PointSet::PointSet(std::initializer_list<std::string> labels)
    : PointSet(std::vector<std::string>(labels)) {}

bool PointSet::contains(const std::string& label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

PointSet PointSet::unite(const PointSet& other) const {
  std::vector<std::string> out;
  out.reserve(labels_.size() + other.labels_.size());
  std::set_union(labels_.begin(), labels_.end(), other.labels_.begin(),
                 other.labels_.end(), std::back_inserter(out));
  PointSet result;
  result.labels_ = std::move(out);
  return result;
}

PointSet PointSet::intersect(const PointSet& other) const {
  std::vector<std::string> out;
  std::set_intersection(labels_.begin(), labels_.end(), other.labels_.begin(),
                        other.labels_.end(), std::back_inserter(out));
  PointSet result;
  result.labels_ = std::move(out);
  return result;
}

PointSet PointSet::minus(const PointSet& other) const {
  std::vector<std::string> out;
  std::set_difference(labels_.begin(), labels_.end(), other.labels_.begin(),
                      other.labels_.end(), std::back_inserter(out));
  PointSet result;
  result.labels_ = std::move(out);
  return result;
}

PointSet PointSet::with(const std::string& label) const {
  return unite(PointSet{label});
}

PointSet PointSet::without(const std::string& label) const {
  return minus(PointSet{label});
}

namespace {

constexpr std::size_t kWordBits = 64;

inline bool test_bit(const std::vector<std::uint64_t>& row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1u;
}

inline void set_bit(std::vector<std::uint64_t>& row, std::size_t i) {
  row[i / kWordBits] |= std::uint64_t(1) << (i % kWordBits);
}

}  // namespace

DigitalSpace DigitalSpace::from_sorted_parts(
    std::vector<std::string> labels,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> index_edges) {
  DigitalSpace s;
  s.labels_ = std::move(labels);
  const std::size_t n = s.labels_.size();
  const std::size_t words = (n + kWordBits - 1) / kWordBits;
  s.neighbors_.assign(n, {});
  s.adj_bits_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (auto& [i, j] : index_edges) {
    if (i > j) std::swap(i, j);
  }
  std::sort(index_edges.begin(), index_edges.end());
  index_edges.erase(std::unique(index_edges.begin(), index_edges.end()),
                    index_edges.end());
  for (const auto& [i, j] : index_edges) {
    s.neighbors_[i].push_back(j);
    s.neighbors_[j].push_back(i);
    set_bit(s.adj_bits_[i], j);
    set_bit(s.adj_bits_[j], i);
  }
  for (auto& row : s.neighbors_) std::sort(row.begin(), row.end());
  s.edge_count_ = index_edges.size();
  return s;
}

DigitalSpace DigitalSpace::build(
    const std::vector<std::string>& points,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<std::string> labels = points;
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] == labels[i - 1])
      fail(ErrorCode::duplicate_point, labels[i]);
  }
  auto index_of = [&](const std::string& label) -> std::uint32_t {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label)
      fail(ErrorCode::unknown_point, label);
    return static_cast<std::uint32_t>(it - labels.begin());
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> index_edges;
  index_edges.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) fail(ErrorCode::self_loop, a);
    index_edges.emplace_back(index_of(a), index_of(b));
  }
  return from_sorted_parts(std::move(labels), std::move(index_edges));
}

bool DigitalSpace::has_point(const std::string& label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

std::size_t DigitalSpace::index_of(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label)
    fail(ErrorCode::unknown_point, label);
  return static_cast<std::size_t>(it - labels_.begin());
}

bool DigitalSpace::adjacent(const std::string& a, const std::string& b) const {
  return adjacent_at(index_of(a), index_of(b));
}

bool DigitalSpace::adjacent_at(std::size_t i, std::size_t j) const {
  return test_bit(adj_bits_[i], j);
}

std::vector<std::pair<std::string, std::string>> DigitalSpace::edge_list()
    const {
  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(edge_count_);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::uint32_t j : neighbors_[i]) {
      if (j > i) edges.emplace_back(labels_[i], labels_[j]);
    }
  }
  return edges;  // label order on indices gives lexicographic pair order
}

bool DigitalSpace::operator==(const DigitalSpace& other) const {
  return labels_ == other.labels_ && neighbors_ == other.neighbors_;
}

DigitalSpace induced_by_indices(const DigitalSpace& space,
                                const std::vector<std::uint32_t>& indices) {
  std::vector<std::uint32_t> keep = indices;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (std::uint32_t i : keep) labels.push_back(space.label_at(i));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t a = 0; a < keep.size(); ++a) {
    for (std::uint32_t b = a + 1; b < keep.size(); ++b) {
      if (space.adjacent_at(keep[a], keep[b])) edges.emplace_back(a, b);
    }
  }
  return DigitalSpace::from_sorted_parts(std::move(labels), std::move(edges));
}

DigitalSpace induced_subspace(const DigitalSpace& space,
                              const PointSet& points) {
  std::vector<std::uint32_t> indices;
  indices.reserve(points.size());
  for (const auto& label : points)
    indices.push_back(static_cast<std::uint32_t>(space.index_of(label)));
  return induced_by_indices(space, indices);
}

PointSet rim(const DigitalSpace& space, const std::string& v) {
  const std::size_t i = space.index_of(v);
  std::vector<std::string> labels;
  labels.reserve(space.degree_at(i));
  for (std::uint32_t j : space.neighbors_at(i))
    labels.push_back(space.label_at(j));
  return PointSet(std::move(labels));
}

PointSet ball(const DigitalSpace& space, const std::string& v) {
  return rim(space, v).with(v);
}

DigitalSpace rim_space(const DigitalSpace& space, const std::string& v) {
  const std::size_t i = space.index_of(v);
  return induced_by_indices(space, space.neighbors_at(i));
}

PointSet joint_rim(const DigitalSpace& space, const PointSet& h) {
  if (h.empty()) fail(ErrorCode::empty_subspace, "joint rim of an empty set");
  bool first = true;
  PointSet acc;
  for (const auto& label : h) {
    acc = first ? rim(space, label) : acc.intersect(rim(space, label));
    first = false;
  }
  return acc;
}

namespace {

void collect_parts(const DigitalSpace& s,
                   std::vector<std::string>& points,
                   std::vector<std::pair<std::string, std::string>>& edges) {
  points.insert(points.end(), s.labels().begin(), s.labels().end());
  auto es = s.edge_list();
  edges.insert(edges.end(), es.begin(), es.end());
}

void check_disjoint(const DigitalSpace& g, const DigitalSpace& h) {
  for (const auto& label : h.labels()) {
    if (g.has_point(label)) fail(ErrorCode::point_collision, label);
  }
}

}  // namespace

DigitalSpace join(const DigitalSpace& g, const DigitalSpace& h) {
  check_disjoint(g, h);
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::string>> edges;
  collect_parts(g, points, edges);
  collect_parts(h, points, edges);
  for (const auto& a : g.labels())
    for (const auto& b : h.labels()) edges.emplace_back(a, b);
  return DigitalSpace::build(points, edges);
}

DigitalSpace cone(const std::string& apex, const DigitalSpace& g) {
  return join(DigitalSpace::build({apex}, {}), g);
}

DigitalSpace double_cone(const std::string& v, const std::string& u,
                         const DigitalSpace& a, const DigitalSpace& b,
                         const DigitalSpace& c) {
  check_disjoint(a, b);
  check_disjoint(a, c);
  check_disjoint(b, c);
  for (const auto& s : {a, b, c}) {
    if (s.has_point(v)) fail(ErrorCode::point_collision, v);
    if (s.has_point(u)) fail(ErrorCode::point_collision, u);
  }
  if (v == u) fail(ErrorCode::point_collision, v);
  std::vector<std::string> points{v, u};
  std::vector<std::pair<std::string, std::string>> edges{{v, u}};
  collect_parts(a, points, edges);
  collect_parts(b, points, edges);
  collect_parts(c, points, edges);
  for (const auto& x : a.labels()) edges.emplace_back(v, x);
  for (const auto& x : b.labels()) edges.emplace_back(u, x);
  for (const auto& x : c.labels()) {
    edges.emplace_back(v, x);
    edges.emplace_back(u, x);
  }
  return DigitalSpace::build(points, edges);
}

bool is_connected(const DigitalSpace& space) {
  if (space.empty()) fail(ErrorCode::empty_space, "connectedness of the empty space");
  const std::size_t n = space.point_count();
  std::vector<char> seen(n, 0);
  std::queue<std::uint32_t> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::uint32_t i = frontier.front();
    frontier.pop();
    for (std::uint32_t j : space.neighbors_at(i)) {
      if (!seen[j]) {
        seen[j] = 1;
        ++reached;
        frontier.push(j);
      }
    }
  }
  return reached == n;
}

bool is_complete(const DigitalSpace& space) {
  if (space.empty()) fail(ErrorCode::empty_space, "completeness of the empty space");
  const std::size_t n = space.point_count();
  return space.edge_count() == n * (n - 1) / 2;
}

}  // namespace digitop
