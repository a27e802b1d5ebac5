#include "digitop/contract.hpp"

#include <algorithm>
#include <unordered_set>

namespace digitop {

ContractCache& default_contract_cache() {
  static ContractCache cache;
  return cache;
}

namespace {

struct Ctx {
  std::size_t cap;
  ContractCache& cache;
};

Ctx make_ctx(const ContractOptions& options) {
  return Ctx{options.size_cap,
             options.cache ? *options.cache : default_contract_cache()};
}

void check_cap(std::size_t n, const Ctx& ctx) {
  if (n > ctx.cap)
    fail(ErrorCode::size_cap_exceeded,
         std::to_string(n) + " points, cap " + std::to_string(ctx.cap));
}

DigitalSpace without_index(const DigitalSpace& s, std::uint32_t v) {
  std::vector<std::uint32_t> keep;
  keep.reserve(s.point_count() - 1);
  for (std::uint32_t i = 0; i < s.point_count(); ++i) {
    if (i != v) keep.push_back(i);
  }
  return induced_by_indices(s, keep);
}

bool contractible_impl(const DigitalSpace& s, const Ctx& ctx);

// Rim of vertex v inside s, as a space; empty rims are never contractible.
bool rim_contractible(const DigitalSpace& s, std::uint32_t v, const Ctx& ctx) {
  if (s.degree_at(v) == 0) return false;
  return contractible_impl(induced_by_indices(s, s.neighbors_at(v)), ctx);
}

// Reverse reading of the inductive construction: a space with two or more
// points is contractible iff deleting some simple point leaves a
// contractible space. Backtracks over the choice, label-least first.
bool contractible_impl(const DigitalSpace& s, const Ctx& ctx) {
  if (s.point_count() == 1) return true;
  if (!is_connected(s)) return false;
  const CanonicalKey key = canonical_form(s, CanonOptions{ctx.cap});
  if (auto hit = ctx.cache.lookup(key)) return *hit;
  bool result = false;
  for (std::uint32_t v = 0; v < s.point_count(); ++v) {
    if (!rim_contractible(s, v, ctx)) continue;
    if (contractible_impl(without_index(s, v), ctx)) {
      result = true;
      break;
    }
  }
  ctx.cache.store(key, result);
  return result;
}

void require_nonempty(const DigitalSpace& s, const char* what) {
  if (s.empty()) fail(ErrorCode::empty_space, what);
}

}  // namespace

bool contractible(const DigitalSpace& space, const ContractOptions& options) {
  require_nonempty(space, "contractibility of the empty space");
  const Ctx ctx = make_ctx(options);
  check_cap(space.point_count(), ctx);
  return contractible_impl(space, ctx);
}

ContractibilityVerdict is_contractible(const DigitalSpace& space,
                                       const ContractOptions& options) {
  require_nonempty(space, "contractibility of the empty space");
  const Ctx ctx = make_ctx(options);
  check_cap(space.point_count(), ctx);
  if (!contractible_impl(space, ctx)) return {false, std::nullopt};
  // Witness reconstruction: a contractible space with >= 2 points always
  // has a simple point whose removal stays contractible, so the memoized
  // decision can guide a straight descent.
  std::vector<std::string> witness;
  DigitalSpace current = space;
  while (current.point_count() > 1) {
    for (std::uint32_t v = 0; v < current.point_count(); ++v) {
      if (!rim_contractible(current, v, ctx)) continue;
      DigitalSpace rest = without_index(current, v);
      if (contractible_impl(rest, ctx)) {
        witness.push_back(current.label_at(v));
        current = std::move(rest);
        break;
      }
    }
  }
  return {true, std::move(witness)};
}

bool is_simple_point(const DigitalSpace& space, const std::string& v,
                     const ContractOptions& options) {
  const auto index = static_cast<std::uint32_t>(space.index_of(v));
  if (space.degree_at(index) == 0) return false;
  const Ctx ctx = make_ctx(options);
  check_cap(space.degree_at(index), ctx);
  return rim_contractible(space, index, ctx);
}

std::vector<std::string> simple_points(const DigitalSpace& space,
                                       const ContractOptions& options) {
  require_nonempty(space, "simple points of the empty space");
  std::vector<std::string> out;
  for (const auto& label : space.labels()) {
    if (is_simple_point(space, label, options)) out.push_back(label);
  }
  return out;
}

namespace {

bool joint_rim_contractible(const DigitalSpace& space, const std::string& v,
                            const std::string& u,
                            const ContractOptions& options) {
  const PointSet common = joint_rim(space, PointSet{v, u});
  if (common.empty()) return false;
  const Ctx ctx = make_ctx(options);
  check_cap(common.size(), ctx);
  return contractible_impl(induced_subspace(space, common), ctx);
}

void check_distinct(const std::string& v, const std::string& u) {
  if (v == u) fail(ErrorCode::self_loop, v);
}

}  // namespace

bool is_simple_edge_for_deletion(const DigitalSpace& space,
                                 const std::string& v, const std::string& u,
                                 const ContractOptions& options) {
  check_distinct(v, u);
  if (!space.adjacent(v, u)) return false;
  return joint_rim_contractible(space, v, u, options);
}

bool is_simple_edge_for_attachment(const DigitalSpace& space,
                                   const std::string& v, const std::string& u,
                                   const ContractOptions& options) {
  check_distinct(v, u);
  if (space.adjacent(v, u)) return false;
  return joint_rim_contractible(space, v, u, options);
}

bool is_simple_pair(const DigitalSpace& space, const std::string& v,
                    const std::string& u) {
  check_distinct(v, u);
  if (!space.adjacent(v, u)) return false;
  const PointSet rim_v = rim(space, v);
  const PointSet rim_u = rim(space, u);
  const PointSet common = rim_v.intersect(rim_u);
  const PointSet a = rim_v.minus(common).without(u);
  const PointSet b = rim_u.minus(common).without(v);
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (space.adjacent(x, y)) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::string>> collapse_to_subspace(
    const DigitalSpace& space, const PointSet& target,
    const ContractOptions& options) {
  require_nonempty(space, "collapse of the empty space");
  const Ctx ctx = make_ctx(options);
  check_cap(space.point_count(), ctx);
  for (const auto& label : target) space.index_of(label);  // UnknownPoint
  if (!contractible_impl(space, ctx))
    fail(ErrorCode::precondition_violated, "space is not contractible");
  const DigitalSpace goal = induced_subspace(space, target);
  if (goal.empty() || !contractible_impl(goal, ctx))
    fail(ErrorCode::precondition_violated,
         "target subspace is not contractible");

  const std::size_t n = space.point_count();
  std::vector<char> in_target(n, 0);
  for (const auto& label : target) in_target[space.index_of(label)] = 1;

  // State = subset of original indices still present. Exhaustive DFS over
  // simple-point deletions outside the target, with a visited set so each
  // subset is explored once.
  std::unordered_set<std::string> visited;
  std::vector<std::string> sequence;

  auto mask_key = [n](const std::vector<char>& present) {
    std::string key((n + 7) / 8, '\0');
    for (std::size_t i = 0; i < n; ++i) {
      if (present[i]) key[i / 8] |= static_cast<char>(1 << (i % 8));
    }
    return key;
  };

  std::vector<char> present(n, 1);
  std::size_t remaining_extra = n - target.size();

  auto build_current = [&](const std::vector<char>& mask) {
    std::vector<std::uint32_t> keep;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask[i]) keep.push_back(i);
    }
    return induced_by_indices(space, keep);
  };

  auto dfs = [&](auto&& self) -> bool {
    if (remaining_extra == 0) return true;
    auto key = mask_key(present);
    if (visited.contains(key)) return false;
    const DigitalSpace current = build_current(present);
    for (std::uint32_t local = 0; local < current.point_count(); ++local) {
      const std::uint32_t original =
          static_cast<std::uint32_t>(space.index_of(current.label_at(local)));
      if (in_target[original]) continue;
      if (!rim_contractible(current, local, ctx)) continue;
      present[original] = 0;
      --remaining_extra;
      sequence.push_back(current.label_at(local));
      if (self(self)) return true;
      sequence.pop_back();
      ++remaining_extra;
      present[original] = 1;
    }
    visited.insert(std::move(key));
    return false;
  };

  if (dfs(dfs)) return sequence;
  return std::nullopt;
}

}  // namespace digitop
