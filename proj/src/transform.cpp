#include "digitop/transform.hpp"

#include <algorithm>
#include <sstream>

namespace digitop {

const char* step_kind_token(StepKind kind) {
  switch (kind) {
    case StepKind::dsp: return "DSP";
    case StepKind::asp: return "ASP";
    case StepKind::dse: return "DSE";
    case StepKind::ase: return "ASE";
    case StepKind::rep: return "REP";
    case StepKind::rsp: return "RSP";
  }
  return "?";
}

TransformStep TransformStep::delete_point(std::string v) {
  TransformStep s;
  s.kind = StepKind::dsp;
  s.v = std::move(v);
  return s;
}

TransformStep TransformStep::attach_point(std::string fresh, PointSet rim) {
  TransformStep s;
  s.kind = StepKind::asp;
  s.fresh = std::move(fresh);
  s.attachment_rim = std::move(rim);
  return s;
}

TransformStep TransformStep::delete_edge(std::string v, std::string u) {
  TransformStep s;
  s.kind = StepKind::dse;
  s.v = std::move(v);
  s.u = std::move(u);
  return s;
}

TransformStep TransformStep::attach_edge(std::string v, std::string u) {
  TransformStep s;
  s.kind = StepKind::ase;
  s.v = std::move(v);
  s.u = std::move(u);
  return s;
}

TransformStep TransformStep::replace_edge(std::string v, std::string u,
                                          std::string fresh) {
  TransformStep s;
  s.kind = StepKind::rep;
  s.v = std::move(v);
  s.u = std::move(u);
  s.fresh = std::move(fresh);
  return s;
}

TransformStep TransformStep::replace_pair(std::string v, std::string u,
                                          std::string fresh) {
  TransformStep s;
  s.kind = StepKind::rsp;
  s.v = std::move(v);
  s.u = std::move(u);
  s.fresh = std::move(fresh);
  return s;
}

std::string TransformStep::wire() const {
  std::string out = step_kind_token(kind);
  switch (kind) {
    case StepKind::dsp:
      out += " " + v;
      break;
    case StepKind::asp:
      out += " " + fresh + " :";
      for (const auto& label : attachment_rim) out += " " + label;
      break;
    case StepKind::dse:
    case StepKind::ase:
      out += " " + v + " " + u;
      break;
    case StepKind::rep:
    case StepKind::rsp:
      out += " " + v + " " + u + " -> " + fresh;
      break;
  }
  return out;
}

TransformStep TransformStep::parse_wire(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(std::move(t));
  auto malformed = [&]() -> TransformStep {
    fail(ErrorCode::parse_error, "malformed step: " + line);
  };
  if (tokens.empty()) return malformed();
  const std::string& kind = tokens[0];
  if (kind == "DSP") {
    if (tokens.size() != 2) return malformed();
    return delete_point(tokens[1]);
  }
  if (kind == "ASP") {
    if (tokens.size() < 3 || tokens[2] != ":") return malformed();
    return attach_point(tokens[1], PointSet(std::vector<std::string>(
                                       tokens.begin() + 3, tokens.end())));
  }
  if (kind == "DSE" || kind == "ASE") {
    if (tokens.size() != 3) return malformed();
    return kind == "DSE" ? delete_edge(tokens[1], tokens[2])
                         : attach_edge(tokens[1], tokens[2]);
  }
  if (kind == "REP" || kind == "RSP") {
    if (tokens.size() != 5 || tokens[3] != "->") return malformed();
    return kind == "REP" ? replace_edge(tokens[1], tokens[2], tokens[4])
                         : replace_pair(tokens[1], tokens[2], tokens[4]);
  }
  return malformed();
}

namespace {

DigitalSpace rebuild_with(
    const DigitalSpace& space,
    const std::vector<std::string>& extra_points,
    const std::vector<std::pair<std::string, std::string>>& extra_edges,
    const PointSet& dropped_points,
    const std::vector<std::pair<std::string, std::string>>& dropped_edges) {
  auto dropped_edge = [&](const std::string& a, const std::string& b) {
    for (const auto& [x, y] : dropped_edges) {
      if ((a == x && b == y) || (a == y && b == x)) return true;
    }
    return false;
  };
  std::vector<std::string> points;
  for (const auto& label : space.labels()) {
    if (!dropped_points.contains(label)) points.push_back(label);
  }
  points.insert(points.end(), extra_points.begin(), extra_points.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [a, b] : space.edge_list()) {
    if (dropped_points.contains(a) || dropped_points.contains(b)) continue;
    if (dropped_edge(a, b)) continue;
    edges.emplace_back(a, b);
  }
  edges.insert(edges.end(), extra_edges.begin(), extra_edges.end());
  return DigitalSpace::build(points, edges);
}

void require_fresh(const DigitalSpace& space, const std::string& label) {
  if (space.has_point(label)) fail(ErrorCode::point_collision, label);
}

}  // namespace

DigitalSpace delete_simple_point(const DigitalSpace& space, const std::string& v,
                                 const ContractOptions& options) {
  if (!is_simple_point(space, v, options)) fail(ErrorCode::not_simple, v);
  return induced_subspace(space, space.point_set().without(v));
}

DigitalSpace attach_simple_point(const DigitalSpace& space,
                                 const std::string& fresh,
                                 const PointSet& rim_set,
                                 const ContractOptions& options) {
  require_fresh(space, fresh);
  for (const auto& label : rim_set) space.index_of(label);  // UnknownPoint
  if (rim_set.empty() || !contractible(induced_subspace(space, rim_set), options))
    fail(ErrorCode::rim_not_contractible,
         "attachment rim of " + fresh + " is not contractible");
  std::vector<std::pair<std::string, std::string>> spokes;
  for (const auto& label : rim_set) spokes.emplace_back(fresh, label);
  return rebuild_with(space, {fresh}, spokes, {}, {});
}

DigitalSpace delete_simple_edge(const DigitalSpace& space, const std::string& v,
                                const std::string& u,
                                const ContractOptions& options) {
  if (v == u) fail(ErrorCode::self_loop, v);
  if (!space.adjacent(v, u)) fail(ErrorCode::not_adjacent, v + " " + u);
  if (!is_simple_edge_for_deletion(space, v, u, options))
    fail(ErrorCode::not_simple_edge, "(" + v + " " + u + ")");
  return rebuild_with(space, {}, {}, {}, {{v, u}});
}

DigitalSpace attach_simple_edge(const DigitalSpace& space, const std::string& v,
                                const std::string& u,
                                const ContractOptions& options) {
  if (v == u) fail(ErrorCode::self_loop, v);
  if (space.adjacent(v, u)) fail(ErrorCode::already_adjacent, v + " " + u);
  if (!is_simple_edge_for_attachment(space, v, u, options))
    fail(ErrorCode::not_simple_edge, "(" + v + " " + u + ")");
  return rebuild_with(space, {}, {{v, u}}, {}, {});
}

DigitalSpace replace_edge_with_point(const DigitalSpace& space,
                                     const std::string& v, const std::string& u,
                                     const std::string& fresh) {
  if (v == u) fail(ErrorCode::self_loop, v);
  if (!space.adjacent(v, u)) fail(ErrorCode::not_adjacent, v + " " + u);
  require_fresh(space, fresh);
  PointSet hub = joint_rim(space, PointSet{v, u}).with(v).with(u);
  std::vector<std::pair<std::string, std::string>> spokes;
  for (const auto& label : hub) spokes.emplace_back(fresh, label);
  return rebuild_with(space, {fresh}, spokes, {}, {{v, u}});
}

DigitalSpace replace_simple_pair(const DigitalSpace& space, const std::string& v,
                                 const std::string& u, const std::string& fresh) {
  if (!is_simple_pair(space, v, u))
    fail(ErrorCode::not_simple_pair, "{" + v + ", " + u + "}");
  require_fresh(space, fresh);
  PointSet hub = rim(space, v).unite(rim(space, u)).without(v).without(u);
  std::vector<std::pair<std::string, std::string>> spokes;
  for (const auto& label : hub) spokes.emplace_back(fresh, label);
  return rebuild_with(space, {fresh}, spokes, PointSet{v, u}, {});
}

DigitalSpace apply(const DigitalSpace& space, const TransformStep& step,
                   const ContractOptions& options) {
  switch (step.kind) {
    case StepKind::dsp:
      return delete_simple_point(space, step.v, options);
    case StepKind::asp:
      return attach_simple_point(space, step.fresh, step.attachment_rim, options);
    case StepKind::dse:
      return delete_simple_edge(space, step.v, step.u, options);
    case StepKind::ase:
      return attach_simple_edge(space, step.v, step.u, options);
    case StepKind::rep:
      return replace_edge_with_point(space, step.v, step.u, step.fresh);
    case StepKind::rsp:
      return replace_simple_pair(space, step.v, step.u, step.fresh);
  }
  fail(ErrorCode::invalid_spec, "unknown step kind");
}

DigitalSpace replay(const DigitalSpace& initial,
                    const std::vector<TransformStep>& steps,
                    const ContractOptions& options) {
  DigitalSpace current = initial;
  for (const auto& step : steps) current = apply(current, step, options);
  return current;
}

namespace {

std::string mint_label(const DigitalSpace& space, std::size_t& counter) {
  std::string label;
  do {
    label = "_g" + std::to_string(counter++);
  } while (space.has_point(label));
  return label;
}

// First adjacent pair in lexicographic (min,max) order passing the test.
template <typename Pred>
std::optional<std::pair<std::string, std::string>> least_adjacent_pair(
    const DigitalSpace& space, Pred&& pred) {
  for (std::uint32_t i = 0; i < space.point_count(); ++i) {
    for (std::uint32_t j : space.neighbors_at(i)) {
      if (j <= i) continue;
      if (pred(space.label_at(i), space.label_at(j)))
        return std::make_pair(space.label_at(i), space.label_at(j));
    }
  }
  return std::nullopt;
}

}  // namespace

ReductionTrace reduce(const DigitalSpace& space, ReducePolicy policy,
                      const ContractOptions& options) {
  if (space.empty()) fail(ErrorCode::empty_space, "reduce of the empty space");
  ReductionTrace trace;
  trace.initial = space;
  DigitalSpace current = space;
  std::size_t mint_counter = 1;
  for (;;) {
    bool stepped = false;
    for (const auto& label : current.labels()) {
      if (is_simple_point(current, label, options)) {
        trace.steps.push_back(TransformStep::delete_point(label));
        current = delete_simple_point(current, label, options);
        stepped = true;
        break;
      }
    }
    if (stepped) continue;
    if (policy != ReducePolicy::points_only) {
      auto edge = least_adjacent_pair(current, [&](const auto& a, const auto& b) {
        return is_simple_edge_for_deletion(current, a, b, options);
      });
      if (edge) {
        trace.steps.push_back(TransformStep::delete_edge(edge->first, edge->second));
        current = delete_simple_edge(current, edge->first, edge->second, options);
        continue;
      }
    }
    if (policy == ReducePolicy::full) {
      auto pair = least_adjacent_pair(current, [&](const auto& a, const auto& b) {
        return is_simple_pair(current, a, b);
      });
      if (pair) {
        const std::string fresh = mint_label(current, mint_counter);
        trace.steps.push_back(
            TransformStep::replace_pair(pair->first, pair->second, fresh));
        current = replace_simple_pair(current, pair->first, pair->second, fresh);
        continue;
      }
    }
    break;
  }
  trace.final_space = std::move(current);
  return trace;
}

EquivalenceVerdict homotopy_equivalent_by_reduction(
    const DigitalSpace& g, const DigitalSpace& h,
    const ContractOptions& contract_options, const EulerOptions& euler_options) {
  if (g.empty() || h.empty())
    fail(ErrorCode::empty_space, "equivalence of an empty space");
  if (euler_characteristic(g, euler_options) !=
      euler_characteristic(h, euler_options))
    return EquivalenceVerdict::distinct;
  const DigitalSpace rg = reduce(g, ReducePolicy::full, contract_options).final_space;
  const DigitalSpace rh = reduce(h, ReducePolicy::full, contract_options).final_space;
  const std::size_t cap =
      std::max<std::size_t>(64, std::max(rg.point_count(), rh.point_count()));
  if (are_isomorphic(rg, rh, CanonOptions{cap}))
    return EquivalenceVerdict::equivalent;
  return EquivalenceVerdict::unknown;
}

}  // namespace digitop
