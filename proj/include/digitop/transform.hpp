#pragma once

#include <string>
#include <vector>

#include "digitop/contract.hpp"
#include "digitop/euler.hpp"
#include "digitop/space.hpp"

namespace digitop {

enum class StepKind { dsp, asp, dse, ase, rep, rsp };

const char* step_kind_token(StepKind kind);  // "DSP", "ASP", ...

// One contractible transformation with its parameters, loggable and
// replayable. Wire form, one step per line:
//   DSP v | ASP x : a b c | DSE v u | ASE v u | REP v u -> x | RSP v u -> z
struct TransformStep {
  StepKind kind = StepKind::dsp;
  std::string v;            // dsp; first point of dse/ase/rep/rsp
  std::string u;            // second point of dse/ase/rep/rsp
  std::string fresh;        // minted point of asp/rep/rsp
  PointSet attachment_rim;  // asp only

  static TransformStep delete_point(std::string v);
  static TransformStep attach_point(std::string fresh, PointSet rim);
  static TransformStep delete_edge(std::string v, std::string u);
  static TransformStep attach_edge(std::string v, std::string u);
  static TransformStep replace_edge(std::string v, std::string u,
                                    std::string fresh);
  static TransformStep replace_pair(std::string v, std::string u,
                                    std::string fresh);

  std::string wire() const;
  static TransformStep parse_wire(const std::string& line);

  bool operator==(const TransformStep&) const = default;
};

struct ReductionTrace {
  DigitalSpace initial;
  std::vector<TransformStep> steps;
  DigitalSpace final_space;
};

enum class ReducePolicy { points_only, points_and_edges, full };

enum class EquivalenceVerdict { equivalent, distinct, unknown };

// Remove a simple point; result is the induced subspace without it.
DigitalSpace delete_simple_point(const DigitalSpace& space, const std::string& v,
                                 const ContractOptions& options = {});

// Add a fresh point adjacent to exactly rim_set, which must induce a
// contractible subspace so the new point is simple.
DigitalSpace attach_simple_point(const DigitalSpace& space,
                                 const std::string& fresh,
                                 const PointSet& rim_set,
                                 const ContractOptions& options = {});

// Remove the edge (v,u); requires a contractible joint rim.
DigitalSpace delete_simple_edge(const DigitalSpace& space, const std::string& v,
                                const std::string& u,
                                const ContractOptions& options = {});

// Add the edge (v,u); requires non-adjacency and a contractible joint rim.
DigitalSpace attach_simple_edge(const DigitalSpace& space, const std::string& v,
                                const std::string& u,
                                const ContractOptions& options = {});

// Subdivision-style rewrite: fresh point adjacent to {v,u} plus their joint
// rim, then the edge (v,u) removed. Needs only adjacency; the touched
// subspace is contractible by construction.
DigitalSpace replace_edge_with_point(const DigitalSpace& space,
                                     const std::string& v, const std::string& u,
                                     const std::string& fresh);

// Contraction-style rewrite: fresh point adjacent to the union of both rims
// (minus v,u), then v and u removed. Requires a simple pair.
DigitalSpace replace_simple_pair(const DigitalSpace& space, const std::string& v,
                                 const std::string& u, const std::string& fresh);

// Dispatch over the six kinds; used by trace replay.
DigitalSpace apply(const DigitalSpace& space, const TransformStep& step,
                   const ContractOptions& options = {});

// Fold a step list over an initial space.
DigitalSpace replay(const DigitalSpace& initial,
                    const std::vector<TransformStep>& steps,
                    const ContractOptions& options = {});

// Deterministic normalization: repeatedly delete the label-least simple
// point; then (policy permitting) the label-least deletable simple edge;
// then replace the label-least simple pair; restart after every success.
// Minted points use the reserved `_g<counter>` labels.
ReductionTrace reduce(const DigitalSpace& space,
                      ReducePolicy policy = ReducePolicy::full,
                      const ContractOptions& options = {});

// Sound, incomplete equivalence test: distinct on differing Euler
// characteristics, equivalent on isomorphic fully-reduced forms, unknown
// otherwise.
EquivalenceVerdict homotopy_equivalent_by_reduction(
    const DigitalSpace& g, const DigitalSpace& h,
    const ContractOptions& contract_options = {},
    const EulerOptions& euler_options = {});

}  // namespace digitop
