// constructions.hpp — explicit dominating-set constructions and their
// checkers.
//
// The pseudofractal builder lifts a minimum hub-class vertex cover of the
// aux family onto the shared hub vertices of the self-similar copies; the
// gasket builder composes recursively from checked base cases:
//
//   condition 1 — a single hub seed still sweeps the whole graph when one
//                 designated hub is barred from propagating.
//   condition 2 — a set of size (3^(g-2)+1)/2 whose unreached remainder is
//                 an induced corner-to-corner path, with the third corner in
//                 the set (k = 1).
//   condition 3 — a 1-power dominating set of size (3^(g-2)+1)/2 avoiding
//                 all three corners.
#pragma once

#include "kpower/generators.hpp"
#include "kpower/graph.hpp"

#include <memory>
#include <optional>
#include <utility>

namespace kpower {

enum class ConditionTag { cond1, cond2, cond3, lifted_cover, singleton };
std::string_view condition_name(ConditionTag t);

struct ConditionedSet {
    VertexSet set;
    ConditionTag condition = ConditionTag::singleton;
    std::optional<std::pair<VertexId, VertexId>> endpoints;  // cond2 path ends
    std::shared_ptr<const GeneratedGraph> host;
};

// Restricted sweep: seed one hub, bar another from propagating; true iff the
// fixed point still monitors every vertex. Pseudofractal family only.
bool check_condition1(const GeneratedGraph& gg, VertexId seed_hub, VertexId blocked_hub,
                      int k);

bool check_condition2(const GeneratedGraph& sg, const VertexSet& cand,
                      std::pair<VertexId, VertexId> endpoints);

bool check_condition3(const GeneratedGraph& sg, const VertexSet& cand);

// Optimal k-power dominating set of the generation-g pseudofractal graph.
// Every builder self-verifies with the propagation engine before returning;
// a failed verification throws std::logic_error.
ConditionedSet build_kpds_pseudofractal(int g, int k);

// Condition-2 / condition-3 witness for the gasket. `which` must be cond2
// (endpoints required, two distinct corner ids of the host) or cond3.
// The g = 3 base cases are recovered by exhaustive search and memoized;
// larger g compose recursively via the sub-gasket maps and the corner
// symmetries.
ConditionedSet build_condition_set(int g, ConditionTag which,
                                   std::optional<std::pair<VertexId, VertexId>> endpoints =
                                       std::nullopt);

// Optimal k-power dominating set of the generation-g gasket.
ConditionedSet build_kpds_sierpinski(int g, int k);

}  // namespace kpower
