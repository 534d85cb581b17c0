// solvers.hpp — desk-scale exhaustive oracles. Candidate sets are enumerated
// by increasing cardinality and lexicographically within each cardinality, so
// the returned witness is canonical: the lexicographically least optimal set.
#pragma once

#include "kpower/generators.hpp"
#include "kpower/graph.hpp"

namespace kpower {

struct SolveOptions {
    // Largest cardinality to try; 0 means up to the vertex count.
    int size_cap = 0;
    // Enumeration budget: total candidate sets inspected before giving up.
    unsigned long long max_subsets = 10'000'000;
};

struct SolveResult {
    bool found = false;
    int optimum = -1;          // valid iff found
    VertexSet witness;         // valid iff found
    unsigned long long subsets_examined = 0;
    bool budget_exceeded = false;
};

// Minimum k-power dominating set. Requires a connected graph.
SolveResult min_kpds(const Graph& g, int k, const SolveOptions& opts = {});

// Minimum vertex cover by exhaustion.
SolveResult min_vertex_cover(const Graph& g, const SolveOptions& opts = {});

// Minimum vertex cover containing exactly hub_count (2 or 3) of the three
// hub vertices. Requires the aux family at generation >= 2.
SolveResult min_vertex_cover_hub_class(const GeneratedGraph& aux_graph, int hub_count,
                                       const SolveOptions& opts = {});

}  // namespace kpower
