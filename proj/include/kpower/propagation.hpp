// propagation.hpp — the k-power domination propagation process.
//
// Starting from P^0 = N[seed], each synchronous round lets every monitored
// vertex v with at most k unmonitored neighbors force N[v] into the
// monitored set, for all eligible v at once; rounds repeat to the least
// fixed point P^inf. An optional forbidden set suppresses vertices as
// propagators only — they can still be monitored and counted.
#pragma once

#include "kpower/generators.hpp"
#include "kpower/graph.hpp"

#include <optional>
#include <vector>

namespace kpower {

struct PropagationTrace {
    int k = 0;
    VertexSet seed;
    std::optional<VertexSet> forbidden;
    // P^0, P^1, ..., strictly increasing, closed by one repeated snapshot
    // marking the fixed point.
    std::vector<VertexSet> snapshots;
    // First step at which each vertex is monitored; -1 = never.
    std::vector<int> step_monitored;

    const VertexSet& final_set() const { return snapshots.back(); }
    bool covers_all() const {
        return final_set().size() == final_set().universe_size();
    }
};

// Precomputed closed-neighborhood bit masks; build once per graph and reuse
// across many propagation runs (the exhaustive solvers do).
class PropagationEngine {
public:
    explicit PropagationEngine(const Graph& g);

    PropagationTrace run(int k, const VertexSet& seed,
                         const std::optional<VertexSet>& forbidden = std::nullopt) const;

    // Fixed-point coverage test without trace bookkeeping.
    bool covers_all(int k, const VertexSet& seed,
                    const std::optional<VertexSet>& forbidden = std::nullopt) const;
    bool covers_all(int k, std::span<const VertexId> seed_ids) const;

    VertexId vertex_count() const noexcept { return n_; }

private:
    bool fixpoint_covers(int k, std::vector<std::uint64_t>& monitored,
                         const std::uint64_t* forbidden) const;

    VertexId n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> closed_;  // n_ rows of words_ mask words
};

PropagationTrace propagate(const Graph& g, int k, const VertexSet& seed,
                           const std::optional<VertexSet>& forbidden = std::nullopt);

// True iff the fixed point monitors every vertex.
bool is_kpds(const Graph& g, int k, const VertexSet& seed);

// Checks that propagation from the apex sweeps the gasket exactly one row
// per step: P^n({A_g}) equals the union of the first n+2 rows for every
// 0 <= n <= 2^(g-1)-1. k must be 2 or 3.
bool row_propagation_check(const GeneratedGraph& sg, int k);

}  // namespace kpower
