#include "kpower/solvers.hpp"

#include "kpower/propagation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kpower {

namespace {

// Enumerates c-combinations of [0, n) in lexicographic order, calling
// test(ids). Stops early when test returns true (success) or the budget
// runs out. Returns: 1 success, 0 exhausted, -1 budget exceeded.
template <class Test>
int enumerate_combinations(VertexId n, int c, unsigned long long budget,
                           unsigned long long& examined, std::vector<VertexId>& ids,
                           Test&& test) {
    ids.resize(static_cast<std::size_t>(c));
    std::iota(ids.begin(), ids.end(), 0);
    if (c > n) return 0;
    while (true) {
        if (examined >= budget) return -1;
        ++examined;
        if (test(ids)) return 1;
        // Next combination.
        int i = c - 1;
        while (i >= 0 && ids[static_cast<std::size_t>(i)] == n - c + i) --i;
        if (i < 0) return 0;
        ++ids[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < c; ++j)
            ids[static_cast<std::size_t>(j)] = ids[static_cast<std::size_t>(j - 1)] + 1;
    }
}

template <class Test>
SolveResult search_by_cardinality(VertexId n, int first_card, const SolveOptions& opts,
                                  Test&& test) {
    SolveResult result;
    const int cap = opts.size_cap > 0 ? std::min<int>(opts.size_cap, n) : n;
    std::vector<VertexId> ids;
    for (int c = first_card; c <= cap; ++c) {
        const int outcome = enumerate_combinations(n, c, opts.max_subsets,
                                                   result.subsets_examined, ids, test);
        if (outcome == 1) {
            result.found = true;
            result.optimum = c;
            result.witness = VertexSet::from_ids(n, ids);
            return result;
        }
        if (outcome == -1) {
            result.budget_exceeded = true;
            return result;
        }
    }
    return result;
}

}  // namespace

SolveResult min_kpds(const Graph& g, int k, const SolveOptions& opts) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    if (!g.is_connected()) throw std::invalid_argument("min_kpds requires a connected graph");

    const PropagationEngine engine(g);
    return search_by_cardinality(
        g.vertex_count(), 1, opts,
        [&](const std::vector<VertexId>& ids) { return engine.covers_all(k, ids); });
}

namespace {

bool covers_all_edges(const Graph& g, const std::vector<VertexId>& ids) {
    // ids is sorted; binary search per edge endpoint.
    for (const auto& [u, v] : g.edges()) {
        if (!std::binary_search(ids.begin(), ids.end(), u) &&
            !std::binary_search(ids.begin(), ids.end(), v))
            return false;
    }
    return true;
}

}  // namespace

SolveResult min_vertex_cover(const Graph& g, const SolveOptions& opts) {
    return search_by_cardinality(
        g.vertex_count(), 0, opts,
        [&](const std::vector<VertexId>& ids) { return covers_all_edges(g, ids); });
}

SolveResult min_vertex_cover_hub_class(const GeneratedGraph& aux_graph, int hub_count,
                                       const SolveOptions& opts) {
    if (aux_graph.family != Family::aux)
        throw std::invalid_argument("hub-class cover needs the aux family");
    if (aux_graph.generation < 2)
        throw std::invalid_argument("hub-class cover needs generation >= 2 (three hubs)");
    if (hub_count != 2 && hub_count != 3)
        throw std::invalid_argument("hub_count must be 2 or 3");

    const Graph& g = aux_graph.graph;
    const auto& hubs = aux_graph.hubs;
    return search_by_cardinality(
        g.vertex_count(), hub_count, opts, [&](const std::vector<VertexId>& ids) {
            int in = 0;
            for (VertexId h : hubs)
                if (std::binary_search(ids.begin(), ids.end(), h)) ++in;
            return in == hub_count && covers_all_edges(g, ids);
        });
}

}  // namespace kpower
