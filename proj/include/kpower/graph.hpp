// graph.hpp — immutable undirected graph over dense 0-based vertex ids,
// plus a fixed-universe vertex set with sorted iteration and the canonical
// edge-list text format.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kpower {

using VertexId = std::int32_t;
// Edges are stored normalized: first < second.
using Edge = std::pair<VertexId, VertexId>;

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("edge list line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// Set of vertex ids over a fixed universe [0, universe_size), backed by a
// bitset. Iteration always yields members in strictly increasing id order,
// so serializations and witness comparisons are deterministic.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(VertexId universe_size);
    static VertexSet from_ids(VertexId universe_size, std::span<const VertexId> ids);
    static VertexSet from_ids(VertexId universe_size, std::initializer_list<VertexId> ids);
    static VertexSet from_words(VertexId universe_size, std::span<const std::uint64_t> words);
    static VertexSet full(VertexId universe_size);

    VertexId universe_size() const noexcept { return universe_; }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    bool contains(VertexId v) const;
    void insert(VertexId v);
    void erase(VertexId v);

    std::vector<VertexId> to_vector() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int b = __builtin_ctzll(bits);
                f(static_cast<VertexId>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& subtract(const VertexSet& o);
    bool is_subset_of(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
    void check_member(VertexId v) const;
    void check_universe(const VertexSet& o) const;
    void recount();

    VertexId universe_ = 0;
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Immutable simple undirected graph. Adjacency lists are sorted; the edge
// list is kept in canonical lexicographic order with u < v per edge.
class Graph {
public:
    Graph() = default;
    // Validates and canonicalizes: rejects self-loops, duplicate edges
    // (in either orientation) and out-of-range endpoints.
    static Graph from_edges(VertexId vertex_count, std::vector<Edge> edges);

    VertexId vertex_count() const noexcept { return n_; }
    std::int64_t edge_count() const noexcept { return static_cast<std::int64_t>(edges_.size()); }
    int degree(VertexId v) const;
    std::span<const VertexId> neighbors(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    int max_degree() const;
    bool is_connected() const;

    // N[s]: s together with every vertex adjacent to a member of s.
    VertexSet closed_neighborhood(const VertexSet& s) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(VertexId v) const;

    VertexId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adj_;
};

// Text format: header "N M", then M lines "u v". The loader accepts edges in
// any order/orientation and canonicalizes; the writer emits u < v sorted
// lexicographically, LF line endings.
Graph load_edgelist(std::string_view text);
std::string save_edgelist(const Graph& g);

}  // namespace kpower
