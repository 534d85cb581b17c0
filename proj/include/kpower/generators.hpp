// generators.hpp — deterministic constructors for the three self-similar
// graph families, their hub/corner metadata, and the self-similar copy
// embeddings used by the constructive solvers.
//
// Families:
//   pseudofractal — grown from a triangle by adding one new vertex per edge
//                   each generation, joined to both endpoints. Hubs A,B,C
//                   are the original triangle vertices (ids 0,1,2).
//   sierpinski    — gasket built on the integer lattice (x doubled so all
//                   positions are exact): generation g spans corners (0,0),
//                   (2s,0), (s,s) with s = 2^(g-1). Vertex ids follow
//                   lexicographic (x,y) order. Outmost vertices: A = apex,
//                   B = lower-left, C = lower-right.
//   aux           — I_1 is a single edge; I_g for g >= 2 is the pseudofractal
//                   graph of generation g-1, vertex-for-vertex.
#pragma once

#include "kpower/graph.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace kpower {

enum class Family { pseudofractal, sierpinski, aux };

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

struct GeneratedGraph {
    Graph graph;
    Family family = Family::pseudofractal;
    int generation = 0;
    std::vector<VertexId> hubs;                // A, B, C (two entries for aux g=1)
    std::vector<int> birth_generation;         // per vertex
    std::vector<std::pair<int, int>> coords;   // sierpinski lattice, empty otherwise

    VertexId hub_a() const { return hubs.at(0); }
    VertexId hub_b() const { return hubs.at(1); }
    VertexId hub_c() const { return hubs.at(2); }
};

// (3^g + 3) / 2 and 3^g; both throw on overflow.
long long family_vertex_count(int g);
long long family_edge_count(int g);

GeneratedGraph gen_pseudofractal(int g);
GeneratedGraph gen_sierpinski(int g);
GeneratedGraph gen_aux(int g);

// One of the 3^(g-n) copies of the generation-n pseudofractal graph inside
// the generation-g one. vertex_map is edge-preserving; the union of all
// copies' mapped edges is exactly the host edge set, and two copies overlap
// only at shared hub vertices.
struct CopyEmbedding {
    int copy_index = 0;                        // 1-based
    std::vector<VertexId> vertex_map;          // child id -> host id
    std::array<VertexId, 3> shared_hubs{};     // images of the child's A,B,C
};
std::vector<CopyEmbedding> pseudofractal_copy_embeddings(int g, int n);

// Horizontal rows of the gasket, top row (the apex) first; 2^(g-1)+1 rows.
struct RowDecomposition {
    std::vector<std::vector<VertexId>> rows;
    VertexId universe = 0;
    // Union of the first n rows.
    VertexSet prefix(int n) const;
};
RowDecomposition sierpinski_rows(const GeneratedGraph& sg);

// Exact degree histogram, sorted by descending degree.
std::vector<std::pair<int, long long>> degree_profile(const GeneratedGraph& gg);

// Maps of the three generation-(g-1) sub-gaskets into a generation-g host:
// index 0 = top copy (contains A), 1 = lower-left (contains B),
// 2 = lower-right (contains C). Each is a child-id -> host-id vector.
std::array<std::vector<VertexId>, 3> sierpinski_copy_maps(const GeneratedGraph& host);

}  // namespace kpower
