#include "kpower/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace kpower {

namespace {

long long pow3_checked(int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (1LL << 61) / 3) throw std::overflow_error("3^g overflows");
        r *= 3;
    }
    return r;
}

void check_generation(int g) {
    if (g < 1) throw std::invalid_argument("generation must be >= 1");
    // Vertex ids are 32-bit; (3^g+3)/2 must fit.
    if (g > 19) throw std::overflow_error("generation " + std::to_string(g) +
                                          " exceeds the 32-bit id space");
}

// The pseudofractal chain G_1..G_g under the canonical edge-iteration
// labeling: each generation appends one vertex per existing edge, processing
// the previous generation's edges in sorted order.
struct PfChain {
    int g = 0;
    std::vector<long long> n_at;                // n_at[t] = |V(G_t)|, t = 1..g
    std::vector<std::vector<Edge>> edges_at;    // edges_at[t], sorted
    std::vector<Edge> creator;                  // creator[v] spawned v (v >= 3)
    std::vector<int> birth;                     // birth[v]
};

PfChain build_pf_chain(int g) {
    check_generation(g);
    PfChain c;
    c.g = g;
    c.n_at.assign(static_cast<std::size_t>(g) + 1, 0);
    c.edges_at.assign(static_cast<std::size_t>(g) + 1, {});
    c.n_at[1] = 3;
    c.edges_at[1] = {{0, 1}, {0, 2}, {1, 2}};
    c.birth = {1, 1, 1};
    c.creator.assign(3, {-1, -1});
    c.birth.reserve(static_cast<std::size_t>(family_vertex_count(g)));
    c.creator.reserve(static_cast<std::size_t>(family_vertex_count(g)));
    for (int t = 2; t <= g; ++t) {
        const auto& prev = c.edges_at[static_cast<std::size_t>(t) - 1];
        auto& cur = c.edges_at[static_cast<std::size_t>(t)];
        cur = prev;
        cur.reserve(prev.size() * 3);
        VertexId next = static_cast<VertexId>(c.n_at[static_cast<std::size_t>(t) - 1]);
        for (const auto& [u, v] : prev) {
            c.creator.push_back({u, v});
            c.birth.push_back(t);
            cur.push_back({u, next});
            cur.push_back({v, next});
            ++next;
        }
        std::sort(cur.begin(), cur.end());
        c.n_at[static_cast<std::size_t>(t)] = next;
    }
    return c;
}

// Id of the vertex spawned at generation t+1 by edge e of G_t.
VertexId spawn_id(const PfChain& c, int t, Edge e) {
    const auto& edges = c.edges_at[static_cast<std::size_t>(t)];
    const auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) throw std::logic_error("spawn lookup of a non-edge");
    return static_cast<VertexId>(c.n_at[static_cast<std::size_t>(t)] +
                                 (it - edges.begin()));
}

// sigma maps realizing the hub identification rule of the merge view:
// copy 1 carries A->A, C->B; copy 2 carries A->C, B->B; copy 3 carries
// B->A, C->C; every other vertex follows its creator edge one generation up.
// One array per copy serves all levels: a vertex of G_t maps to a vertex of
// G_{t+1}.
std::array<std::vector<VertexId>, 3> pf_sigma_maps(const PfChain& c, long long domain) {
    static constexpr std::array<std::array<VertexId, 3>, 3> kHubBase = {{
        {0, 3, 1},   // copy 1: A->A_{t+1}, B->w(0,1), C->B_{t+1}
        {2, 1, 5},   // copy 2: A->C_{t+1}, B->B_{t+1}, C->w(1,2)
        {4, 0, 2},   // copy 3: A->w(0,2), B->A_{t+1}, C->C_{t+1}
    }};
    std::array<std::vector<VertexId>, 3> sigma;
    for (int th = 0; th < 3; ++th) {
        auto& s = sigma[static_cast<std::size_t>(th)];
        s.resize(static_cast<std::size_t>(domain));
        for (int v = 0; v < 3 && v < domain; ++v)
            s[static_cast<std::size_t>(v)] = kHubBase[static_cast<std::size_t>(th)]
                                                     [static_cast<std::size_t>(v)];
        for (long long v = 3; v < domain; ++v) {
            const Edge e = c.creator[static_cast<std::size_t>(v)];
            const int t = c.birth[static_cast<std::size_t>(v)];
            VertexId a = s[static_cast<std::size_t>(e.first)];
            VertexId b = s[static_cast<std::size_t>(e.second)];
            if (a > b) std::swap(a, b);
            s[static_cast<std::size_t>(v)] = spawn_id(c, t, {a, b});
        }
    }
    return sigma;
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::pseudofractal: return "pseudofractal";
        case Family::sierpinski: return "sierpinski";
        case Family::aux: return "aux";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "pseudofractal") return Family::pseudofractal;
    if (name == "sierpinski") return Family::sierpinski;
    if (name == "aux") return Family::aux;
    return std::nullopt;
}

long long family_vertex_count(int g) {
    check_generation(g);
    return (pow3_checked(g) + 3) / 2;
}

long long family_edge_count(int g) {
    check_generation(g);
    return pow3_checked(g);
}

GeneratedGraph gen_pseudofractal(int g) {
    PfChain c = build_pf_chain(g);
    GeneratedGraph out;
    out.graph = Graph::from_edges(static_cast<VertexId>(c.n_at[static_cast<std::size_t>(g)]),
                                  c.edges_at[static_cast<std::size_t>(g)]);
    out.family = Family::pseudofractal;
    out.generation = g;
    out.hubs = {0, 1, 2};
    out.birth_generation = std::move(c.birth);
    return out;
}

std::vector<CopyEmbedding> pseudofractal_copy_embeddings(int g, int n) {
    check_generation(g);
    if (n < 1 || n > g) throw std::invalid_argument("need 1 <= n <= g");
    const long long nn = family_vertex_count(n);
    if (n == g) {
        CopyEmbedding id;
        id.copy_index = 1;
        id.vertex_map.resize(static_cast<std::size_t>(nn));
        for (long long v = 0; v < nn; ++v)
            id.vertex_map[static_cast<std::size_t>(v)] = static_cast<VertexId>(v);
        id.shared_hubs = {0, 1, 2};
        return {id};
    }

    const PfChain chain = build_pf_chain(g);
    const long long domain = chain.n_at[static_cast<std::size_t>(g) - 1];
    const auto sigma = pf_sigma_maps(chain, domain);
    const auto& host_edges = chain.edges_at[static_cast<std::size_t>(g)];

    long long copies = 1;
    for (int i = 0; i < g - n; ++i) copies *= 3;

    std::vector<CopyEmbedding> out;
    out.reserve(static_cast<std::size_t>(copies));
    std::vector<int> digits(static_cast<std::size_t>(g - n), 0);
    for (long long idx = 0; idx < copies; ++idx) {
        // Base-3 digits, most significant = outermost merge level.
        long long rem = idx;
        for (int d = 0; d < g - n; ++d) {
            digits[static_cast<std::size_t>(g - n - 1 - d)] = static_cast<int>(rem % 3);
            rem /= 3;
        }
        CopyEmbedding emb;
        emb.copy_index = static_cast<int>(idx + 1);
        emb.vertex_map.resize(static_cast<std::size_t>(nn));
        for (long long v = 0; v < nn; ++v) {
            VertexId x = static_cast<VertexId>(v);
            // digits[0] is the outermost level g-1; digits[g-n-1] is level n.
            for (int lvl = g - n - 1; lvl >= 0; --lvl)
                x = sigma[static_cast<std::size_t>(digits[static_cast<std::size_t>(lvl)])]
                         [static_cast<std::size_t>(x)];
            emb.vertex_map[static_cast<std::size_t>(v)] = x;
        }
        emb.shared_hubs = {emb.vertex_map[0], emb.vertex_map[1], emb.vertex_map[2]};
        out.push_back(std::move(emb));
    }

    // Every embedding must carry child edges onto host edges.
    const auto& child_edges = chain.edges_at[static_cast<std::size_t>(n)];
    for (const auto& emb : out) {
        for (const auto& [u, v] : child_edges) {
            VertexId a = emb.vertex_map[static_cast<std::size_t>(u)];
            VertexId b = emb.vertex_map[static_cast<std::size_t>(v)];
            if (a > b) std::swap(a, b);
            if (!std::binary_search(host_edges.begin(), host_edges.end(), Edge{a, b}))
                throw std::logic_error("copy embedding is not edge-preserving");
        }
    }
    return out;
}

namespace {

using Coord = std::pair<int, int>;

void collect_triangles(int x, int y, int size, std::vector<std::array<Coord, 3>>& out) {
    if (size == 1) {
        out.push_back({Coord{x, y}, Coord{x + 2, y}, Coord{x + 1, y + 1}});
        return;
    }
    const int h = size / 2;
    collect_triangles(x, y, h, out);                  // lower-left
    collect_triangles(x + size, y, h, out);           // lower-right
    collect_triangles(x + h, y + h, h, out);          // top
}

}  // namespace

GeneratedGraph gen_sierpinski(int g) {
    check_generation(g);
    if (g > 24) throw std::overflow_error("gasket coordinates overflow");
    const int s = 1 << (g - 1);

    std::vector<std::array<Coord, 3>> tris;
    tris.reserve(static_cast<std::size_t>(pow3_checked(g - 1)));
    collect_triangles(0, 0, s, tris);

    std::map<Coord, VertexId> id_of;
    for (const auto& t : tris)
        for (const auto& c : t) id_of.emplace(c, 0);
    VertexId next = 0;
    for (auto& [c, id] : id_of) id = next++;

    std::vector<Edge> edges;
    edges.reserve(tris.size() * 3);
    for (const auto& t : tris) {
        const VertexId a = id_of[t[0]], b = id_of[t[1]], c = id_of[t[2]];
        edges.push_back({std::min(a, b), std::max(a, b)});
        edges.push_back({std::min(a, c), std::max(a, c)});
        edges.push_back({std::min(b, c), std::max(b, c)});
    }

    GeneratedGraph out;
    out.graph = Graph::from_edges(next, std::move(edges));
    out.family = Family::sierpinski;
    out.generation = g;
    out.hubs = {id_of.at({s, s}), id_of.at({0, 0}), id_of.at({2 * s, 0})};
    out.coords.resize(static_cast<std::size_t>(next));
    for (const auto& [c, id] : id_of) out.coords[static_cast<std::size_t>(id)] = c;

    // Birth generation: the earliest t whose gasket, scaled to the final
    // lattice, already contains the vertex.
    out.birth_generation.assign(static_cast<std::size_t>(next), 0);
    for (int t = 1; t <= g; ++t) {
        const int scale = 1 << (g - t);
        std::vector<std::array<Coord, 3>> sub;
        collect_triangles(0, 0, 1 << (t - 1), sub);
        for (const auto& tri : sub) {
            for (const auto& c : tri) {
                const VertexId id = id_of.at({c.first * scale, c.second * scale});
                auto& b = out.birth_generation[static_cast<std::size_t>(id)];
                if (b == 0) b = t;
            }
        }
    }
    return out;
}

GeneratedGraph gen_aux(int g) {
    check_generation(g);
    GeneratedGraph out;
    if (g == 1) {
        out.graph = Graph::from_edges(2, {{0, 1}});
        out.hubs = {0, 1};
        out.birth_generation = {1, 1};
    } else {
        out = gen_pseudofractal(g - 1);
    }
    out.family = Family::aux;
    out.generation = g;
    out.coords.clear();
    return out;
}

RowDecomposition sierpinski_rows(const GeneratedGraph& sg) {
    if (sg.family != Family::sierpinski)
        throw std::invalid_argument("row decomposition needs a sierpinski graph");
    const int s = 1 << (sg.generation - 1);
    RowDecomposition out;
    out.universe = sg.graph.vertex_count();
    out.rows.assign(static_cast<std::size_t>(s) + 1, {});
    for (VertexId v = 0; v < sg.graph.vertex_count(); ++v) {
        const int y = sg.coords[static_cast<std::size_t>(v)].second;
        out.rows[static_cast<std::size_t>(s - y)].push_back(v);
    }
    for (auto& row : out.rows) {
        std::sort(row.begin(), row.end(), [&](VertexId a, VertexId b) {
            return sg.coords[static_cast<std::size_t>(a)].first <
                   sg.coords[static_cast<std::size_t>(b)].first;
        });
        if (row.empty()) throw std::logic_error("empty gasket row");
    }
    return out;
}

VertexSet RowDecomposition::prefix(int n) const {
    if (n < 0 || static_cast<std::size_t>(n) > rows.size())
        throw std::invalid_argument("row prefix out of range");
    VertexSet s(universe);
    for (int i = 0; i < n; ++i)
        for (VertexId v : rows[static_cast<std::size_t>(i)]) s.insert(v);
    return s;
}

std::vector<std::pair<int, long long>> degree_profile(const GeneratedGraph& gg) {
    std::map<int, long long, std::greater<>> hist;
    for (VertexId v = 0; v < gg.graph.vertex_count(); ++v) ++hist[gg.graph.degree(v)];
    return {hist.begin(), hist.end()};
}

std::array<std::vector<VertexId>, 3> sierpinski_copy_maps(const GeneratedGraph& host) {
    if (host.family != Family::sierpinski || host.generation < 2)
        throw std::invalid_argument("copy maps need a sierpinski graph of generation >= 2");
    const GeneratedGraph child = gen_sierpinski(host.generation - 1);
    const int h = 1 << (host.generation - 2);

    std::map<Coord, VertexId> host_id;
    for (VertexId v = 0; v < host.graph.vertex_count(); ++v)
        host_id.emplace(host.coords[static_cast<std::size_t>(v)], v);

    const std::array<Coord, 3> offset = {Coord{h, h}, Coord{0, 0}, Coord{2 * h, 0}};
    std::array<std::vector<VertexId>, 3> maps;
    for (int c = 0; c < 3; ++c) {
        auto& m = maps[static_cast<std::size_t>(c)];
        m.resize(static_cast<std::size_t>(child.graph.vertex_count()));
        for (VertexId v = 0; v < child.graph.vertex_count(); ++v) {
            const Coord p = child.coords[static_cast<std::size_t>(v)];
            m[static_cast<std::size_t>(v)] =
                host_id.at({p.first + offset[static_cast<std::size_t>(c)].first,
                            p.second + offset[static_cast<std::size_t>(c)].second});
        }
    }
    return maps;
}

}  // namespace kpower
