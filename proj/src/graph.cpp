#include "kpower/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace kpower {

namespace {

std::size_t word_count(VertexId universe) {
    return (static_cast<std::size_t>(universe) + 63) / 64;
}

}  // namespace

VertexSet::VertexSet(VertexId universe_size) : universe_(universe_size) {
    if (universe_size < 0) throw std::invalid_argument("universe size must be nonnegative");
    words_.assign(word_count(universe_size), 0);
}

VertexSet VertexSet::from_ids(VertexId universe_size, std::span<const VertexId> ids) {
    VertexSet s(universe_size);
    for (VertexId v : ids) s.insert(v);
    return s;
}

VertexSet VertexSet::from_ids(VertexId universe_size, std::initializer_list<VertexId> ids) {
    return from_ids(universe_size, std::span<const VertexId>(ids.begin(), ids.size()));
}

VertexSet VertexSet::from_words(VertexId universe_size, std::span<const std::uint64_t> words) {
    VertexSet s(universe_size);
    if (words.size() != s.words_.size())
        throw std::invalid_argument("word count does not match universe");
    std::copy(words.begin(), words.end(), s.words_.begin());
    const int tail = universe_size % 64;
    if (tail != 0 && !s.words_.empty()) s.words_.back() &= (std::uint64_t{1} << tail) - 1;
    s.recount();
    return s;
}

VertexSet VertexSet::full(VertexId universe_size) {
    VertexSet s(universe_size);
    if (universe_size == 0) return s;
    s.words_.assign(word_count(universe_size), ~std::uint64_t{0});
    const int tail = universe_size % 64;
    if (tail != 0) s.words_.back() = (std::uint64_t{1} << tail) - 1;
    s.size_ = universe_size;
    return s;
}

void VertexSet::check_member(VertexId v) const {
    if (v < 0 || v >= universe_)
        throw std::out_of_range("vertex id " + std::to_string(v) + " outside universe of size " +
                                std::to_string(universe_));
}

void VertexSet::check_universe(const VertexSet& o) const {
    if (universe_ != o.universe_)
        throw std::invalid_argument("vertex sets over different universes");
}

bool VertexSet::contains(VertexId v) const {
    if (v < 0 || v >= universe_) return false;
    return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1;
}

void VertexSet::insert(VertexId v) {
    check_member(v);
    std::uint64_t& w = words_[static_cast<std::size_t>(v) / 64];
    const std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if (!(w & bit)) {
        w |= bit;
        ++size_;
    }
}

void VertexSet::erase(VertexId v) {
    check_member(v);
    std::uint64_t& w = words_[static_cast<std::size_t>(v) / 64];
    const std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if (w & bit) {
        w &= ~bit;
        --size_;
    }
}

std::vector<VertexId> VertexSet::to_vector() const {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(size_));
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
}

void VertexSet::recount() {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    size_ = c;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    recount();
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    recount();
    return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    recount();
    return *this;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

Graph Graph::from_edges(VertexId vertex_count, std::vector<Edge> edges) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("edge endpoint outside [0, " +
                                        std::to_string(vertex_count) + ")");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");

    Graph g;
    g.n_ = vertex_count;
    g.adj_.assign(static_cast<std::size_t>(vertex_count), {});
    for (const auto& [u, v] : edges) {
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.edges_ = std::move(edges);
    return g;
}

void Graph::check_vertex(VertexId v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex id " + std::to_string(v) + " outside [0, " +
                                std::to_string(n_) + ")");
}

int Graph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    VertexId visited = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (VertexId u : adj_[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++visited;
                stack.push_back(u);
            }
        }
    }
    return visited == n_;
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const {
    if (s.universe_size() != n_)
        throw std::invalid_argument("vertex set universe does not match graph");
    VertexSet out = s;
    s.for_each([&](VertexId v) {
        for (VertexId u : adj_[static_cast<std::size_t>(v)]) out.insert(u);
    });
    return out;
}

namespace {

// Parses one whitespace-separated token line into exactly `n` integers.
bool parse_ints(std::string_view line, std::span<long long> out) {
    std::size_t pos = 0;
    for (auto& val : out) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        const char* begin = line.data() + pos;
        const char* end = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(begin, end, val);
        if (ec != std::errc{} || ptr == begin) return false;
        pos = static_cast<std::size_t>(ptr - line.data());
    }
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    return pos == line.size();
}

}  // namespace

Graph load_edgelist(std::string_view text) {
    std::size_t offset = 0;
    int lineno = 0;
    auto next_line = [&](std::string_view& line) -> bool {
        if (offset >= text.size()) return false;
        std::size_t nl = text.find('\n', offset);
        if (nl == std::string_view::npos) nl = text.size();
        line = text.substr(offset, nl - offset);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        offset = nl + 1;
        ++lineno;
        return true;
    };

    std::string_view line;
    if (!next_line(line)) throw ParseError(1, "missing header");
    long long header[2];
    if (!parse_ints(line, header) || header[0] < 0 || header[1] < 0)
        throw ParseError(lineno, "expected header \"N M\"");
    const long long n = header[0];
    const long long m = header[1];
    if (n > std::numeric_limits<VertexId>::max())
        throw ParseError(lineno, "vertex count exceeds id space");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(m) * 2);
    for (long long i = 0; i < m; ++i) {
        if (!next_line(line)) throw ParseError(lineno + 1, "unexpected end of input");
        long long uv[2];
        if (!parse_ints(line, uv)) throw ParseError(lineno, "expected \"u v\"");
        const long long u = uv[0], v = uv[1];
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lineno, "vertex id outside [0, " + std::to_string(n) + ")");
        const std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                                  static_cast<std::uint64_t>(std::max(u, v));
        if (!seen.insert(key).second)
            throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " +
                                         std::to_string(v));
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    while (next_line(line)) {
        if (!line.empty() && line.find_first_not_of(" \t") != std::string_view::npos)
            throw ParseError(lineno, "trailing content after " + std::to_string(m) + " edges");
    }
    return Graph::from_edges(static_cast<VertexId>(n), std::move(edges));
}

std::string save_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace kpower
