#include "kpower/propagation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace kpower {

namespace {

int popcount_words(const std::uint64_t* w, int words) {
    int c = 0;
    for (int i = 0; i < words; ++i) c += std::popcount(w[i]);
    return c;
}

void check_args(VertexId n, int k, const VertexSet& seed,
                const std::optional<VertexSet>& forbidden) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (seed.universe_size() != n)
        throw std::invalid_argument("seed universe does not match graph");
    if (forbidden && forbidden->universe_size() != n)
        throw std::invalid_argument("forbidden universe does not match graph");
}

}  // namespace

PropagationEngine::PropagationEngine(const Graph& g)
    : n_(g.vertex_count()), words_(static_cast<int>((static_cast<std::size_t>(n_) + 63) / 64)) {
    closed_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(words_), 0);
    for (VertexId v = 0; v < n_; ++v) {
        std::uint64_t* row = closed_.data() + static_cast<std::size_t>(v) * words_;
        row[v / 64] |= std::uint64_t{1} << (v % 64);
        for (VertexId u : g.neighbors(v)) row[u / 64] |= std::uint64_t{1} << (u % 64);
    }
}

// Chaotic-iteration sweep to the least fixed point. The rule is inflationary
// and its guard is monotone in the monitored set, so the fixed point does
// not depend on the visiting order.
bool PropagationEngine::fixpoint_covers(int k, std::vector<std::uint64_t>& monitored,
                                        const std::uint64_t* forbidden) const {
    int count = popcount_words(monitored.data(), words_);
    bool changed = true;
    while (changed && count < n_) {
        changed = false;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = monitored[static_cast<std::size_t>(w)];
            if (forbidden) bits &= ~forbidden[w];
            while (bits != 0) {
                const VertexId v = static_cast<VertexId>(w * 64 + __builtin_ctzll(bits));
                bits &= bits - 1;
                const std::uint64_t* row =
                    closed_.data() + static_cast<std::size_t>(v) * words_;
                int unmon = 0;
                for (int i = 0; i < words_ && unmon <= k; ++i)
                    unmon += std::popcount(row[i] & ~monitored[static_cast<std::size_t>(i)]);
                if (unmon == 0 || unmon > k) continue;
                for (int i = 0; i < words_; ++i)
                    monitored[static_cast<std::size_t>(i)] |= row[i];
                count += unmon;
                changed = true;
            }
        }
    }
    return count == n_;
}

bool PropagationEngine::covers_all(int k, const VertexSet& seed,
                                   const std::optional<VertexSet>& forbidden) const {
    check_args(n_, k, seed, forbidden);
    std::vector<std::uint64_t> monitored(static_cast<std::size_t>(words_), 0);
    seed.for_each([&](VertexId v) {
        const std::uint64_t* row = closed_.data() + static_cast<std::size_t>(v) * words_;
        for (int i = 0; i < words_; ++i) monitored[static_cast<std::size_t>(i)] |= row[i];
    });
    return fixpoint_covers(k, monitored, forbidden ? forbidden->words().data() : nullptr);
}

bool PropagationEngine::covers_all(int k, std::span<const VertexId> seed_ids) const {
    std::vector<std::uint64_t> monitored(static_cast<std::size_t>(words_), 0);
    for (VertexId v : seed_ids) {
        const std::uint64_t* row = closed_.data() + static_cast<std::size_t>(v) * words_;
        for (int i = 0; i < words_; ++i) monitored[static_cast<std::size_t>(i)] |= row[i];
    }
    return fixpoint_covers(k, monitored, nullptr);
}

PropagationTrace PropagationEngine::run(int k, const VertexSet& seed,
                                        const std::optional<VertexSet>& forbidden) const {
    check_args(n_, k, seed, forbidden);
    PropagationTrace trace;
    trace.k = k;
    trace.seed = seed;
    trace.forbidden = forbidden;
    trace.step_monitored.assign(static_cast<std::size_t>(n_), -1);

    // P^0 = N[seed].
    std::vector<std::uint64_t> cur(static_cast<std::size_t>(words_), 0);
    seed.for_each([&](VertexId v) {
        const std::uint64_t* row = closed_.data() + static_cast<std::size_t>(v) * words_;
        for (int i = 0; i < words_; ++i) cur[static_cast<std::size_t>(i)] |= row[i];
    });
    trace.snapshots.push_back(VertexSet::from_words(n_, cur));

    // Synchronous rounds: eligibility is judged against the round's starting
    // set, all eligible vertices force at once.
    while (true) {
        std::vector<std::uint64_t> next = cur;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = cur[static_cast<std::size_t>(w)];
            while (bits != 0) {
                const VertexId v = static_cast<VertexId>(w * 64 + __builtin_ctzll(bits));
                bits &= bits - 1;
                if (forbidden && forbidden->contains(v)) continue;
                const std::uint64_t* row =
                    closed_.data() + static_cast<std::size_t>(v) * words_;
                int unmon = 0;
                for (int i = 0; i < words_ && unmon <= k; ++i)
                    unmon += std::popcount(row[i] & ~cur[static_cast<std::size_t>(i)]);
                if (unmon == 0 || unmon > k) continue;
                for (int i = 0; i < words_; ++i)
                    next[static_cast<std::size_t>(i)] |= row[i];
            }
        }
        trace.snapshots.push_back(VertexSet::from_words(n_, next));
        if (next == cur) break;
        cur = std::move(next);
    }

    for (std::size_t step = 0; step < trace.snapshots.size(); ++step) {
        trace.snapshots[step].for_each([&](VertexId v) {
            if (trace.step_monitored[static_cast<std::size_t>(v)] < 0)
                trace.step_monitored[static_cast<std::size_t>(v)] = static_cast<int>(step);
        });
    }
    return trace;
}

PropagationTrace propagate(const Graph& g, int k, const VertexSet& seed,
                           const std::optional<VertexSet>& forbidden) {
    return PropagationEngine(g).run(k, seed, forbidden);
}

bool is_kpds(const Graph& g, int k, const VertexSet& seed) {
    return PropagationEngine(g).covers_all(k, seed);
}

bool row_propagation_check(const GeneratedGraph& sg, int k) {
    if (sg.family != Family::sierpinski)
        throw std::invalid_argument("row propagation check needs a sierpinski graph");
    if (k != 2 && k != 3) throw std::invalid_argument("row propagation check needs k in {2,3}");

    const RowDecomposition rows = sierpinski_rows(sg);
    const VertexId n = sg.graph.vertex_count();
    const VertexSet apex = VertexSet::from_ids(n, {sg.hub_a()});
    const PropagationTrace trace = propagate(sg.graph, k, apex);

    const int steps = 1 << (sg.generation - 1);  // n ranges over 0 .. 2^(g-1)-1
    for (int step = 0; step < steps; ++step) {
        const VertexSet expected = rows.prefix(step + 2);
        const VertexSet& actual =
            static_cast<std::size_t>(step) < trace.snapshots.size()
                ? trace.snapshots[static_cast<std::size_t>(step)]
                : trace.snapshots.back();
        if (!(actual == expected)) return false;
    }
    return true;
}

}  // namespace kpower
