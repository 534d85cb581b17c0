#include "kpower/report.hpp"

#include "kpower/closed_form.hpp"
#include "kpower/constructions.hpp"
#include "kpower/propagation.hpp"
#include "kpower/solvers.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

namespace kpower {

using nlohmann::json;

bool VerificationReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
}

unsigned long long predicted_enumeration(VertexId n, long long cardinality) {
    constexpr unsigned long long kSaturated = ~0ULL;
    unsigned long long total = 0;
    unsigned long long binom = 1;  // C(n, 0)
    for (long long c = 1; c <= cardinality && c <= n; ++c) {
        // C(n, c) = C(n, c-1) * (n - c + 1) / c, exact at every step.
        const unsigned long long num = static_cast<unsigned long long>(n) - c + 1;
        if (binom > kSaturated / num) return kSaturated;
        binom = binom * num / static_cast<unsigned long long>(c);
        if (total > kSaturated - binom) return kSaturated;
        total += binom;
    }
    return total;
}

namespace {

std::vector<Adjudication> adjudications() {
    return {
        {"edge-count", "E_g = 3^g", "E_g = 3^(g+1)",
         "edge iteration triples the count from E_1 = 3; generated graphs have 3^g edges "
         "for g = 1..8 (the rejected form fails already at g = 1)"},
        {"aux-cover-closed-form", "phi_g = (3^(g-2)+3)/2 with phi_{g+1} = 3*phi_g - 3",
         "phi_g = (3^(g-1)+3)/2 seeded from phi_3 = 6",
         "cover oracle gives phi = 1, 2, 3, 6 for g = 1..4; only the adopted form matches"},
        {"two-hub-recurrence-constant", "two_hub' = min(3*a - 2, 2*a + b - 2)",
         "two_hub' = min(3*a - 2, 2*a + b - 3)",
         "two-hub cover oracle on the g = 4 aux graph certifies optimum 9 = 2*4 + 3 - 2 "
         "by exhaustion; the rejected constant predicts 8, below the true minimum"},
        {"gasket-k1-exponent", "gamma(S_g, k=1) = (3^(g-2)+1)/2", "(3^(g-1)+1)/2",
         "k-power domination oracle returns 1, 2, 5 at g = 2, 3, 4, matching the "
         "adopted exponent"},
    };
}

GeneratedGraph generate(Family family, int g) {
    switch (family) {
        case Family::pseudofractal: return gen_pseudofractal(g);
        case Family::sierpinski: return gen_sierpinski(g);
        case Family::aux: return gen_aux(g);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& opts) {
    if (opts.g_max < 1 || opts.k_max < 1)
        throw std::invalid_argument("g_max and k_max must be >= 1");

    VerificationReport report;
    report.discrepancies = adjudications();

    for (Family family : opts.families) {
        if (family == Family::aux)
            throw std::invalid_argument("verification grid covers the two main families");
        for (int g = 1; g <= opts.g_max; ++g) {
            const GeneratedGraph gg = generate(family, g);
            const PropagationEngine engine(gg.graph);
            for (int k = 1; k <= opts.k_max; ++k) {
                const auto start = std::chrono::steady_clock::now();
                VerifyRow row;
                row.family = family;
                row.g = g;
                row.k = k;
                row.closed_form = predict(family, g, k).value;

                try {
                    const ConditionedSet built = family == Family::pseudofractal
                                                     ? build_kpds_pseudofractal(g, k)
                                                     : build_kpds_sierpinski(g, k);
                    row.constructive_size = built.set.size();
                    row.constructive_verified = engine.covers_all(k, built.set);
                } catch (const std::logic_error&) {
                    row.constructive_verified = false;
                }

                row.oracle_feasible =
                    predicted_enumeration(gg.graph.vertex_count(), row.closed_form) <=
                    opts.oracle_budget;
                if (row.oracle_feasible) {
                    SolveOptions solve_opts;
                    solve_opts.max_subsets = opts.oracle_budget;
                    const SolveResult oracle = min_kpds(gg.graph, k, solve_opts);
                    row.oracle_subsets = oracle.subsets_examined;
                    if (oracle.found) row.oracle_value = oracle.optimum;
                }

                row.pass = row.constructive_verified &&
                           row.constructive_size == row.closed_form &&
                           (!row.oracle_feasible ||
                            (row.oracle_value && *row.oracle_value == row.closed_form));
                row.timing_ms = std::chrono::duration<double, std::milli>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
                report.rows.push_back(row);
            }
        }
    }
    return report;
}

std::string report_to_json(const VerificationReport& report, bool include_timings) {
    json rows = json::array();
    for (const VerifyRow& r : report.rows) {
        json row{{"family", family_name(r.family)},
                 {"g", r.g},
                 {"k", r.k},
                 {"closed_form", r.closed_form},
                 {"constructive_size", r.constructive_size},
                 {"constructive_verified", r.constructive_verified},
                 {"oracle_feasible", r.oracle_feasible},
                 {"oracle_value", r.oracle_value ? json(*r.oracle_value) : json(nullptr)},
                 {"oracle_subsets_examined", r.oracle_subsets},
                 {"agreement", r.pass ? "pass" : "fail"}};
        if (include_timings) row["timing_ms"] = r.timing_ms;
        rows.push_back(std::move(row));
    }
    json discrepancies = json::array();
    for (const Adjudication& a : report.discrepancies)
        discrepancies.push_back({{"id", a.id},
                                 {"adopted", a.adopted},
                                 {"rejected", a.rejected},
                                 {"evidence", a.evidence}});
    const json doc{{"tool_version", report.tool_version},
                   {"rows", std::move(rows)},
                   {"discrepancies", std::move(discrepancies)},
                   {"all_pass", report.all_pass()}};
    return doc.dump(2) + "\n";
}

std::string report_to_csv(const VerificationReport& report) {
    std::ostringstream out;
    out << "family,g,k,closed_form,constructive_size,constructive_verified,"
           "oracle_feasible,oracle_value,agreement\n";
    for (const VerifyRow& r : report.rows) {
        out << family_name(r.family) << ',' << r.g << ',' << r.k << ',' << r.closed_form
            << ',' << r.constructive_size << ',' << (r.constructive_verified ? "true" : "false")
            << ',' << (r.oracle_feasible ? "true" : "false") << ',';
        if (r.oracle_value) out << *r.oracle_value;
        out << ',' << (r.pass ? "pass" : "fail") << '\n';
    }
    return out.str();
}

GraphStats compute_stats(const Graph& g) {
    GraphStats stats;
    stats.vertex_count = g.vertex_count();
    stats.edge_count = g.edge_count();
    stats.max_degree = g.max_degree();

    std::map<int, long long, std::greater<>> hist;
    for (VertexId v = 0; v < g.vertex_count(); ++v) ++hist[g.degree(v)];
    stats.histogram.assign(hist.begin(), hist.end());

    // Tier detection: 3 hubs of degree 2^gen, then 3^(i-1) vertices of
    // degree 2^(gen-i+1) for i = 2..gen. The candidate generation is pinned
    // by the maximum degree.
    const int md = stats.max_degree;
    if (md >= 2 && md <= (1 << 30) && (md & (md - 1)) == 0) {
        const int gen = std::bit_width(static_cast<unsigned>(md)) - 1;
        std::map<int, long long, std::greater<>> tiers;
        tiers[md] = 3;
        long long tier_count = 1;
        for (int i = 2; i <= gen; ++i) {
            tier_count *= 3;
            tiers[1 << (gen - i + 1)] += tier_count;
        }
        if (std::equal(tiers.begin(), tiers.end(), hist.begin(), hist.end()))
            stats.pseudofractal_generation = gen;
    }

    if (stats.histogram.size() >= 2 && g.vertex_count() > 0) {
        // Least-squares slope of ln(cumulative count of degree >= d) vs ln d.
        std::vector<std::pair<double, double>> pts;
        long long cum = 0;
        for (const auto& [deg, cnt] : stats.histogram) {
            cum += cnt;
            pts.emplace_back(std::log(static_cast<double>(deg)),
                             std::log(static_cast<double>(cum)));
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& [x, y] : pts) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double m = static_cast<double>(pts.size());
        const double denom = m * sxx - sx * sx;
        if (std::abs(denom) > 1e-12)
            stats.loglog_slope_magnitude = std::abs((m * sxy - sx * sy) / denom);
    }
    return stats;
}

std::string metadata_to_json(const GeneratedGraph& gg) {
    json doc{{"family", family_name(gg.family)},
             {"generation", gg.generation},
             {"hubs", gg.hubs},
             {"birth_generation", gg.birth_generation}};
    if (gg.family == Family::sierpinski) {
        json coords = json::array();
        for (const auto& [x, y] : gg.coords) coords.push_back({x, y});
        doc["coords"] = std::move(coords);
    }
    return doc.dump(2) + "\n";
}

GeneratedGraph attach_metadata(Graph graph, const std::string& metadata_json) {
    const json doc = json::parse(metadata_json);
    GeneratedGraph gg;
    const auto family = family_from_name(doc.at("family").get<std::string>());
    if (!family) throw std::invalid_argument("metadata names an unknown family");
    gg.family = *family;
    gg.generation = doc.at("generation").get<int>();
    gg.hubs = doc.at("hubs").get<std::vector<VertexId>>();
    if (doc.contains("birth_generation"))
        gg.birth_generation = doc.at("birth_generation").get<std::vector<int>>();
    if (doc.contains("coords")) {
        for (const auto& c : doc.at("coords"))
            gg.coords.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    }
    for (VertexId h : gg.hubs)
        if (h < 0 || h >= graph.vertex_count())
            throw std::invalid_argument("metadata hub id outside the graph");
    gg.graph = std::move(graph);
    return gg;
}

std::string generated_to_json(const GeneratedGraph& gg) {
    json edges = json::array();
    for (const auto& [u, v] : gg.graph.edges()) edges.push_back({u, v});
    json doc{{"family", family_name(gg.family)},
             {"generation", gg.generation},
             {"vertex_count", gg.graph.vertex_count()},
             {"edges", std::move(edges)},
             {"hubs", gg.hubs},
             {"birth_generation", gg.birth_generation}};
    if (gg.family == Family::sierpinski) {
        json coords = json::array();
        for (const auto& [x, y] : gg.coords) coords.push_back({x, y});
        doc["coords"] = std::move(coords);
    }
    return doc.dump(2) + "\n";
}

}  // namespace kpower
