// report.hpp — verification harness over the (family, g, k) grid plus graph
// statistics and the file-format helpers used by the command-line tool.
//
// For each grid cell the harness compares three routes: the closed-form
// prediction, the engine-verified constructive witness, and (when the
// predicted enumeration fits the budget) the exhaustive oracle.
#pragma once

#include "kpower/generators.hpp"
#include "kpower/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kpower {

inline constexpr std::string_view kToolVersion = "kpower 0.1.0";

struct VerifyRow {
    Family family = Family::pseudofractal;
    int g = 0;
    int k = 0;
    long long closed_form = 0;
    long long constructive_size = 0;
    bool constructive_verified = false;
    bool oracle_feasible = false;
    std::optional<long long> oracle_value;
    unsigned long long oracle_subsets = 0;
    bool pass = false;
    double timing_ms = 0.0;
};

// Formula choices adjudicated by the oracles; the report always lists them.
struct Adjudication {
    std::string id;
    std::string adopted;
    std::string rejected;
    std::string evidence;
};

struct VerificationReport {
    std::vector<VerifyRow> rows;  // sorted by (family, g, k)
    std::vector<Adjudication> discrepancies;
    std::string tool_version{kToolVersion};
    bool all_pass() const;
};

struct VerifyOptions {
    std::vector<Family> families{Family::pseudofractal, Family::sierpinski};
    int g_max = 4;
    int k_max = 3;
    unsigned long long oracle_budget = 10'000'000;
};

VerificationReport run_verification(const VerifyOptions& opts);

// Deterministic serializations; timings are emitted only on request so that
// consecutive runs compare byte-identical.
std::string report_to_json(const VerificationReport& report, bool include_timings = false);
std::string report_to_csv(const VerificationReport& report);

// Predicted enumeration size sum_{c=1..cardinality} C(n, c), saturating.
unsigned long long predicted_enumeration(VertexId n, long long cardinality);

struct GraphStats {
    long long vertex_count = 0;
    long long edge_count = 0;
    int max_degree = 0;
    std::vector<std::pair<int, long long>> histogram;  // degree desc
    // Set when the histogram matches the pseudofractal tier law exactly:
    // 3 hubs of degree 2^g plus 3^(i-1) vertices of degree 2^(g-i+1).
    std::optional<int> pseudofractal_generation;
    // |slope| of the log-log cumulative degree distribution; absent when
    // fewer than two distinct degrees exist. Informational only.
    std::optional<double> loglog_slope_magnitude;
};
GraphStats compute_stats(const Graph& g);

// Metadata sidecar helpers (hubs, births, coordinates).
std::string metadata_to_json(const GeneratedGraph& gg);
GeneratedGraph attach_metadata(Graph graph, const std::string& metadata_json);

// Complete single-file JSON serialization of a generated graph.
std::string generated_to_json(const GeneratedGraph& gg);

}  // namespace kpower
