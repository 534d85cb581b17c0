// Acceptance suite: every criterion prints one pass/fail line; the process
// exits nonzero if any criterion fails. Criterion 9 additionally drives the
// CLI binary when its path is passed as argv[1].
#include "kpower/closed_form.hpp"
#include "kpower/constructions.hpp"
#include "kpower/generators.hpp"
#include "kpower/propagation.hpp"
#include "kpower/report.hpp"
#include "kpower/solvers.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

using namespace kpower;
namespace fs = std::filesystem;

namespace {

long long pow3(int e) {
    long long r = 1;
    while (e-- > 0) r *= 3;
    return r;
}

struct Criterion {
    int number;
    std::string name;
    double time_limit_s;
    std::function<bool(std::string&)> run;
};

bool check(bool condition, std::string& why, const std::string& message) {
    if (!condition && why.empty()) why = message;
    return condition;
}

// 1. |V| = (3^g+3)/2 and |E| = 3^g for both families, g = 1..8.
bool criterion_counts(std::string& why) {
    bool ok = true;
    for (int g = 1; g <= 8; ++g) {
        const long long n = (pow3(g) + 3) / 2;
        const long long m = pow3(g);
        const GeneratedGraph pf = gen_pseudofractal(g);
        const GeneratedGraph sg = gen_sierpinski(g);
        ok &= check(pf.graph.vertex_count() == n && pf.graph.edge_count() == m, why,
                    "pseudofractal counts wrong at g=" + std::to_string(g));
        ok &= check(sg.graph.vertex_count() == n && sg.graph.edge_count() == m, why,
                    "sierpinski counts wrong at g=" + std::to_string(g));
    }
    return ok;
}

// 2. Restricted propagation from any hub, paired hub blocked, covers
//    everything at k = 2^(g-1)-1 for g = 1..5.
bool criterion_restricted_sweep(std::string& why) {
    bool ok = true;
    for (int g = 1; g <= 5; ++g) {
        const GeneratedGraph gg = gen_pseudofractal(g);
        const PropagationEngine engine(gg.graph);
        const int k = (1 << (g - 1)) - 1;
        const VertexId n = gg.graph.vertex_count();
        for (VertexId seed : gg.hubs) {
            for (VertexId blocked : gg.hubs) {
                if (seed == blocked) continue;
                ok &= check(engine.covers_all(k, VertexSet::from_ids(n, {seed}),
                                              VertexSet::from_ids(n, {blocked})),
                            why,
                            "restricted sweep failed at g=" + std::to_string(g) +
                                " seed=" + std::to_string(seed) +
                                " blocked=" + std::to_string(blocked));
            }
        }
    }
    return ok;
}

// 3. Pseudofractal oracle equals the closed form on (g,k) in (1..4)x(1..3).
bool criterion_pseudofractal_oracle(std::string& why) {
    bool ok = true;
    for (int g = 1; g <= 4; ++g) {
        const Graph graph = gen_pseudofractal(g).graph;
        for (int k = 1; k <= 3; ++k) {
            const SolveResult oracle = min_kpds(graph, k);
            const long long expected = predict_pseudofractal(g, k).value;
            ok &= check(oracle.found && oracle.optimum == expected, why,
                        "oracle mismatch at pseudofractal g=" + std::to_string(g) +
                            " k=" + std::to_string(k));
        }
    }
    ok &= check(min_kpds(gen_pseudofractal(3).graph, 1).optimum == 2, why, "gamma(G3,1) != 2");
    ok &= check(min_kpds(gen_pseudofractal(4).graph, 1).optimum == 3, why, "gamma(G4,1) != 3");
    ok &= check(min_kpds(gen_pseudofractal(4).graph, 3).optimum == 2, why, "gamma(G4,3) != 2");
    return ok;
}

// 4. Gasket oracle at k = 1: 1, 2, 5 for g = 2, 3, 4.
bool criterion_sierpinski_oracle(std::string& why) {
    const long long expected[] = {1, 2, 5};
    bool ok = true;
    for (int g = 2; g <= 4; ++g) {
        const SolveResult oracle = min_kpds(gen_sierpinski(g).graph, 1);
        ok &= check(oracle.found && oracle.optimum == expected[g - 2], why,
                    "oracle mismatch at sierpinski g=" + std::to_string(g));
    }
    return ok;
}

// 5. Apex singleton works for k = 2, 3 up to g = 8; rows sweep one per step.
bool criterion_apex_sweep(std::string& why) {
    bool ok = true;
    for (int g = 1; g <= 8; ++g) {
        const GeneratedGraph sg = gen_sierpinski(g);
        for (int k : {2, 3})
            ok &= check(is_kpds(sg.graph, k,
                                VertexSet::from_ids(sg.graph.vertex_count(), {sg.hub_a()})),
                        why, "apex singleton failed at g=" + std::to_string(g));
    }
    for (int g = 2; g <= 6; ++g) {
        const GeneratedGraph sg = gen_sierpinski(g);
        for (int k : {2, 3})
            ok &= check(row_propagation_check(sg, k), why,
                        "row propagation check failed at g=" + std::to_string(g));
    }
    return ok;
}

// 6. Vertex-cover chain and the recurrence-constant adjudication.
bool criterion_cover_chain(std::string& why) {
    bool ok = true;
    const long long phis[] = {1, 2, 3, 6};
    for (int g = 1; g <= 4; ++g)
        ok &= check(min_vertex_cover(gen_aux(g).graph).optimum == phis[g - 1], why,
                    "phi mismatch at g=" + std::to_string(g));

    const GeneratedGraph i3 = gen_aux(3);
    ok &= check(min_vertex_cover_hub_class(i3, 2).optimum == 4, why, "two-hub g=3 != 4");
    ok &= check(min_vertex_cover_hub_class(i3, 3).optimum == 3, why, "three-hub g=3 != 3");

    const GeneratedGraph i4 = gen_aux(4);
    const long long two_hub_4 = min_vertex_cover_hub_class(i4, 2).optimum;
    const long long three_hub_4 = min_vertex_cover_hub_class(i4, 3).optimum;
    ok &= check(three_hub_4 == 6, why, "three-hub g=4 != 6");

    // Adjudication: the -2 constant (predicting 9) matches the oracle; the
    // -3 variant (predicting 8) does not. The three-hub branch keeps -3.
    ok &= check(two_hub_4 == 2 * 4 + 3 - 2, why, "two-hub constant adjudication failed");
    ok &= check(two_hub_4 != 2 * 4 + 3 - 3, why, "rejected two-hub constant matched");
    ok &= check(three_hub_4 == 3 * 3 - 3, why, "three-hub constant adjudication failed");
    const auto recurrence = cover_class_recurrence(4);
    ok &= check(recurrence.back().two_hub == two_hub_4 &&
                    recurrence.back().three_hub == three_hub_4,
                why, "recurrence disagrees with the hub-class oracle at g=4");
    return ok;
}

// 7. Builders self-verify and match the closed forms for g = 5..8.
bool criterion_builders(std::string& why) {
    bool ok = true;
    for (int g = 5; g <= 8; ++g) {
        for (int k = 1; k <= 3; ++k) {
            try {
                const ConditionedSet pf = build_kpds_pseudofractal(g, k);
                ok &= check(pf.set.size() == predict_pseudofractal(g, k).value, why,
                            "pseudofractal builder size mismatch at g=" + std::to_string(g) +
                                " k=" + std::to_string(k));
                const ConditionedSet sg = build_kpds_sierpinski(g, k);
                ok &= check(sg.set.size() == predict_sierpinski(g, k).value, why,
                            "sierpinski builder size mismatch at g=" + std::to_string(g) +
                                " k=" + std::to_string(k));
            } catch (const std::exception& e) {
                ok &= check(false, why, std::string("builder threw: ") + e.what());
            }
        }
    }
    return ok;
}

// 8. Degree laws: exact tiers for the web, {2,4} with three 2s for the gasket.
bool criterion_degree_laws(std::string& why) {
    bool ok = true;
    for (int g = 1; g <= 8; ++g) {
        const GeneratedGraph pf = gen_pseudofractal(g);
        std::map<int, long long> hist;
        for (VertexId v = 0; v < pf.graph.vertex_count(); ++v) ++hist[pf.graph.degree(v)];
        std::map<int, long long> expected;
        expected[1 << g] = 3;
        for (int i = 2; i <= g; ++i) expected[1 << (g - i + 1)] += pow3(i - 1);
        ok &= check(hist == expected, why, "tier table mismatch at g=" + std::to_string(g));
    }
    for (int g = 2; g <= 8; ++g) {
        const GeneratedGraph sg = gen_sierpinski(g);
        long long twos = 0;
        bool degrees_ok = true;
        for (VertexId v = 0; v < sg.graph.vertex_count(); ++v) {
            const int d = sg.graph.degree(v);
            degrees_ok &= (d == 2 || d == 4);
            if (d == 2) ++twos;
        }
        ok &= check(degrees_ok && twos == 3, why,
                    "gasket degrees wrong at g=" + std::to_string(g));
    }
    return ok;
}

std::string read_all(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// 9. Two consecutive verify runs produce byte-identical reports.
bool criterion_determinism(std::string& why, const std::string& cli_path) {
    VerifyOptions opts;  // defaults: g <= 4, k <= 3
    const std::string json1 = report_to_json(run_verification(opts));
    const std::string json2 = report_to_json(run_verification(opts));
    if (!check(json1 == json2, why, "library verification reports differ")) return false;

    if (cli_path.empty()) return true;
    const fs::path dir = fs::temp_directory_path() / "kpower_acceptance";
    fs::create_directories(dir);
    const std::string base1 = (dir / "run1").string();
    const std::string base2 = (dir / "run2").string();
    for (const std::string& base : {base1, base2}) {
        const std::string cmd =
            "\"" + cli_path + "\" verify --g-max 4 --k-max 3 --quiet --out \"" + base + "\"";
        if (!check(std::system(cmd.c_str()) == 0, why, "cli verify exited nonzero"))
            return false;
    }
    bool ok = check(read_all(base1 + ".json") == read_all(base2 + ".json"), why,
                    "cli json reports differ");
    ok &= check(read_all(base1 + ".csv") == read_all(base2 + ".csv"), why,
                "cli csv reports differ");
    ok &= check(!read_all(base1 + ".json").empty(), why, "cli json report empty");
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli_path = argc > 1 ? argv[1] : "";

    const std::vector<Criterion> criteria = {
        {1, "graph counts (3^g+3)/2 vertices, 3^g edges, g=1..8", 1.0, criterion_counts},
        {2, "restricted hub sweep at k=2^(g-1)-1, g=1..5", 5.0, criterion_restricted_sweep},
        {3, "pseudofractal oracle vs closed form, g<=4, k<=3", 60.0,
         criterion_pseudofractal_oracle},
        {4, "gasket oracle at k=1: 1,2,5 for g=2..4", 600.0, criterion_sierpinski_oracle},
        {5, "apex singleton k=2,3 up to g=8 and row sweep g=2..6", 10.0,
         criterion_apex_sweep},
        {6, "vertex-cover chain and recurrence adjudication", 30.0, criterion_cover_chain},
        {7, "builders match closed forms, g=5..8, k=1..3", 120.0, criterion_builders},
        {8, "degree laws, g=1..8", 5.0, criterion_degree_laws},
        {9, "byte-identical verification reports", 120.0,
         [&](std::string& why) { return criterion_determinism(why, cli_path); }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.time_limit_s) {
            ok = false;
            if (why.empty())
                why = "exceeded " + std::to_string(c.time_limit_s) + " s budget";
        }
        std::printf("[%d] %s  %s (%.2f s)%s%s\n", c.number, ok ? "PASS" : "FAIL",
                    c.name.c_str(), seconds, why.empty() ? "" : " — ", why.c_str());
        if (!ok) ++failures;
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
