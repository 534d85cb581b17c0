// kpower — command-line front end: family generators, propagation runs,
// exhaustive solvers, constructive witnesses, closed-form predictions, the
// verification grid and degree statistics.
//
// Exit codes: 0 success / all checks pass, 1 negative verdict or failed
// verification, 2 input or usage error.
#include "kpower/closed_form.hpp"
#include "kpower/constructions.hpp"
#include "kpower/generators.hpp"
#include "kpower/graph.hpp"
#include "kpower/propagation.hpp"
#include "kpower/report.hpp"
#include "kpower/solvers.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using nlohmann::json;
using namespace kpower;

constexpr int kDefaultMaxG = 12;

int safety_cap() {
    if (const char* env = std::getenv("KPOWER_MAX_G")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1) return cap;
        } catch (...) {
        }
        throw std::invalid_argument("KPOWER_MAX_G must be a positive integer");
    }
    return kDefaultMaxG;
}

void check_cap(int g) {
    const int cap = safety_cap();
    if (g < 1) throw std::invalid_argument("g must be >= 1");
    if (g > cap)
        throw std::invalid_argument("g = " + std::to_string(g) +
                                    " exceeds the safety cap " + std::to_string(cap) +
                                    " (raise KPOWER_MAX_G to override)");
}

GeneratedGraph generate_family(Family family, int g) {
    check_cap(g);
    switch (family) {
        case Family::pseudofractal: return gen_pseudofractal(g);
        case Family::sierpinski: return gen_sierpinski(g);
        case Family::aux: return gen_aux(g);
    }
    throw std::invalid_argument("unknown family");
}

Family parse_family(const std::string& name) {
    const auto f = family_from_name(name);
    if (!f) throw std::invalid_argument("unknown family: " + name);
    return *f;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
    if (!out) throw std::invalid_argument("write failed for " + path);
}

// A graph from --graph PATH (with optional sidecar metadata) or generated
// in-memory from --family/--g.
struct GraphInput {
    Graph graph;
    std::optional<GeneratedGraph> generated;  // set when metadata is known
};

GraphInput load_input(const std::string& graph_path, const std::string& family, int g) {
    GraphInput input;
    if (!graph_path.empty()) {
        input.graph = load_edgelist(read_file(graph_path));
        std::ifstream sidecar(graph_path + ".meta.json");
        if (sidecar) {
            std::ostringstream buf;
            buf << sidecar.rdbuf();
            input.generated = attach_metadata(input.graph, buf.str());
        }
        return input;
    }
    if (family.empty()) throw std::invalid_argument("need --graph or --family with --g");
    input.generated = generate_family(parse_family(family), g);
    input.graph = input.generated->graph;
    return input;
}

// Seeds: comma-separated ids, or symbolic A, B, C resolved via metadata.
std::vector<VertexId> parse_seed(const std::string& text, const GraphInput& input) {
    std::vector<VertexId> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        if (token == "A" || token == "B" || token == "C") {
            if (!input.generated)
                throw std::invalid_argument(
                    "symbolic seed names need family metadata (generated graph or sidecar)");
            const std::size_t idx = static_cast<std::size_t>(token[0] - 'A');
            if (idx >= input.generated->hubs.size())
                throw std::invalid_argument("hub " + token + " does not exist here");
            out.push_back(input.generated->hubs[idx]);
        } else {
            out.push_back(static_cast<VertexId>(std::stol(token)));
        }
    }
    if (out.empty()) throw std::invalid_argument("empty vertex list: " + text);
    return out;
}

json set_to_json(const VertexSet& s) { return json(s.to_vector()); }

int cmd_gen(const std::string& family, int g, const std::string& out_path,
            const std::string& format) {
    const GeneratedGraph gg = generate_family(parse_family(family), g);
    if (format == "json") {
        const std::string doc = generated_to_json(gg);
        if (out_path.empty())
            std::cout << doc;
        else
            write_file(out_path, doc);
        return 0;
    }
    if (format != "edgelist") throw std::invalid_argument("format must be edgelist or json");
    const std::string text = save_edgelist(gg.graph);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
        write_file(out_path + ".meta.json", metadata_to_json(gg));
    }
    return 0;
}

int cmd_propagate(const GraphInput& input, int k, const std::string& seed_text,
                  const std::string& forbidden_text, bool quiet) {
    const VertexId n = input.graph.vertex_count();
    const VertexSet seed = VertexSet::from_ids(n, parse_seed(seed_text, input));
    std::optional<VertexSet> forbidden;
    if (!forbidden_text.empty())
        forbidden = VertexSet::from_ids(n, parse_seed(forbidden_text, input));

    const PropagationTrace trace = propagate(input.graph, k, seed, forbidden);
    json snapshots = json::array();
    for (const auto& s : trace.snapshots) snapshots.push_back(set_to_json(s));
    json steps = json::array();
    for (int s : trace.step_monitored) steps.push_back(s < 0 ? json(nullptr) : json(s));
    const json doc{{"k", k},
                   {"seed", set_to_json(seed)},
                   {"forbidden", forbidden ? set_to_json(*forbidden) : json(nullptr)},
                   {"snapshots", std::move(snapshots)},
                   {"step_monitored", std::move(steps)},
                   {"verdict", trace.covers_all()}};
    if (!quiet) std::cout << doc.dump(2) << '\n';
    return trace.covers_all() ? 0 : 1;
}

int cmd_solve(const GraphInput& input, const std::string& problem, int k, int size_cap,
              unsigned long long budget, bool quiet) {
    SolveOptions opts;
    opts.size_cap = size_cap;
    opts.max_subsets = budget;

    SolveResult result;
    if (problem == "kpds") {
        result = min_kpds(input.graph, k, opts);
    } else if (problem == "vertex-cover") {
        result = min_vertex_cover(input.graph, opts);
    } else if (problem == "vertex-cover-hub2" || problem == "vertex-cover-hub3") {
        if (!input.generated)
            throw std::invalid_argument("hub-class covers need family metadata");
        result = min_vertex_cover_hub_class(*input.generated,
                                            problem.back() == '2' ? 2 : 3, opts);
    } else {
        throw std::invalid_argument("unknown problem: " + problem);
    }

    const json doc{{"problem", problem},
                   {"k", problem == "kpds" ? json(k) : json(nullptr)},
                   {"found", result.found},
                   {"optimum", result.found ? json(result.optimum) : json(nullptr)},
                   {"witness", result.found ? set_to_json(result.witness) : json::array()},
                   {"subsets_examined", result.subsets_examined},
                   {"budget_exceeded", result.budget_exceeded}};
    if (!quiet) std::cout << doc.dump(2) << '\n';
    return result.found ? 0 : 1;
}

int cmd_construct(const std::string& family, int g, int k, const std::string& which,
                  const std::string& endpoints_text, bool quiet) {
    check_cap(g);
    const Family fam = parse_family(family);

    json doc;
    bool ok = false;
    if (which == "cond1") {
        if (fam != Family::pseudofractal)
            throw std::invalid_argument("cond1 applies to the pseudofractal family");
        const GeneratedGraph gg = gen_pseudofractal(g);
        VertexId seed_hub = gg.hub_a(), blocked_hub = gg.hub_c();
        if (!endpoints_text.empty()) {
            GraphInput input;
            input.graph = gg.graph;
            input.generated = gg;
            const auto ids = parse_seed(endpoints_text, input);
            if (ids.size() != 2)
                throw std::invalid_argument("cond1 takes two hubs: seed,blocked");
            seed_hub = ids[0];
            blocked_hub = ids[1];
        }
        ok = check_condition1(gg, seed_hub, blocked_hub, k);
        doc = json{{"family", family},   {"g", g},
                   {"k", k},             {"which", "cond1"},
                   {"set", {seed_hub}},  {"cardinality", 1},
                   {"condition", "cond1"}, {"blocked", blocked_hub},
                   {"verified", ok}};
    } else if (which == "cond2" || which == "cond3") {
        if (fam != Family::sierpinski)
            throw std::invalid_argument(which + " applies to the sierpinski family");
        std::optional<std::pair<VertexId, VertexId>> endpoints;
        if (which == "cond2") {
            const GeneratedGraph sg = gen_sierpinski(g);
            GraphInput input;
            input.graph = sg.graph;
            input.generated = sg;
            const std::string text = endpoints_text.empty() ? "B,C" : endpoints_text;
            const auto ids = parse_seed(text, input);
            if (ids.size() != 2) throw std::invalid_argument("cond2 takes two endpoints");
            endpoints = {ids[0], ids[1]};
        }
        const ConditionedSet built = build_condition_set(
            g, which == "cond2" ? ConditionTag::cond2 : ConditionTag::cond3, endpoints);
        ok = true;  // builders self-verify or throw
        doc = json{{"family", family},
                   {"g", g},
                   {"which", which},
                   {"set", set_to_json(built.set)},
                   {"cardinality", built.set.size()},
                   {"condition", condition_name(built.condition)},
                   {"endpoints", built.endpoints
                                     ? json({built.endpoints->first, built.endpoints->second})
                                     : json(nullptr)},
                   {"verified", true}};
    } else if (which.empty()) {
        const ConditionedSet built = fam == Family::pseudofractal
                                         ? build_kpds_pseudofractal(g, k)
                                         : build_kpds_sierpinski(g, k);
        const long long predicted = predict(fam, g, k).value;
        ok = built.set.size() == predicted;
        doc = json{{"family", family},
                   {"g", g},
                   {"k", k},
                   {"set", set_to_json(built.set)},
                   {"cardinality", built.set.size()},
                   {"condition", condition_name(built.condition)},
                   {"endpoints", built.endpoints
                                     ? json({built.endpoints->first, built.endpoints->second})
                                     : json(nullptr)},
                   {"verified", true},
                   {"predicted", predicted},
                   {"matches_prediction", ok}};
    } else {
        throw std::invalid_argument("--which must be cond1, cond2 or cond3");
    }
    if (!quiet) std::cout << doc.dump(2) << '\n';
    return ok ? 0 : 1;
}

int cmd_predict(const std::string& family, int g, int g_max, int k, int k_max) {
    const Family fam = parse_family(family);
    if (fam == Family::aux)
        throw std::invalid_argument("predictions cover pseudofractal and sierpinski");
    const int g_lo = g_max > 0 ? 1 : g;
    const int g_hi = g_max > 0 ? g_max : g;
    const int k_lo = k_max > 0 ? 1 : k;
    const int k_hi = k_max > 0 ? k_max : k;
    if (g_hi < 1 || k_hi < 1) throw std::invalid_argument("need --g/--g-max and --k/--k-max");

    std::cout << "family,g,k,value,regime\n";
    for (int gi = g_lo; gi <= g_hi; ++gi) {
        for (int ki = k_lo; ki <= k_hi; ++ki) {
            const auto p = predict(fam, gi, ki);
            std::cout << family_name(fam) << ',' << gi << ',' << ki << ',' << p.value << ','
                      << regime_name(p.regime) << '\n';
        }
    }
    return 0;
}

int cmd_verify(const std::vector<std::string>& families, int g_max, int k_max,
               unsigned long long budget, const std::string& out_base, bool timings,
               bool quiet) {
    check_cap(g_max);
    VerifyOptions opts;
    opts.g_max = g_max;
    opts.k_max = k_max;
    opts.oracle_budget = budget;
    if (!families.empty()) {
        opts.families.clear();
        for (const auto& f : families) opts.families.push_back(parse_family(f));
    }

    const VerificationReport report = run_verification(opts);
    if (!quiet) {
        for (const VerifyRow& r : report.rows) {
            std::cout << (r.pass ? "pass" : "FAIL") << "  " << family_name(r.family)
                      << " g=" << r.g << " k=" << r.k << "  closed_form=" << r.closed_form
                      << " constructive=" << r.constructive_size
                      << (r.constructive_verified ? " (verified)" : " (UNVERIFIED)");
            if (r.oracle_value)
                std::cout << " oracle=" << *r.oracle_value;
            else if (!r.oracle_feasible)
                std::cout << " oracle=skipped";
            std::cout << '\n';
        }
        std::cout << (report.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << '\n';
    }
    if (!out_base.empty()) {
        write_file(out_base + ".json", report_to_json(report, timings));
        write_file(out_base + ".csv", report_to_csv(report));
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_stats(const GraphInput& input, bool quiet) {
    const GraphStats stats = compute_stats(input.graph);
    json hist = json::array();
    for (const auto& [d, c] : stats.histogram) hist.push_back({d, c});
    json tiers(nullptr);
    if (stats.pseudofractal_generation) {
        const int gen = *stats.pseudofractal_generation;
        json rows = json::array();
        rows.push_back({{"degree", 1 << gen}, {"count", 3}, {"tier", "hubs"}});
        long long count = 1;
        for (int i = 2; i <= gen; ++i) {
            count *= 3;
            rows.push_back(
                {{"degree", 1 << (gen - i + 1)}, {"count", count}, {"tier", i}});
        }
        tiers = json{{"generation", gen}, {"rows", std::move(rows)}};
    }
    const json doc{{"vertex_count", stats.vertex_count},
                   {"edge_count", stats.edge_count},
                   {"max_degree", stats.max_degree},
                   {"histogram", std::move(hist)},
                   {"pseudofractal_tiers", std::move(tiers)},
                   {"cumulative_loglog_slope_magnitude",
                    stats.loglog_slope_magnitude ? json(*stats.loglog_slope_magnitude)
                                                 : json(nullptr)}};
    if (!quiet) std::cout << doc.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-power domination on self-similar graph families"};
    app.require_subcommand(1);

    std::string family, graph_path, out_path, format = "edgelist", seed_text, forbidden_text;
    std::string problem = "kpds", which, endpoints_text, out_base;
    std::vector<std::string> families;
    int g = 0, g_max = 0, k = 1, k_max = 0, size_cap = 0;
    int verify_g_max = 4, verify_k_max = 3;
    unsigned long long budget = 10'000'000ULL;
    bool quiet = false, timings = false;

    auto* gen = app.add_subcommand("gen", "generate a family graph");
    gen->add_option("--family", family)->required();
    gen->add_option("--g", g)->required();
    gen->add_option("--out", out_path);
    gen->add_option("--format", format)->check(CLI::IsMember({"edgelist", "json"}));

    auto* propagate = app.add_subcommand("propagate", "run the propagation engine");
    propagate->add_option("--graph", graph_path);
    propagate->add_option("--family", family);
    propagate->add_option("--g", g);
    propagate->add_option("--k", k)->required();
    propagate->add_option("--seed", seed_text)->required();
    propagate->add_option("--forbidden", forbidden_text);
    propagate->add_flag("--quiet", quiet);

    auto* solve = app.add_subcommand("solve", "exhaustive optimum search");
    solve->add_option("--graph", graph_path);
    solve->add_option("--family", family);
    solve->add_option("--g", g);
    solve->add_option("--problem", problem)
        ->check(CLI::IsMember({"kpds", "vertex-cover", "vertex-cover-hub2",
                               "vertex-cover-hub3"}));
    solve->add_option("--k", k);
    solve->add_option("--size-cap", size_cap);
    solve->add_option("--oracle-budget", budget);
    solve->add_flag("--quiet", quiet);

    auto* construct = app.add_subcommand("construct", "constructive witness sets");
    construct->add_option("--family", family)->required();
    construct->add_option("--g", g)->required();
    construct->add_option("--k", k);
    construct->add_option("--which", which);
    construct->add_option("--endpoints", endpoints_text);
    construct->add_flag("--quiet", quiet);

    auto* predict_cmd = app.add_subcommand("predict", "closed-form values as CSV");
    predict_cmd->add_option("--family", family)->required();
    predict_cmd->add_option("--g", g);
    predict_cmd->add_option("--g-max", g_max);
    predict_cmd->add_option("--k", k);
    predict_cmd->add_option("--k-max", k_max);

    auto* verify = app.add_subcommand("verify", "closed form vs construction vs oracle");
    verify->add_option("--families", families)->delimiter(',');
    verify->add_option("--g-max", verify_g_max);
    verify->add_option("--k-max", verify_k_max);
    verify->add_option("--oracle-budget", budget);
    verify->add_option("--out", out_base);
    verify->add_flag("--timings", timings);
    verify->add_flag("--quiet", quiet);

    auto* stats = app.add_subcommand("stats", "degree statistics");
    stats->add_option("--graph", graph_path);
    stats->add_option("--family", family);
    stats->add_option("--g", g);
    stats->add_flag("--quiet", quiet);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(family, g, out_path, format);
        if (propagate->parsed())
            return cmd_propagate(load_input(graph_path, family, g), k, seed_text,
                                 forbidden_text, quiet);
        if (solve->parsed())
            return cmd_solve(load_input(graph_path, family, g), problem, k, size_cap, budget,
                             quiet);
        if (construct->parsed())
            return cmd_construct(family, g, k, which, endpoints_text, quiet);
        if (predict_cmd->parsed()) return cmd_predict(family, g, g_max, k, k_max);
        if (verify->parsed())
            return cmd_verify(families, verify_g_max, verify_k_max, budget, out_base,
                              timings, quiet);
        if (stats->parsed()) return cmd_stats(load_input(graph_path, family, g), quiet);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        // Failed self-verification of a construction.
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
