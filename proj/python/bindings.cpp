// Python bindings for the core operations: generators, propagation,
// exhaustive solvers, closed forms and the constructive builders.
#include "kpower/closed_form.hpp"
#include "kpower/constructions.hpp"
#include "kpower/generators.hpp"
#include "kpower/graph.hpp"
#include "kpower/propagation.hpp"
#include "kpower/report.hpp"
#include "kpower/solvers.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace kpower;

namespace {

VertexSet to_set(const Graph& g, const std::vector<VertexId>& ids) {
    return VertexSet::from_ids(g.vertex_count(), ids);
}

Family parse_family(const std::string& name) {
    const auto f = family_from_name(name);
    if (!f) throw std::invalid_argument("unknown family: " + name);
    return *f;
}

GeneratedGraph generate_family(const std::string& family, int g) {
    switch (parse_family(family)) {
        case Family::pseudofractal: return gen_pseudofractal(g);
        case Family::sierpinski: return gen_sierpinski(g);
        case Family::aux: return gen_aux(g);
    }
    throw std::invalid_argument("unknown family");
}

py::dict solve_to_dict(const SolveResult& r) {
    py::dict d;
    d["found"] = r.found;
    d["optimum"] = r.found ? py::object(py::int_(r.optimum)) : py::object(py::none());
    d["witness"] = r.found ? r.witness.to_vector() : std::vector<VertexId>{};
    d["subsets_examined"] = r.subsets_examined;
    d["budget_exceeded"] = r.budget_exceeded;
    return d;
}

py::dict conditioned_to_dict(const ConditionedSet& c) {
    py::dict d;
    d["set"] = c.set.to_vector();
    d["condition"] = std::string(condition_name(c.condition));
    if (c.endpoints)
        d["endpoints"] = py::make_tuple(c.endpoints->first, c.endpoints->second);
    return d;
}

}  // namespace

PYBIND11_MODULE(_kpower, m) {
    m.doc() = "k-power domination on self-similar graphs: generators, propagation "
              "engine, exhaustive oracles and closed-form predictions.";

    py::class_<Graph>(m, "Graph")
        .def_static(
            "from_edges",
            [](VertexId n, const std::vector<Edge>& edges) {
                return Graph::from_edges(n, edges);
            },
            py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors",
             [](const Graph& g, VertexId v) {
                 const auto nbrs = g.neighbors(v);
                 return std::vector<VertexId>(nbrs.begin(), nbrs.end());
             })
        .def("edges", [](const Graph& g) { return g.edges(); })
        .def("has_edge", &Graph::has_edge)
        .def("is_connected", &Graph::is_connected)
        .def("closed_neighborhood",
             [](const Graph& g, const std::vector<VertexId>& ids) {
                 return g.closed_neighborhood(to_set(g, ids)).to_vector();
             })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

    py::class_<GeneratedGraph>(m, "GeneratedGraph")
        .def_readonly("graph", &GeneratedGraph::graph)
        .def_property_readonly("family",
                               [](const GeneratedGraph& g) {
                                   return std::string(family_name(g.family));
                               })
        .def_readonly("generation", &GeneratedGraph::generation)
        .def_readonly("hubs", &GeneratedGraph::hubs)
        .def_readonly("birth_generation", &GeneratedGraph::birth_generation)
        .def_readonly("coords", &GeneratedGraph::coords);

    m.def("generate", &generate_family, py::arg("family"), py::arg("g"),
          "Build one of the families: pseudofractal, sierpinski, aux.");

    m.def("load_edgelist", [](const std::string& text) { return load_edgelist(text); });
    m.def("save_edgelist", &save_edgelist);

    m.def(
        "propagate",
        [](const Graph& g, int k, const std::vector<VertexId>& seed,
           const std::optional<std::vector<VertexId>>& forbidden) {
            std::optional<VertexSet> forb;
            if (forbidden) forb = to_set(g, *forbidden);
            const PropagationTrace trace = propagate(g, k, to_set(g, seed), forb);
            py::dict d;
            py::list snapshots;
            for (const auto& s : trace.snapshots) snapshots.append(s.to_vector());
            d["snapshots"] = snapshots;
            py::list steps;
            for (int s : trace.step_monitored)
                steps.append(s < 0 ? py::object(py::none()) : py::object(py::int_(s)));
            d["step_monitored"] = steps;
            d["covers_all"] = trace.covers_all();
            return d;
        },
        py::arg("graph"), py::arg("k"), py::arg("seed"), py::arg("forbidden") = py::none());

    m.def(
        "is_kpds",
        [](const Graph& g, int k, const std::vector<VertexId>& seed) {
            return is_kpds(g, k, to_set(g, seed));
        },
        py::arg("graph"), py::arg("k"), py::arg("seed"));

    m.def(
        "row_propagation_check",
        [](const GeneratedGraph& sg, int k) { return row_propagation_check(sg, k); },
        py::arg("gasket"), py::arg("k"));

    m.def(
        "sierpinski_rows",
        [](const GeneratedGraph& sg) { return sierpinski_rows(sg).rows; },
        py::arg("gasket"));

    m.def(
        "degree_profile",
        [](const GeneratedGraph& gg) { return degree_profile(gg); },
        py::arg("generated"));

    m.def(
        "min_kpds",
        [](const Graph& g, int k, int size_cap, unsigned long long max_subsets) {
            SolveOptions opts;
            opts.size_cap = size_cap;
            opts.max_subsets = max_subsets;
            return solve_to_dict(min_kpds(g, k, opts));
        },
        py::arg("graph"), py::arg("k"), py::arg("size_cap") = 0,
        py::arg("max_subsets") = 10'000'000ULL);

    m.def(
        "min_vertex_cover",
        [](const Graph& g, unsigned long long max_subsets) {
            SolveOptions opts;
            opts.max_subsets = max_subsets;
            return solve_to_dict(min_vertex_cover(g, opts));
        },
        py::arg("graph"), py::arg("max_subsets") = 10'000'000ULL);

    m.def(
        "min_vertex_cover_hub_class",
        [](const GeneratedGraph& gg, int hub_count, unsigned long long max_subsets) {
            SolveOptions opts;
            opts.max_subsets = max_subsets;
            return solve_to_dict(min_vertex_cover_hub_class(gg, hub_count, opts));
        },
        py::arg("aux_graph"), py::arg("hub_count"), py::arg("max_subsets") = 10'000'000ULL);

    m.def("singleton_generation_limit", &singleton_generation_limit, py::arg("k"));
    m.def(
        "predict",
        [](const std::string& family, int g, int k) {
            const auto p = predict(parse_family(family), g, k);
            py::dict d;
            d["value"] = p.value;
            d["regime"] = std::string(regime_name(p.regime));
            return d;
        },
        py::arg("family"), py::arg("g"), py::arg("k"));
    m.def("aux_cover_number", &aux_cover_number_closed, py::arg("g"));
    m.def(
        "cover_class_recurrence",
        [](int g_target) {
            py::list out;
            for (const auto& row : cover_class_recurrence(g_target))
                out.append(py::make_tuple(row.g, row.two_hub, row.three_hub));
            return out;
        },
        py::arg("g_target"));

    m.def(
        "check_condition1",
        [](const GeneratedGraph& gg, VertexId seed_hub, VertexId blocked_hub, int k) {
            return check_condition1(gg, seed_hub, blocked_hub, k);
        },
        py::arg("pseudofractal"), py::arg("seed_hub"), py::arg("blocked_hub"), py::arg("k"));
    m.def(
        "check_condition2",
        [](const GeneratedGraph& sg, const std::vector<VertexId>& cand,
           std::pair<VertexId, VertexId> endpoints) {
            return check_condition2(sg, to_set(sg.graph, cand), endpoints);
        },
        py::arg("gasket"), py::arg("candidate"), py::arg("endpoints"));
    m.def(
        "check_condition3",
        [](const GeneratedGraph& sg, const std::vector<VertexId>& cand) {
            return check_condition3(sg, to_set(sg.graph, cand));
        },
        py::arg("gasket"), py::arg("candidate"));

    m.def(
        "build_kpds",
        [](const std::string& family, int g, int k) {
            switch (parse_family(family)) {
                case Family::pseudofractal:
                    return conditioned_to_dict(build_kpds_pseudofractal(g, k));
                case Family::sierpinski:
                    return conditioned_to_dict(build_kpds_sierpinski(g, k));
                case Family::aux: break;
            }
            throw std::invalid_argument("builders cover pseudofractal and sierpinski");
        },
        py::arg("family"), py::arg("g"), py::arg("k"));

    m.def(
        "build_condition_set",
        [](int g, const std::string& which,
           const std::optional<std::pair<VertexId, VertexId>>& endpoints) {
            ConditionTag tag;
            if (which == "cond2")
                tag = ConditionTag::cond2;
            else if (which == "cond3")
                tag = ConditionTag::cond3;
            else
                throw std::invalid_argument("which must be cond2 or cond3");
            return conditioned_to_dict(build_condition_set(g, tag, endpoints));
        },
        py::arg("g"), py::arg("which"), py::arg("endpoints") = py::none());

    m.def(
        "verification_report_json",
        [](int g_max, int k_max, unsigned long long oracle_budget, bool timings) {
            VerifyOptions opts;
            opts.g_max = g_max;
            opts.k_max = k_max;
            opts.oracle_budget = oracle_budget;
            return report_to_json(run_verification(opts), timings);
        },
        py::arg("g_max") = 4, py::arg("k_max") = 3,
        py::arg("oracle_budget") = 10'000'000ULL, py::arg("timings") = false);

    m.attr("__version__") = std::string(kToolVersion.substr(kToolVersion.find(' ') + 1));
}
