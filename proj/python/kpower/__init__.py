"""k-power domination on self-similar graphs.

Thin python surface over the C++ core: family generators, the propagation
engine, exhaustive oracles, closed-form predictions and the constructive
set builders.
"""

import json as _json

from ._kpower import (
    Graph,
    GeneratedGraph,
    __version__,
    aux_cover_number,
    build_condition_set,
    build_kpds,
    check_condition1,
    check_condition2,
    check_condition3,
    cover_class_recurrence,
    degree_profile,
    generate,
    is_kpds,
    load_edgelist,
    min_kpds,
    min_vertex_cover,
    min_vertex_cover_hub_class,
    predict,
    propagate,
    row_propagation_check,
    save_edgelist,
    sierpinski_rows,
    singleton_generation_limit,
    verification_report_json,
)


def verify(g_max=4, k_max=3, oracle_budget=10_000_000):
    """Run the verification grid and return the report as a dict."""
    return _json.loads(verification_report_json(g_max, k_max, oracle_budget))


__all__ = [
    "Graph",
    "GeneratedGraph",
    "__version__",
    "aux_cover_number",
    "build_condition_set",
    "build_kpds",
    "check_condition1",
    "check_condition2",
    "check_condition3",
    "cover_class_recurrence",
    "degree_profile",
    "generate",
    "is_kpds",
    "load_edgelist",
    "min_kpds",
    "min_vertex_cover",
    "min_vertex_cover_hub_class",
    "predict",
    "propagate",
    "row_propagation_check",
    "save_edgelist",
    "sierpinski_rows",
    "singleton_generation_limit",
    "verify",
    "verification_report_json",
]
