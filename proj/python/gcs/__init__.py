"""Homology of configuration spaces of graphs (C++ core)."""

import json

from . import _core
from ._core import (
    CycleError,
    FormulaError,
    GraphError,
    blowup_check,
    enumerate_groupings,
    product_span,
    relation,
    relation_names,
    smith_normal_form,
    suite_names,
)

__all__ = [
    "CycleError",
    "FormulaError",
    "GraphError",
    "blowup_check",
    "compute",
    "dump_complex",
    "enumerate_groupings",
    "graph",
    "predict",
    "product_span",
    "relation",
    "relation_names",
    "smith_normal_form",
    "suite_names",
    "verify",
]


def compute(graph, n, model="swiatkowski", dims="", reduce=True, max_cells=0, time_budget=0.0):
    """Homology of C_n(graph); returns the CLI's JSON record as a dict."""
    if isinstance(dims, (tuple, list)):
        dims = f"{dims[0]}-{dims[1]}"
    elif isinstance(dims, int):
        dims = str(dims)
    return json.loads(_core.compute_json(graph, n, model, dims, reduce, max_cells, time_budget))


def predict(family, n, d):
    return json.loads(_core.predict_json(family, n, d))


def verify(suite, threads=0):
    return json.loads(_core.verify_json(suite, threads))


def graph(source):
    return json.loads(_core.graph_json(source))


def dump_complex(graph, n, model="swiatkowski", reduce=True):
    return json.loads(_core.dump_complex(graph, n, model, reduce))
