"""Incidence coloring of graphs: bounds, exact values and composed colorings."""

import json

from ._core import (
    Graph,
    IntegrityError,
    TooLargeError,
    cartesian,
    chi_i,
    compose,
    greedy,
    join,
    union,
    verify,
)
from ._core import report_json as _report_json


def report(graph, planar=False, exact="auto", guard=120):
    """Bound report for ``graph`` as a dict with the same fields as ``incol analyze``."""
    return json.loads(_report_json(graph, planar=planar, exact=exact, guard=guard))


__all__ = [
    "Graph",
    "IntegrityError",
    "TooLargeError",
    "cartesian",
    "chi_i",
    "compose",
    "greedy",
    "join",
    "report",
    "union",
    "verify",
]
