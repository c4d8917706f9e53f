"""Finite topological spaces and the furtherness quasi-metric."""

import json

from ._fintop import (
    FinSpace,
    FintopError,
    core,
    enumerate_topologies,
    export_dot,
    furtherness,
    furtherness_matrix,
    furtherness_oracle,
    furtherness_to_set,
    kolmogorov_quotient,
    opposite,
    product,
    property_names,
    random_space,
)
from . import _fintop


def region_report(space, subset):
    return json.loads(_fintop.region_report_json(space, list(subset)))


def quasi_report(space, subset):
    return json.loads(_fintop.quasi_report_json(space, list(subset)))


def union_analysis(space, subsets):
    return json.loads(_fintop.union_analysis_json(space, [list(s) for s in subsets]))


def ball(space, center, radius=1, backward=False):
    return _fintop.ball(space, center, radius, backward)


def verify(prop, max_n=3):
    return json.loads(_fintop.verify(prop, max_n))


__all__ = [
    "FinSpace",
    "FintopError",
    "ball",
    "core",
    "enumerate_topologies",
    "export_dot",
    "furtherness",
    "furtherness_matrix",
    "furtherness_oracle",
    "furtherness_to_set",
    "kolmogorov_quotient",
    "opposite",
    "product",
    "property_names",
    "quasi_report",
    "random_space",
    "region_report",
    "union_analysis",
    "verify",
]
