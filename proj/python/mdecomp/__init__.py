"""Canonical 2-separation tree decompositions of finite matroids."""

import json

from ._core import (
    Matroid,
    MatroidError,
    decompose_dot,
    decompose_json,
    enumeration_cap,
    gf2,
    good_separations,
    graphic,
    localize,
    phi,
    separations,
    set_enumeration_cap,
    split_along,
    two_sum,
    uniform,
    verify,
)


def decompose(m):
    """The canonical decomposition as a dict with nodes, edges, adhesion, irredundant."""
    return json.loads(decompose_json(m))


__all__ = [
    "Matroid",
    "MatroidError",
    "decompose",
    "decompose_dot",
    "decompose_json",
    "enumeration_cap",
    "gf2",
    "good_separations",
    "graphic",
    "localize",
    "phi",
    "separations",
    "set_enumeration_cap",
    "split_along",
    "two_sum",
    "uniform",
    "verify",
]
