"""Rooted graph minors, 2-roundedness checks and binary matroids."""

import json

from ._rminor import (
    Graph,
    RminorError,
    SearchBudgetExceeded,
    are_isomorphic,
    catalog_names,
    contract_edge,
    delete_edge,
    is_planar,
    is_three_connected,
    k5_iff_k331,
    simplify,
    triangles,
    vertex_connectivity,
)
from . import _rminor

DEFAULT_NODE_CAP = 10_000_000

FAMILY_A = ["K33", "K33_01", "K33_02", "K33_11"]
FAMILY_B = ["K33", "K33_01", "K5", "K33_02", "K33_11"]


def _decode(text):
    return None if text is None else json.loads(text)


def find_minor(host, pattern, required=(), node_cap=DEFAULT_NODE_CAP):
    """Certificate dict for a `pattern` minor keeping `required`, or None."""
    return _decode(_rminor._find_minor(host, pattern, set(required), node_cap))


def find_family_minor(host, family=FAMILY_A, required=(), node_cap=DEFAULT_NODE_CAP):
    return _decode(_rminor._find_family_minor(host, list(family), set(required), node_cap))


def preserve_triangle(host, triangle, target="K5", node_cap=DEFAULT_NODE_CAP):
    """A `target` minor keeping the three edges as a pattern triangle."""
    return _decode(_rminor._preserve_triangle(host, list(triangle), target, node_cap))


def verify_model(host, certificate):
    """(ok, diagnostic) for a certificate dict."""
    return _rminor._verify_model(host, json.dumps(certificate))


def verify_two_rounded(family=FAMILY_A, node_cap=DEFAULT_NODE_CAP):
    return json.loads(_rminor._verify_two_rounded(list(family), node_cap))


def r12_claims():
    return json.loads(_rminor._r12_claims())


def matroid_has_minor(host, target, required=()):
    """Hosts and targets are "r12", "r10", catalog names, or matrix dicts."""
    encode = lambda m: m if isinstance(m, str) else json.dumps(m)
    return _rminor._matroid_has_minor(encode(host), encode(target), set(required))


__all__ = [
    "Graph",
    "RminorError",
    "SearchBudgetExceeded",
    "FAMILY_A",
    "FAMILY_B",
    "are_isomorphic",
    "catalog_names",
    "contract_edge",
    "delete_edge",
    "find_family_minor",
    "find_minor",
    "is_planar",
    "is_three_connected",
    "k5_iff_k331",
    "matroid_has_minor",
    "preserve_triangle",
    "r12_claims",
    "simplify",
    "triangles",
    "verify_model",
    "verify_two_rounded",
    "vertex_connectivity",
]
