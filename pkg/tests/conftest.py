"""Shared quiver and algebra fixtures.

The heavy trivial-extension resolutions are session-scoped so the growth
suite and the property suite reuse one computation.
"""
from __future__ import annotations

import json

import pytest

from quiverlab import (
    CanonicalSpec,
    canonical_algebra,
    gentle_algebra,
    parse_gentle,
    path_algebra,
    quiver_from_data,
    resolve_simple_modules,
    trivial_extension,
)


def path_quiver(n: int):
    """Linear A_n quiver 1 -> 2 -> ... -> n."""
    return quiver_from_data(
        {
            "vertices": list(range(1, n + 1)),
            "arrows": [{"id": f"a{i}", "from": i, "to": i + 1} for i in range(1, n)],
        }
    )


def multi_kronecker(k: int):
    """Two vertices joined by k parallel arrows."""
    return quiver_from_data(
        {
            "vertices": [1, 2],
            "arrows": [{"id": f"a{i}", "from": 1, "to": 2} for i in range(k)],
        }
    )


def star_quiver(arm_lengths, center_last: bool = False):
    """Star-shaped tree: each arm is a chain of the given edge count.

    Arrows point toward the center, so the path algebra stays thin.
    """
    verts, arrows = [], []
    for i, length in enumerate(arm_lengths):
        prev = "c"
        for j in range(1, length + 1):
            v = f"{i}.{j}"
            verts.append(v)
            arrows.append({"id": f"x{i}.{j}", "from": v, "to": prev})
            prev = v
    verts = verts + ["c"] if center_last else ["c"] + verts
    return quiver_from_data({"vertices": verts, "arrows": arrows})


GENTLE_TWO_LOOP_DOC = json.dumps(
    {
        "vertices": [1, 2],
        "arrows": [
            {"id": "b1", "from": 1, "to": 1},
            {"id": "b2", "from": 2, "to": 2},
            {"id": "a", "from": 2, "to": 1},
        ],
        "relations": [["b1", "b1"], ["b2", "b2"]],
    }
)


def gentle_two_loop():
    return gentle_algebra(parse_gentle(GENTLE_TWO_LOOP_DOC))


@pytest.fixture(scope="session")
def growth_suite():
    """Resolutions behind the complexity trichotomy, computed once.

    Keys map to (extension algebra, list of traces) at the standard
    steps=40, dim_cap=100000 settings.
    """
    out = {}
    for key, quiver in [
        ("A2", path_quiver(2)),
        ("A3", path_quiver(3)),
        ("kronecker", multi_kronecker(2)),
        ("kronecker3", multi_kronecker(3)),
    ]:
        ta = trivial_extension(path_algebra(quiver))
        out[key] = (ta, resolve_simple_modules(ta, steps=40, dim_cap=100000))
    return out


@pytest.fixture()
def canonical_235():
    return canonical_algebra(CanonicalSpec((2, 3, 5), (1,)))
