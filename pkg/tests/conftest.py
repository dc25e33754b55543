"""Shared fixtures: the small reference graphs used across the suite."""

from __future__ import annotations

import pytest

from sigdef import SignedGraph, build_graph

# 3-chromatic triangle: one positive edge uv, negative edges uw and vw.
# Two proper colorations over {0, +-1}: (1, -1, 0) with deficiency 0 and
# (1, 0, 1) with deficiency 1.
TRIANGLE_EDGES = [("u", "v", "+"), ("u", "w", "-"), ("v", "w", "-")]

# Seven matched pairs a_i--b_i (positive) with ten cross negatives, whose
# stable cover {b1, a2, b3, a4, a5, a6, a7} the decision procedure recovers
# through steps 8, 9, 11/12, 6, 4, 10.  (The graph itself is 2-chromatic:
# see test_oracle.TestChromaticNumber.test_worked_example.)
WORKED_POSITIVE = [(f"a{i}", f"b{i}", "+") for i in range(1, 8)]
WORKED_NEGATIVE = [
    ("a1", "a2"),
    ("b1", "b4"),
    ("a2", "b5"),
    ("b2", "b3"),
    ("b2", "b4"),
    ("a3", "a4"),
    ("b4", "a5"),
    ("b5", "b6"),
    ("a6", "b7"),
    ("b6", "a7"),
]
WORKED_COVER = {"b1", "a2", "b3", "a4", "a5", "a6", "a7"}

# 3-chromatic graph without a stable cover where one pair ends up with a
# forbidden side and a looped partner: two positive paths u1-v1-u2 and
# u3-v3-u4 with negatives u1u2, u3u4 (the loops), v1v3, v3u1, u3u1.
BLOCKED_LOOP_POSITIVE = [
    ("u1", "v1", "+"),
    ("v1", "u2", "+"),
    ("u3", "v3", "+"),
    ("v3", "u4", "+"),
]
BLOCKED_LOOP_NEGATIVE = [
    ("u1", "u2"),
    ("u3", "u4"),
    ("v1", "v3"),
    ("v3", "u1"),
    ("u3", "u1"),
]


def neg(edges):
    return [(a, b, "-") for a, b in edges]


@pytest.fixture
def triangle() -> SignedGraph:
    return build_graph(TRIANGLE_EDGES)


@pytest.fixture
def worked_example() -> SignedGraph:
    return build_graph(WORKED_POSITIVE + neg(WORKED_NEGATIVE))


@pytest.fixture
def blocked_loop_graph() -> SignedGraph:
    return build_graph(BLOCKED_LOOP_POSITIVE + neg(BLOCKED_LOOP_NEGATIVE))


@pytest.fixture
def all_positive_triangle() -> SignedGraph:
    return build_graph([("x", "y", "+"), ("y", "z", "+"), ("x", "z", "+")])
