#!/usr/bin/env python3

import pytest
from hypothesis import strategies as st

from quasidom.graph import IntervalGraph

#  (left, right) lists for the small graphs used across the suites
NAMED_INTERVALS = {
    "single": [(0, 1)],
    "isolated_pair": [(0, 1), (2, 3)],
    "path3": [(0, 2), (1, 4), (3, 5)],
    "path4": [(0, 2), (1, 4), (3, 6), (5, 7)],
    "triangle": [(0, 3), (1, 4), (2, 5)],
    #  leaves 1, 2, 3 inside the center 4
    "claw": [(1, 2), (4, 5), (7, 8), (0, 10)],
}


def named_graph(name: str) -> IntervalGraph:
    return IntervalGraph.from_intervals(NAMED_INTERVALS[name])


@pytest.fixture
def path3():
    return named_graph("path3")


@pytest.fixture
def path4():
    return named_graph("path4")


@pytest.fixture
def triangle():
    return named_graph("triangle")


@pytest.fixture
def claw():
    return named_graph("claw")


@pytest.fixture
def isolated_pair():
    return named_graph("isolated_pair")


def interval_lists(max_size: int = 8, span: int = 20, max_length: int = 8):
    """Hypothesis strategy: lists of integer intervals with left < right."""
    interval = st.tuples(st.integers(0, span), st.integers(1, max_length)).map(
        lambda x: (x[0], x[0] + x[1])
    )
    return st.lists(interval, min_size=1, max_size=max_size)


def write_intervals_file(path, intervals) -> str:
    path.write_text("".join(f"{left} {right}\n" for left, right in intervals))
    return str(path)
