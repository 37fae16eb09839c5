#!/usr/bin/env python3

from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import given, settings

from conftest import interval_lists
from quasidom.dp import solve_gamma12
from quasidom.gamma import g0_prefix, g1_prefix, g1_tail
from quasidom.graph import Graph, IntervalGraph, is_1j_dominating, read_intervals
from quasidom.internals import UNDEFINED, InputError, ResourceError
from quasidom.oracle import (
    MembershipConstraint,
    gamma_j,
    gamma_oracle,
    min_dom,
    min_dom_bounded,
)


def brute_force(g: Graph, j) -> int:
    for size in range(g.n + 1):
        for s in combinations(g.vertices, size):
            if is_1j_dominating(g, s, j).valid:
                return size
    raise AssertionError("the whole vertex set always dominates")


def test_path3(path3):
    result = min_dom(path3, 2)
    assert result.value == 1
    assert result.witness == frozenset({2})
    assert not result.exceeds_budget


@pytest.mark.parametrize(
    "include, exclude, expected",
    [
        ((), (2,), 2),
        ((1,), (), 2),
        ((1, 3), (), 2),
        ((), (1, 2, 3), UNDEFINED),
        ((1, 2, 3), (), 3),
    ],
)
def test_constraints_on_path3(path3, include, exclude, expected):
    result = min_dom(path3, 2, MembershipConstraint(include, exclude))
    assert result.value == expected
    if result.value is not UNDEFINED:
        assert set(include) <= result.witness
        assert not set(exclude) & result.witness
        assert is_1j_dominating(path3, result.witness, 2).valid


def test_claw_bounds(claw):
    assert gamma_j(claw, None) == 1
    assert gamma_j(claw, 2) == 1
    #  without the center all three leaves are needed, and the center sees three
    assert min_dom(claw, 2, MembershipConstraint(exclude={4})).value is UNDEFINED
    assert min_dom(claw, None, MembershipConstraint(exclude={4})).value == 3


def test_constraint_conflict():
    with pytest.raises(InputError):
        MembershipConstraint({1}, {1})


def test_bad_arguments(path3):
    with pytest.raises(InputError):
        min_dom(path3, 0)
    with pytest.raises(InputError):
        min_dom(path3, 2, MembershipConstraint(include={7}))
    with pytest.raises(InputError):
        min_dom_bounded(path3, 2, -1)


def test_vertex_cap(path4):
    with pytest.raises(ResourceError):
        min_dom(path4, 2, cap=3)
    assert min_dom(path4, 2, cap=4).value == 2


def test_bounded(path4):
    over = min_dom_bounded(path4, 2, 1)
    assert over.value is UNDEFINED
    assert over.exceeds_budget
    within = min_dom_bounded(path4, 2, 2)
    assert within.value == 2
    assert not within.exceeds_budget


def test_bounded_with_constraint(path4):
    result = min_dom_bounded(path4, 2, 3, MembershipConstraint(include={2, 3}))
    assert result.value == 2
    assert result.witness == frozenset({2, 3})


def test_gamma_oracle_keys(path3):
    assert gamma_oracle(path3, g0_prefix(1)).value is UNDEFINED
    assert gamma_oracle(path3, g0_prefix(3)).value == 1
    assert gamma_oracle(path3, g1_prefix(3)).value == 2
    assert gamma_oracle(path3, g1_tail(2, 3)).value == 2
    with pytest.raises(InputError):
        gamma_oracle(path3, g1_tail(3, 3))


def test_empty_graph():
    assert min_dom(Graph(0), 2).value == 0


@settings(max_examples=60, deadline=None)
@given(interval_lists(max_size=7))
def test_matches_brute_force(intervals):
    g = IntervalGraph.from_intervals(intervals)
    for j in (None, 1, 2, 3):
        result = min_dom(g, j)
        assert result.value == brute_force(g, j)
        assert is_1j_dominating(g, result.witness, j).valid


@settings(max_examples=60, deadline=None)
@given(interval_lists(max_size=9))
def test_domination_chain(intervals):
    g = IntervalGraph.from_intervals(intervals)
    plain = gamma_j(g, None)
    assert plain <= gamma_j(g, 2)
    assert gamma_j(g, 3) == plain


def test_strict_instance():
    g = read_intervals(Path(__file__).parent / "data" / "strict.intervals")
    assert g.n == 9
    assert gamma_j(g, None) == 3
    assert gamma_j(g, 2) == 4
    assert gamma_j(g, 3) == 3
    value, witness = solve_gamma12(g)
    assert value == 4
    assert is_1j_dominating(g, witness, 2).valid
