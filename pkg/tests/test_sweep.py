#!/usr/bin/env python3

import pytest
from hypothesis import given, settings

from conftest import interval_lists, named_graph
from quasidom.gamma import iter_keys, key_constraint
from quasidom.generators import GenKind, GenSpec, gen_intervals
from quasidom.graph import IntervalGraph, is_1j_dominating
from quasidom.internals import UNDEFINED, InputError
from quasidom.oracle import gamma_oracle, min_dom
from quasidom.sweep import SweepEngine, sweep_gamma12


@pytest.mark.parametrize(
    "name, expected",
    [
        ("single", 1),
        ("isolated_pair", 2),
        ("path3", 1),
        ("path4", 2),
        ("triangle", 1),
        ("claw", 1),
    ],
)
def test_named_graphs(name, expected):
    g = named_graph(name)
    value, witness = sweep_gamma12(g)
    assert value == expected
    assert len(witness) == value
    assert is_1j_dominating(g, witness, 2).valid


def test_constrained(path3):
    engine = SweepEngine(path3)
    assert engine.value(exclude={2})[0] == 2
    assert engine.value(include={1})[0] == 2
    assert engine.value(exclude={1, 2, 3}) == (UNDEFINED, None)
    value, witness = engine.value(i=2, include={2})
    assert (value, witness) == (1, frozenset({2}))


def test_claw_without_center(claw):
    #  the three leaves would all be chosen and the center would see three
    assert SweepEngine(claw).value(exclude={4})[0] is UNDEFINED


def test_bad_queries(path3):
    engine = SweepEngine(path3)
    with pytest.raises(InputError):
        engine.value(i=4)
    with pytest.raises(InputError):
        engine.value(include={1}, exclude={1})
    with pytest.raises(InputError):
        engine.value(i=2, include={3})


@settings(max_examples=80, deadline=None)
@given(interval_lists(max_size=10))
def test_matches_oracle(intervals):
    g = IntervalGraph.from_intervals(intervals)
    value, witness = SweepEngine(g).value()
    assert value == min_dom(g, 2).value
    assert is_1j_dominating(g, witness, 2).valid


@pytest.mark.parametrize("seed", range(6))
def test_every_key_matches_oracle(seed):
    spec = GenSpec(GenKind.RANDOM_INTERVALS, 7, seed, {"span": 20})
    g = IntervalGraph.from_intervals(gen_intervals(spec))
    engine = SweepEngine(g)
    for key in iter_keys(g.n):
        value, witness = engine.value(*key_constraint(key))
        assert value == gamma_oracle(g, key).value, key
        if witness is not None:
            i, include, exclude = key_constraint(key)
            assert include <= witness
            assert not exclude & witness
            assert is_1j_dominating(g.induced_prefix(i), witness, 2).valid
