#!/usr/bin/env python3

import pytest

from quasidom.generators import (
    GenKind,
    GenSpec,
    SplitMix64,
    gen_3sat,
    gen_intervals,
    gen_unit_intervals,
    generate,
    is_proper,
)
from quasidom.graph import IntervalGraph, has_induced_claw
from quasidom.internals import InputError
from quasidom.reduction import CnfFormula, validate_formula


def test_splitmix64_reference_stream():
    rng = SplitMix64(1234567)
    assert [rng.next() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]


def test_splitmix64_seed_zero():
    assert SplitMix64(0).next() == 0xE220A8397B1DCDAF


def test_below_and_split():
    rng = SplitMix64(7)
    draws = [rng.below(6) for _ in range(200)]
    assert set(draws) == set(range(6))
    child = rng.split()
    assert child.next() != rng.next()
    with pytest.raises(InputError):
        rng.below(0)


def test_intervals_are_reproducible():
    spec = GenSpec(GenKind.RANDOM_INTERVALS, 12, 99)
    assert gen_intervals(spec) == gen_intervals(spec)
    assert gen_intervals(spec) != gen_intervals(spec._replace(seed=100))
    for left, right in gen_intervals(spec):
        assert 0 <= left < 100
        assert 1 <= right - left <= 30


def test_interval_params():
    spec = GenSpec(GenKind.RANDOM_INTERVALS, 20, 5, {"span": 3, "max_length": 1})
    for left, right in generate(spec):
        assert left in (0, 1, 2)
        assert right == left + 1


@pytest.mark.parametrize("seed", range(10))
def test_unit_intervals_are_proper(seed):
    intervals = gen_unit_intervals(GenSpec(GenKind.UNIT_INTERVALS, 9, seed))
    assert len(intervals) == 9
    assert is_proper(intervals)
    assert not has_induced_claw(IntervalGraph.from_intervals(intervals))


def test_is_proper():
    assert is_proper([(0, 1), (0.5, 1.5)])
    assert not is_proper([(0, 3), (1, 2)])
    assert not is_proper([(0, 1), (0, 2)])


def test_3sat():
    f = gen_3sat(GenSpec(GenKind.RANDOM_3SAT, 5, 3, {"clauses": 7}))
    assert isinstance(f, CnfFormula)
    assert f.num_vars == 5
    assert len(f.clauses) == 7
    validate_formula(f)
    assert generate(GenSpec(GenKind.RANDOM_3SAT, 5, 3, {"clauses": 7})) == f
    with pytest.raises(InputError):
        gen_3sat(GenSpec(GenKind.RANDOM_3SAT, 2, 3))


def test_empty_requests():
    with pytest.raises(InputError):
        gen_intervals(GenSpec(GenKind.RANDOM_INTERVALS, 0, 1))
    with pytest.raises(InputError):
        gen_unit_intervals(GenSpec(GenKind.UNIT_INTERVALS, 0, 1))
