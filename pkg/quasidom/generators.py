#!/usr/bin/env python3

"""
Seeded instance generators for fuzzing and benchmarks.

All randomness comes from SplitMix64, a small splittable 64-bit generator with
fixed constants, so an instance can be replayed from its GenSpec in any
language:

    state += 0x9E3779B97F4A7C15
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

(all arithmetic modulo 2**64).  Bounded draws use rejection sampling.
"""

import enum
from collections import namedtuple
from fractions import Fraction
from typing import Any, List, Tuple

from .graph import IntervalGraph, has_induced_claw
from .internals import InputError, StructureError
from .reduction import CnfFormula

MASK64 = (1 << 64) - 1
CLAW_CHECK_MAX = 10

IntervalSet = List[Tuple[Any, Any]]


class SplitMix64:
    """
    The SplitMix64 generator.

    Args:
        seed: Any integer; reduced modulo 2**64.
    """

    GAMMA = 0x9E3779B97F4A7C15

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next(self) -> int:
        """The next 64-bit output."""
        self.state = (self.state + self.GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound)."""
        if bound < 1:
            raise InputError(f"bound must be positive, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next()
            if x < limit:
                return x % bound

    def coin(self) -> bool:
        return bool(self.next() >> 63)

    def split(self) -> "SplitMix64":
        """An independent generator seeded from this stream."""
        return SplitMix64(self.next())


class GenKind(enum.Enum):
    RANDOM_INTERVALS = "intervals"
    UNIT_INTERVALS = "unit"
    RANDOM_3SAT = "3sat"


class GenSpec(namedtuple("GenSpec", ["kind", "n", "seed", "params"], defaults=(None,))):
    """
    What to generate.

    `n` is the interval count, or the variable count for RANDOM_3SAT.  Known
    params: `span` and `max_length` (intervals), `clauses` (3sat).
    """

    __slots__ = ()

    def param(self, name: str, default: int) -> int:
        if not self.params or self.params.get(name) is None:
            return default
        return self.params[name]


def gen_intervals(spec: GenSpec) -> IntervalSet:
    """
    Random integer intervals: left uniform in [0, span), length uniform in [1, max_length].

    Defaults are span 100 and max_length 30, which mixes containment, overlap
    and isolated intervals.
    """
    if spec.n < 1:
        raise InputError(f"n must be at least 1, got {spec.n}")
    rng = SplitMix64(spec.seed)
    span = spec.param("span", 100)
    max_length = spec.param("max_length", 30)
    intervals = []
    for _ in range(spec.n):
        left = rng.below(span)
        intervals.append((left, left + 1 + rng.below(max_length)))
    return intervals


def gen_unit_intervals(spec: GenSpec) -> IntervalSet:
    """
    Random intervals of length exactly 1 with left ends on a 0.1 grid in [0, span).

    `span` defaults to n/2 so the graphs are reasonably connected.  No interval
    properly contains another, so the graph is a proper interval graph.
    Instances with at most CLAW_CHECK_MAX intervals are also checked to be claw free.

    Raises:
        StructureError: The claw check fails.
    """
    if spec.n < 1:
        raise InputError(f"n must be at least 1, got {spec.n}")
    rng = SplitMix64(spec.seed)
    span = spec.param("span", max(1, spec.n // 2))
    intervals = []
    for _ in range(spec.n):
        left = Fraction(rng.below(10 * span), 10)
        intervals.append((left, left + 1))
    if spec.n <= CLAW_CHECK_MAX and has_induced_claw(IntervalGraph.from_intervals(intervals)):
        raise StructureError(f"unit interval instance {spec} has an induced claw")
    return intervals


def gen_3sat(spec: GenSpec) -> CnfFormula:
    """
    Random 3-CNF: each clause has three distinct variables with random signs.

    Raises:
        InputError: Fewer than three variables.
    """
    if spec.n < 3:
        raise InputError(f"3-SAT needs at least 3 variables, got {spec.n}")
    rng = SplitMix64(spec.seed)
    count = spec.param("clauses", spec.n)
    clauses = []
    for _ in range(count):
        pool = list(range(1, spec.n + 1))
        clause = []
        for slot in range(3):
            pick = slot + rng.below(len(pool) - slot)
            pool[slot], pool[pick] = pool[pick], pool[slot]
            var = pool[slot]
            clause.append(-var if rng.coin() else var)
        clauses.append(tuple(clause))
    return CnfFormula(spec.n, tuple(clauses))


def is_proper(intervals: IntervalSet) -> bool:
    """True if no interval properly contains another."""
    ordered = sorted(intervals)
    for (l1, r1), (l2, r2) in zip(ordered, ordered[1:]):
        if r2 < r1 or (l1 == l2 and r1 != r2):
            return False
    return True


_GENERATORS = {
    GenKind.RANDOM_INTERVALS: gen_intervals,
    GenKind.UNIT_INTERVALS: gen_unit_intervals,
    GenKind.RANDOM_3SAT: gen_3sat,
}


def generate(spec: GenSpec):
    """Dispatch on `spec.kind`."""
    return _GENERATORS[spec.kind](spec)
