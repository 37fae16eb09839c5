#!/usr/bin/env python3

"""
The polynomial [1,2]-domination algorithm for interval graphs.

Eight quantities (see `quasidom.gamma` for what each key means) are evaluated
top-down with memoization.  A key fixes membership on a window [lo, i] of the
prefix G[1, i].  Its value is the window's members plus the best completion
below, and the completion is one `Frontier` recurrence: pick the largest
chosen vertex s under the current boundary p, check every vertex strictly
between them, and continue from s.  What the decided vertices impose on [1, s)
fits in three low values and two caps, so the number of states is polynomial.

A solve walks the prefixes 1..n in order so every recursion stays shallow,
then takes the smaller of the two root quantities and replays the stored
choices into a witness set.

Evaluator modes:

- `literal`: the recurrences above; every key is exact.
- `transcribed`: the case analysis as printed (`quasidom.transcribed`).
- `arbitrated`: the printed cases, each value checked against `literal`; a
  disagreement is logged, recorded as a Deviation, and the exact value kept.
- `sweep`: the root is answered by the sweep engine directly.

Examples:

```python
value, witness = solve_gamma12(IntervalGraph.from_intervals([(0, 2), (1, 3), (2, 4)]))
#  value == 1, witness == frozenset({2})
```
"""

import logging
import sys
from collections import namedtuple
from typing import FrozenSet, List, Optional, Union

from .gamma import (
    Best,
    Choice,
    Deviation,
    Frontier,
    GammaKey,
    GammaKind,
    GammaValue,
    MemoStore,
    g0_prefix,
    g0_range,
    g0_single,
    g1_pair,
    g1_prefix,
    g1_tail,
    g1_triple,
    g11_run,
    key_constraint,
    undefined,
    validate_key,
)
from .graph import IntervalGraph, NeighborhoodIndex, build_index, is_1j_dominating
from .internals import (
    DOMINATED,
    EvalModes,
    InputError,
    StructureError,
    Value,
    is_finite,
    qd_context,
    value_min,
)
from .sweep import SweepEngine
from .transcribed import TranscribedRecurrences

logger = logging.getLogger(__name__)

Solution = namedtuple("Solution", ["value", "witness"])

MemoKey = Union[GammaKey, Frontier]


class RecursionHeadroom:
    """
    Context manager that raises the interpreter recursion limit for a block.

    Args:
        limit: Minimum recursion limit inside the block.
    """

    def __init__(self, limit: int) -> None:
        self.limit = limit
        self.saved = None

    def __enter__(self) -> "RecursionHeadroom":
        self.saved = sys.getrecursionlimit()
        if self.limit > self.saved:
            sys.setrecursionlimit(self.limit)
        return self

    def __exit__(self, *args) -> None:
        sys.setrecursionlimit(self.saved)


class GammaEvaluator(TranscribedRecurrences):
    """
    Memoized evaluation of the gamma recurrences on one interval graph.

    Args:
        g: The interval graph, numbered by right endpoint.
        index: Its neighborhood tables, built if not given.
        mode: One of `literal`, `transcribed`, `arbitrated`, `sweep`; defaults to
            the configured mode.
        memo: Memo table to fill, a fresh one if not given.
        sweep: Sweep engine, built on demand.

    Raises:
        InputError: Unknown mode or empty graph.
        StructureError: The numbering does not satisfy the ordering property.
    """

    def __init__(
        self,
        g: IntervalGraph,
        index: Optional[NeighborhoodIndex] = None,
        mode: Optional[str] = None,
        memo: Optional[MemoStore] = None,
        sweep: Optional[SweepEngine] = None,
    ) -> None:
        if g.n < 1:
            raise InputError("the graph has no vertices")
        mode = qd_context.mode if mode is None else mode
        if mode not in EvalModes:
            raise InputError(f"evaluator mode must be one of {EvalModes}, got {mode!r}")
        self.g = g
        self.n = g.n
        self.index = index if index is not None else build_index(g)
        self.mode = mode
        self.memo = memo if memo is not None else MemoStore()
        self._sweep = sweep
        self._reference = None
        self.deviations: List[Deviation] = []
        self.adjacent12 = g.n >= 2 and g.has_edge(1, 2)
        if mode in ("transcribed", "arbitrated"):
            self._compute = self._transcribed_table()
        else:
            self._compute = {
                GammaKind.G0_PREFIX: self._g0_prefix,
                GammaKind.G0_RANGE: self._g0_range,
                GammaKind.G0_SINGLE: self._g0_single,
                GammaKind.G1_PREFIX: self._g1_prefix,
                GammaKind.G1_TAIL: self._g1_tail,
                GammaKind.G1_PAIR: self._g1_pair,
                GammaKind.G1_TRIPLE: self._g1_triple,
                GammaKind.G11_RUN: self._g11_run,
            }

    @property
    def sweep(self) -> SweepEngine:
        if self._sweep is None:
            self._sweep = SweepEngine(self.g, self.index)
        return self._sweep

    @property
    def reference(self) -> "GammaEvaluator":
        """A `literal` evaluator on the same graph, for arbitration."""
        if self._reference is None:
            self._reference = GammaEvaluator(self.g, self.index, mode="literal")
        return self._reference

    ##########################
    #  table access

    def low(self, a: int) -> int:
        return self.index.low(a)

    def low_range(self, a: int, b: int):
        return self.index.low_range(a, b)

    def maxlow(self, a: int) -> int:
        return self.index.maxlow(a)

    def eval(self, key: GammaKey) -> GammaValue:
        """
        The memoized value of a key (validated against the graph size).

        Raises:
            InputError: The key is malformed or out of range.
        """
        validate_key(key, self.n)
        with RecursionHeadroom(50 * self.n + 1000):
            return self._eval(key)

    def _eval(self, key: MemoKey) -> GammaValue:
        entry = self.memo.get(key)
        if entry is not None:
            return entry
        if isinstance(key, Frontier):
            result = self._frontier(key)
        else:
            result = self._compute[key.kind](*key.args)
            if self.mode == "arbitrated":
                result = self._arbitrate(key, result)
        return self.memo.put(key, result)

    def _value(self, key: MemoKey) -> Value:
        return self._eval(key).value

    def _arbitrate(self, key: GammaKey, result: GammaValue) -> GammaValue:
        exact = self.reference.eval(key).value
        if result.value == exact:
            return result
        case = result.choice.case
        if result.value is DOMINATED:
            logger.debug("%s: dominated entry resolved to %s", key, exact)
        else:
            logger.warning(
                "%s: recurrence case %s gives %s, exact value is %s",
                key,
                case,
                result.value,
                exact,
            )
            self.deviations.append(Deviation(key, case, result.value, exact))
        witness = self.reference.witness(key) if is_finite(exact) else None
        return GammaValue(exact, Choice(f"exact:{case}", witness=witness))

    #  one public entry point per quantity

    def eval_g0_prefix(self, i: int) -> GammaValue:
        return self.eval(g0_prefix(i))

    def eval_g0_range(self, j: int, i: int) -> GammaValue:
        return self.eval(g0_range(j, i))

    def eval_g0_single(self, j: int, i: int, k: int) -> GammaValue:
        return self.eval(g0_single(j, i, k))

    def eval_g1_prefix(self, i: int) -> GammaValue:
        return self.eval(g1_prefix(i))

    def eval_g1_tail(self, j: int, i: int) -> GammaValue:
        return self.eval(g1_tail(j, i))

    def eval_g1_pair(self, k: int, i: int, j: int) -> GammaValue:
        return self.eval(g1_pair(k, i, j))

    def eval_g1_triple(self, l: int, i: int, j: int, k: int) -> GammaValue:
        return self.eval(g1_triple(l, i, j, k))

    def eval_g11_run(self, l: int, i: int, j: int, k: int) -> GammaValue:
        return self.eval(g11_run(l, i, j, k))

    ##########################
    #  helpers shared by the recurrences

    def _gamma(self, i: int, best: Best, case: str, add=()) -> None:
        """Offer min(gamma0(i), gamma1(i)) + |add| as one term."""
        for key in (g0_prefix(i), g1_prefix(i)):
            value = self._value(key)
            if is_finite(value):
                best.offer(value + len(add), Choice(case, (key,), add))

    def _plus(self, best: Best, key: MemoKey, case: str, i: int) -> None:
        """Offer value(key) + 1 with i added to the witness."""
        value = self._value(key)
        if is_finite(value):
            best.offer(value + 1, Choice(case, (key,), (i,)))

    def _window(self, key: GammaKey, case: str) -> GammaValue:
        """
        The members a key fixes, plus the best completion below them.

        Excluded window vertices above the lowest member are settled by the
        members alone, except for neighbors below the window; those become
        the caps of the frontier.  Excluded vertices under the lowest member
        are left to the frontier, which may choose nothing in [lo, p).
        """
        i, include, exclude = key_constraint(key)
        members = sorted(include)
        lo = min(include | exclude)
        p = members[0] if members else i + 1
        r0, r1 = lo, p
        for x in sorted(exclude):
            if x < p:
                continue
            seen = sum(1 for y in members if self.g.has_edge(x, y))
            if not 1 <= seen <= 2:
                return undefined(f"{case}:seen-{seen}")
            if seen == 2:
                r0 = min(r0, self.low(x))
            else:
                r1 = min(r1, self.low(x))
        below = Frontier.make(p, [self.low(y) for y in members], r0, r1)
        value = self._value(below)
        if not is_finite(value):
            return undefined(case)
        return GammaValue(value + len(members), Choice(case, (below,), members))

    ##########################
    #  the recurrences

    def _g0_prefix(self, i: int) -> GammaValue:
        key = g0_range(i, i)
        return GammaValue(self._value(key), Choice("range", (key,)))

    def _g0_range(self, j: int, i: int) -> GammaValue:
        return self._window(g0_range(j, i), "empty-window")

    def _g0_single(self, j: int, i: int, k: int) -> GammaValue:
        return self._window(g0_single(j, i, k), "single")

    def _g1_prefix(self, i: int) -> GammaValue:
        if i > 1 and self.low(i) == i:
            #  i sees nothing below it
            best = Best()
            self._gamma(i - 1, best, "isolated", add=(i,))
            return best.result("isolated")
        return self._window(g1_prefix(i), "top")

    def _g1_tail(self, j: int, i: int) -> GammaValue:
        return self._window(g1_tail(j, i), "tail")

    def _g1_pair(self, k: int, i: int, j: int) -> GammaValue:
        return self._window(g1_pair(k, i, j), "pair")

    def _g1_triple(self, l: int, i: int, j: int, k: int) -> GammaValue:
        return self._window(g1_triple(l, i, j, k), "triple")

    def _g11_run(self, l: int, i: int, j: int, k: int) -> GammaValue:
        return self._window(g11_run(l, i, j, k), "run")

    def _frontier(self, f: Frontier) -> GammaValue:
        """
        Best completion of [1, p): choose nothing more, or choose s next.

        Choosing s leaves (s, p) out.  A vertex x there ends with
        boost(x) + [low(x) <= s] chosen neighbors, plus those in [low(x), s)
        which only exist if s already counts.  So x needs boost(x) <= 2, at
        least one neighbor from {s} or above, and sets the caps below s by
        what it has left.
        """
        p, lows, r0, r1 = f
        best = Best()
        if lows[0] <= 1 and lows[2] == p:
            best.offer(0, Choice("stop", witness=()))
        twice = p  # smallest low in the gap with two chosen neighbors above
        once = p  # smallest low in the gap with one
        unseen_lo = p  # smallest low in the gap with none
        unseen_hi = 0  # largest low in the gap with none
        for s in range(p - 1, 0, -1):
            x = s + 1
            if x < p:
                seen = f.boost(x)
                lx = self.low(x)
                if seen >= 3:
                    break
                if seen == 2:
                    twice = min(twice, lx)
                elif seen == 1:
                    once = min(once, lx)
                else:
                    unseen_lo = min(unseen_lo, lx)
                    unseen_hi = max(unseen_hi, lx)
            if unseen_hi > s:
                #  x can no longer be reached from below
                break
            if twice <= s or s >= r0:
                continue
            cap0 = min(once, r1 if r1 <= s else p)
            below = Frontier.make(s, lows + (self.low(s),), cap0, unseen_lo)
            self._plus(best, below, "next", s)
        return best.result("none")

    ##########################
    #  driver

    def fill(self) -> None:
        """Evaluate both root quantities of every prefix, in increasing order."""
        with RecursionHeadroom(50 * self.n + 1000):
            for i in range(1, self.n + 1):
                self._eval(g0_prefix(i))
                self._eval(g1_prefix(i))
        logger.debug("memo after fill: %s", self.memo.stats())

    def root_value(self) -> Value:
        """
        gamma[1,2](G) without building a witness.
        """
        if self.mode == "sweep":
            return self.sweep.value()[0]
        self.fill()
        return value_min(self._value(g0_prefix(self.n)), self._value(g1_prefix(self.n)))

    def witness(self, key: MemoKey) -> FrozenSet[int]:
        """
        Replay the stored choices below a key into a vertex set.

        Raises:
            StructureError: A consulted entry is missing or not finite.
        """
        members = set()
        stack = [key]
        while stack:
            current = stack.pop()
            entry = self.memo.peek(current)
            if entry is None or not is_finite(entry.value):
                raise StructureError(f"witness replay reached {current} with no value")
            choice = entry.choice
            if choice.witness is not None:
                members |= choice.witness
                continue
            members |= choice.add
            stack.extend(choice.children)
        return frozenset(members)

    def solve(self) -> Solution:
        """
        gamma[1,2](G) and a minimum [1,2]-dominating set.

        The witness is always checked.  In `transcribed` mode the root is also
        compared with the `literal` one.  A wrong root or an invalid replay is
        recorded as a Deviation and the sweep engine's answer returned instead.
        """
        if self.mode == "sweep":
            value, witness = self.sweep.value()
            return Solution(value, witness)
        self.fill()
        roots = [g0_prefix(self.n), g1_prefix(self.n)]
        values = [self._value(key) for key in roots]
        value = value_min(*values)
        if not is_finite(value):
            return self._fallback(roots[1], "root", value)
        root = roots[0] if values[0] == value else roots[1]
        if self.mode == "transcribed" and value != self.reference.root_value():
            return self._fallback(root, "root", value)
        try:
            witness = self.witness(root)
        except StructureError as exc:
            logger.warning("%s", exc)
            return self._fallback(root, "replay", value)
        cert = is_1j_dominating(self.g, witness, 2)
        if not cert.valid or len(witness) != value:
            logger.warning(
                "replayed witness %s is not a [1,2]-dominating set of size %s (violations %s)",
                sorted(witness),
                value,
                cert.violations,
            )
            return self._fallback(root, "replay", value)
        return Solution(value, witness)

    def _fallback(self, key: GammaKey, case: str, got: Value) -> Solution:
        exact, witness = self.sweep.value()
        self.deviations.append(Deviation(key, case, got, exact))
        logger.warning(
            "%s: %s gives %s, falling back to the sweep engine (%s)", key, case, got, exact
        )
        return Solution(exact, witness)


def solve_gamma12(g: IntervalGraph, mode: Optional[str] = None) -> Solution:
    """
    The [1,2]-domination number of an interval graph and a witness.

    Args:
        g: A nonempty interval graph numbered by right endpoint.
        mode: Evaluator mode, defaults to the configured one.

    Returns:
        Solution(value, witness); the witness always passes `is_1j_dominating(g, witness, 2)`.

    Raises:
        StructureError: The numbering does not satisfy the ordering property.
    """
    return GammaEvaluator(g, mode=mode).solve()
