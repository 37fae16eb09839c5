#!/usr/bin/env python3

"""
Exact constrained [1,2]-domination on interval graph prefixes by a left to right sweep.

Vertex x is read as the interval [low(x), x]; for x < y, x and y are adjacent iff
low(y) <= x.  Coordinates 1..i are scanned in order.  At coordinate c the
vertices with low(x) == c start (and are chosen or not), then vertex c ends.

The sweep state is (M, e1, e2): M is a bitmask of the chosen vertices still
active, e1 >= e2 are the two largest chosen vertices that have already ended
(0 when absent).  Every active vertex that is not chosen is checked eagerly to
see at most two chosen neighbors, so two ended vertices are all that ever
matter.  Ended vertices are only compared against low() of active non-chosen
vertices; they are rounded down to the largest such low() so that equivalent
states merge.
"""

import logging
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Tuple

from .graph import IntervalGraph, NeighborhoodIndex, build_index
from .internals import UNDEFINED, InputError, Value

logger = logging.getLogger(__name__)

State = Tuple[int, int, int]
#  state -> (cost, previous state, vertices chosen at this coordinate)
Layer = dict

START: State = (0, 0, 0)


def _mask(vertices: Iterable[int]) -> int:
    return sum(1 << v for v in vertices)


class SweepEngine:
    """
    Exact minimum [1,2]-dominating sets of G[1,i] under include/exclude constraints.

    Unconstrained layers are cached per prefix, and a constrained query reuses
    them up to the first coordinate a constrained vertex starts at.

    Args:
        g: The interval graph.
        index: Its neighborhood tables, built if not given.
    """

    def __init__(self, g: IntervalGraph, index: Optional[NeighborhoodIndex] = None):
        self.g = g
        self.index = index if index is not None else build_index(g)
        self.n = g.n
        low = [0] + self.index.lows
        self.low = low
        self.starting = [[] for _ in range(self.n + 2)]
        for x in range(1, self.n + 1):
            self.starting[low[x]].append(x)
        self._cache = {}

    def _active_after_start(self, c: int, i: int) -> List[int]:
        return [v for v in range(c, i + 1) if self.low[v] <= c]

    def _step(
        self,
        layer: Layer,
        c: int,
        i: int,
        include: FrozenSet[int],
        exclude: FrozenSet[int],
    ) -> Layer:
        low = self.low
        starts = [x for x in self.starting[c] if x <= i]
        forced = [x for x in starts if x in include]
        allowed = [x for x in starts if x not in exclude]
        options = []
        if len(allowed) == len(starts):
            options.append(tuple(starts))
        #  with one start left out, at most two may be chosen
        if len(forced) <= 2:
            free = [x for x in allowed if x not in include]
            for extra in range(0, 3 - len(forced)):
                for picked in combinations(free, extra):
                    option = tuple(sorted(forced + list(picked)))
                    if option not in options:
                        options.append(option)

        active = self._active_after_start(c, i)
        remaining = [v for v in active if v != c]
        cbit = 1 << c
        out = {}
        for state, (cost, _, _) in layer.items():
            members, e1, e2 = state
            for option in options:
                chosen = members | _mask(option)
                size = chosen.bit_count()
                feasible = True
                for v in active:
                    if (chosen >> v) & 1:
                        continue
                    lv = low[v]
                    count = size + (e1 >= lv > 0) + (e2 >= lv > 0)
                    if count > 2:
                        feasible = False
                        break
                    if v == c and count < 1:
                        feasible = False
                        break
                if not feasible:
                    continue
                if chosen & cbit:
                    chosen ^= cbit
                    n1, n2 = c, e1
                else:
                    n1, n2 = e1, e2
                lows = [low[v] for v in remaining if not (chosen >> v) & 1]
                n1 = max((x for x in lows if x <= n1), default=0)
                n2 = max((x for x in lows if x <= n2), default=0)
                nxt = (chosen, n1, n2)
                total = cost + len(option)
                if nxt not in out or total < out[nxt][0]:
                    out[nxt] = (total, state, option)
        return out

    def _base_layers(self, i: int) -> List[Layer]:
        layers = self._cache.get(i)
        if layers is None:
            layers = [{START: (0, None, ())}]
            for c in range(1, i + 1):
                layers.append(self._step(layers[-1], c, i, frozenset(), frozenset()))
            self._cache[i] = layers
        return layers

    def value(
        self,
        i: Optional[int] = None,
        include: Iterable[int] = (),
        exclude: Iterable[int] = (),
    ) -> Tuple[Value, Optional[FrozenSet[int]]]:
        """
        Minimum size and a witness for G[1,i] with the given constraints.

        Args:
            i: Prefix end, defaults to n.
            include: Vertices that must be chosen.
            exclude: Vertices that must not be chosen.

        Returns:
            (value, witness), or (UNDEFINED, None) when infeasible.

        Raises:
            InputError: Bad prefix or constraint vertices.
        """
        i = self.n if i is None else i
        if not 1 <= i <= self.n:
            raise InputError(f"prefix end {i} out of range 1..{self.n}")
        include = frozenset(include)
        exclude = frozenset(exclude)
        if include & exclude:
            raise InputError("a vertex is both included and excluded")
        constrained = include | exclude
        if any(not 1 <= v <= i for v in constrained):
            raise InputError(f"constraint vertex outside 1..{i}")

        base = self._base_layers(i)
        if constrained:
            first = min(self.low[v] for v in constrained)
            layers = base[:first]
            for c in range(first, i + 1):
                layers.append(self._step(layers[-1], c, i, include, exclude))
        else:
            layers = base

        final = layers[i].get(START)
        if final is None:
            return UNDEFINED, None
        chosen = set()
        state = START
        for c in range(i, 0, -1):
            _, state, option = layers[c][state]
            chosen.update(option)
        return final[0], frozenset(chosen)


def sweep_gamma12(g: IntervalGraph) -> Tuple[int, FrozenSet[int]]:
    """
    gamma[1,2] of the whole graph and a minimum witness.
    """
    return SweepEngine(g).value()
