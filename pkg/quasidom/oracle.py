#!/usr/bin/env python3

"""
Exact exponential-time solvers for minimum [1,j]-dominating sets.

These are the ground truth the polynomial solver is tested against: every
gamma key can be answered here by translating it into a membership
constraint on a prefix graph.
"""

import logging
from collections import namedtuple
from typing import FrozenSet, Iterable, Optional

from .gamma import GammaKey, key_constraint, validate_key
from .graph import Graph, IntervalGraph, induced_prefix
from .internals import UNDEFINED, InputError, ResourceError, qd_context

logger = logging.getLogger(__name__)


class MembershipConstraint(namedtuple("MembershipConstraint", ["include", "exclude"])):
    """
    Vertices that must, and must not, be in the dominating set.

    Raises:
        InputError: A vertex is both included and excluded.
    """

    __slots__ = ()

    def __new__(cls, include: Iterable[int] = (), exclude: Iterable[int] = ()):
        include = frozenset(include)
        exclude = frozenset(exclude)
        both = include & exclude
        if both:
            raise InputError(f"vertices {sorted(both)} both included and excluded")
        return super().__new__(cls, include, exclude)

    def __bool__(self) -> bool:
        return bool(self.include or self.exclude)


NO_CONSTRAINT = MembershipConstraint()

OracleResult = namedtuple(
    "OracleResult", ["value", "witness", "exceeds_budget"], defaults=(None, False)
)


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Search:
    """
    Depth-first branch and bound over bitmask states (chosen, out).

    A vertex in `out` is decided not to be in the set.  Solutions must be
    smaller than `limit`, which tightens with every solution found.
    """

    def __init__(self, g: Graph, j: Optional[int], limit: int) -> None:
        self.n = g.n
        self.j = j
        self.nbr = g.masks
        self.closed = tuple(m | (1 << v) for v, m in enumerate(g.masks))
        self.limit = limit
        self.best = None
        self.nodes = 0

    def propagate(self, chosen: int, out: int):
        j = self.j
        nbr = self.nbr
        while True:
            changed = False
            for v in range(1, self.n + 1):
                bit = 1 << v
                if chosen & bit:
                    continue
                count = (nbr[v] & chosen).bit_count()
                if j is not None and count > j:
                    #  over-dominated: only joining the set can save it
                    if out & bit:
                        return None
                    chosen |= bit
                    changed = True
                elif count == 0:
                    cand = self.closed[v] & ~out
                    if not cand:
                        return None
                    if cand & (cand - 1) == 0:
                        chosen |= cand
                        changed = True
                elif j is not None and count == j and out & bit:
                    rest = nbr[v] & ~chosen & ~out
                    if rest:
                        out |= rest
                        changed = True
            if not changed:
                return chosen, out

    def lower_bound(self, chosen: int, out: int):
        pending = []
        for v in range(1, self.n + 1):
            if not (chosen >> v) & 1 and not self.nbr[v] & chosen:
                cand = self.closed[v] & ~out
                pending.append((cand.bit_count(), v, cand))
        pending.sort()
        used = 0
        disjoint = 0
        for _, _, cand in pending:
            if not cand & used:
                used |= cand
                disjoint += 1
        return chosen.bit_count() + disjoint, pending

    def run(self, chosen: int, out: int) -> None:
        self.nodes += 1
        state = self.propagate(chosen, out)
        if state is None:
            return
        chosen, out = state
        bound, pending = self.lower_bound(chosen, out)
        if bound >= self.limit:
            return
        if not pending:
            self.best = chosen
            self.limit = chosen.bit_count()
            return
        #  branch on the undominated vertex with fewest candidates
        barred = 0
        for u in _bits(pending[0][2]):
            self.run(chosen | (1 << u), out | barred)
            barred |= 1 << u


def _check_size(g: Graph, c: MembershipConstraint, cap: Optional[int]) -> None:
    if cap is None:
        cap = qd_context.oracle_cap_constrained if c else qd_context.oracle_cap
    if g.n > cap:
        kind = "constrained" if c else "unconstrained"
        raise ResourceError(
            f"oracle cap exceeded: {g.n} vertices > {kind} cap {cap}"
        )


def _search(
    g: Graph,
    j: Optional[int],
    c: MembershipConstraint,
    limit: int,
    cap: Optional[int],
) -> Optional[FrozenSet[int]]:
    if j is not None and j < 1:
        raise InputError(f"j must be a positive integer or unbounded, got {j}")
    for v in c.include | c.exclude:
        if not 1 <= v <= g.n:
            raise InputError(f"constraint vertex {v} out of range 1..{g.n}")
    _check_size(g, c, cap)
    search = _Search(g, j, limit)
    chosen = sum(1 << v for v in c.include)
    out = sum(1 << v for v in c.exclude)
    search.run(chosen, out)
    logger.debug("oracle search: n=%d j=%s nodes=%d", g.n, j, search.nodes)
    if search.best is None:
        return None
    return frozenset(_bits(search.best))


def min_dom(
    g: Graph,
    j: Optional[int] = 2,
    c: MembershipConstraint = NO_CONSTRAINT,
    cap: Optional[int] = None,
) -> OracleResult:
    """
    Exact minimum [1,j]-dominating set under a membership constraint.

    Args:
        g: Any graph.
        j: Upper bound on dominators per outside vertex, None for plain domination.
        c: Membership constraint.
        cap: Vertex cap, defaults to the configured oracle caps.

    Returns:
        OracleResult with value UNDEFINED when no set satisfies the constraint.

    Raises:
        ResourceError: The graph exceeds the vertex cap.

    Examples:

    ```python
    min_dom(path3, 2)  #  OracleResult(value=1, witness=frozenset({2}), ...)
    ```
    """
    witness = _search(g, j, c, g.n + 1, cap)
    if witness is None:
        return OracleResult(UNDEFINED)
    return OracleResult(len(witness), witness)


def min_dom_bounded(
    g: Graph,
    j: Optional[int],
    budget: int,
    c: MembershipConstraint = NO_CONSTRAINT,
    cap: Optional[int] = None,
) -> OracleResult:
    """
    The minimum if it is at most `budget`, else UNDEFINED flagged `exceeds_budget`.
    """
    if budget < 0:
        raise InputError(f"budget must be non-negative, got {budget}")
    witness = _search(g, j, c, budget + 1, cap)
    if witness is None:
        return OracleResult(UNDEFINED, None, True)
    return OracleResult(len(witness), witness)


def gamma_oracle(
    g: IntervalGraph, key: GammaKey, cap: Optional[int] = None
) -> OracleResult:
    """
    Answer one gamma key by constrained search on G[1,i] with j=2.

    Raises:
        InputError: The key's indices are out of range.
    """
    validate_key(key, g.n)
    i, include, exclude = key_constraint(key)
    prefix = g if i == g.n else induced_prefix(g, i)
    return min_dom(prefix, 2, MembershipConstraint(include, exclude), cap=cap)


def gamma_j(g: Graph, j: Optional[int] = None, cap: Optional[int] = None) -> int:
    """
    The [1,j]-domination number (plain domination number when j is None).
    """
    return min_dom(g, j, cap=cap).value
