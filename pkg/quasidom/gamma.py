#!/usr/bin/env python3

"""
Keys, values and the memo table of the gamma recurrences.

Every key names a constrained minimum [1,2]-dominating set problem on the
prefix graph G[1,i]:

| kind        | indices     | in D              | not in D            |
|-------------|-------------|-------------------|---------------------|
| G0_PREFIX   | i           |                   | i                   |
| G0_RANGE    | j, i        |                   | [j, i]              |
| G0_SINGLE   | j, i, k     | k                 | [j, i] - {k}        |
| G1_PREFIX   | i           | i                 |                     |
| G1_TAIL     | j, i        | i                 | [j, i)              |
| G1_PAIR     | k, i, j     | i, j              | [k, i) - {j}        |
| G1_TRIPLE   | l, i, j, k  | i, j, k           | [l, i) - {j, k}     |
| G11_RUN     | l, i, j, k  | i, j, [l, k]      | (k, i) - {j}        |

Vertices below the window are free.  A run always has l < k; a run of one
vertex is a triple.

The exact recurrences also memoize `Frontier` states: everything from p up
is decided and only what the decided part still imposes on [1, p) is kept.
"""

import enum
from collections import namedtuple
from typing import FrozenSet, Iterable, Iterator, Optional, Tuple

from .internals import (
    UNDEFINED,
    InputError,
    ResourceError,
    StructureError,
    Value,
    is_finite,
    qd_context,
)


class GammaKind(enum.Enum):
    G0_PREFIX = "g0_prefix"
    G0_RANGE = "g0_range"
    G0_SINGLE = "g0_single"
    G1_PREFIX = "g1_prefix"
    G1_TAIL = "g1_tail"
    G1_PAIR = "g1_pair"
    G1_TRIPLE = "g1_triple"
    G11_RUN = "g11_run"


ARITY = {
    GammaKind.G0_PREFIX: 1,
    GammaKind.G0_RANGE: 2,
    GammaKind.G0_SINGLE: 3,
    GammaKind.G1_PREFIX: 1,
    GammaKind.G1_TAIL: 2,
    GammaKind.G1_PAIR: 3,
    GammaKind.G1_TRIPLE: 4,
    GammaKind.G11_RUN: 4,
}


class GammaKey(namedtuple("GammaKey", ["kind", "args"])):
    """
    One subproblem: a kind plus its indices in the order of the table above.
    """

    __slots__ = ()

    @property
    def prefix(self) -> int:
        """The i of G[1,i]; always the second index except for one-index kinds."""
        return self.args[0] if len(self.args) == 1 else self.args[1]

    def __str__(self) -> str:
        return f"{self.kind.value}({', '.join(str(x) for x in self.args)})"


def g0_prefix(i: int) -> GammaKey:
    return GammaKey(GammaKind.G0_PREFIX, (i,))


def g0_range(j: int, i: int) -> GammaKey:
    return GammaKey(GammaKind.G0_RANGE, (j, i))


def g0_single(j: int, i: int, k: int) -> GammaKey:
    return GammaKey(GammaKind.G0_SINGLE, (j, i, k))


def g1_prefix(i: int) -> GammaKey:
    return GammaKey(GammaKind.G1_PREFIX, (i,))


def g1_tail(j: int, i: int) -> GammaKey:
    return GammaKey(GammaKind.G1_TAIL, (j, i))


def g1_pair(k: int, i: int, j: int) -> GammaKey:
    return GammaKey(GammaKind.G1_PAIR, (k, i, j))


def g1_triple(l: int, i: int, j: int, k: int) -> GammaKey:
    return GammaKey(GammaKind.G1_TRIPLE, (l, i, j, k))


def g11_run(l: int, i: int, j: int, k: int) -> GammaKey:
    return GammaKey(GammaKind.G11_RUN, (l, i, j, k))


def validate_key(key: GammaKey, n: int) -> None:
    """
    Check index ranges against a graph on n vertices.

    Raises:
        InputError: The key is malformed.
    """
    if not isinstance(key.kind, GammaKind) or len(key.args) != ARITY[key.kind]:
        raise InputError(f"malformed gamma key {key!r}")
    i = key.prefix
    if not 1 <= i <= n:
        raise InputError(f"{key}: i={i} out of range 1..{n}")
    a = key.args
    kind = key.kind
    if kind is GammaKind.G0_RANGE:
        ok = 1 <= a[0] <= i
    elif kind is GammaKind.G0_SINGLE:
        ok = 1 <= a[0] <= a[2] < i
    elif kind is GammaKind.G1_TAIL:
        ok = 1 <= a[0] < i
    elif kind is GammaKind.G1_PAIR:
        ok = 1 <= a[0] <= a[2] < i
    elif kind is GammaKind.G1_TRIPLE:
        ok = 1 <= a[0] <= a[3] < a[2] < i
    elif kind is GammaKind.G11_RUN:
        ok = 1 <= a[0] < a[3] < a[2] < i
    else:
        ok = True
    if not ok:
        raise InputError(f"{key}: indices out of range")


def key_constraint(key: GammaKey) -> Tuple[int, FrozenSet[int], FrozenSet[int]]:
    """
    Translate a key into (i, must include, must exclude) on G[1,i].
    """
    a = key.args
    kind = key.kind
    if kind is GammaKind.G0_PREFIX:
        (i,) = a
        return i, frozenset(), frozenset({i})
    if kind is GammaKind.G0_RANGE:
        j, i = a
        return i, frozenset(), frozenset(range(j, i + 1))
    if kind is GammaKind.G0_SINGLE:
        j, i, k = a
        return i, frozenset({k}), frozenset(range(j, i + 1)) - {k}
    if kind is GammaKind.G1_PREFIX:
        (i,) = a
        return i, frozenset({i}), frozenset()
    if kind is GammaKind.G1_TAIL:
        j, i = a
        return i, frozenset({i}), frozenset(range(j, i))
    if kind is GammaKind.G1_PAIR:
        k, i, j = a
        return i, frozenset({i, j}), frozenset(range(k, i)) - {j}
    if kind is GammaKind.G1_TRIPLE:
        l, i, j, k = a
        return i, frozenset({i, j, k}), frozenset(range(l, i)) - {j, k}
    if kind is GammaKind.G11_RUN:
        l, i, j, k = a
        members = frozenset(range(l, k + 1)) | {i, j}
        return i, members, frozenset(range(k + 1, i)) - {j}
    raise InputError(f"malformed gamma key {key!r}")


def iter_keys(n: int, i: Optional[int] = None) -> Iterator[GammaKey]:
    """
    Every valid key on a graph with n vertices (or only those on prefix i).
    """
    prefixes = range(1, n + 1) if i is None else (i,)
    for i in prefixes:
        yield g0_prefix(i)
        yield g1_prefix(i)
        for j in range(1, i + 1):
            yield g0_range(j, i)
        for j in range(1, i):
            yield g1_tail(j, i)
            for k in range(j, i):
                yield g0_single(j, i, k)
        for j in range(1, i):
            for k in range(1, j + 1):
                yield g1_pair(k, i, j)
        for j in range(1, i):
            for k in range(1, j):
                for l in range(1, k + 1):
                    yield g1_triple(l, i, j, k)
                for l in range(1, k):
                    yield g11_run(l, i, j, k)


class Choice(namedtuple("Choice", ["case", "children", "add", "witness"])):
    """
    The branch that produced a value.

    `case` names the recurrence case taken.  The witness of the key is the union
    of the children's witnesses plus `add`, unless `witness` is given directly
    (base cases and corrected entries).
    """

    __slots__ = ()

    def __new__(cls, case: str, children=(), add=(), witness=None):
        return super().__new__(
            cls,
            case,
            tuple(children),
            frozenset(add),
            None if witness is None else frozenset(witness),
        )


GammaValue = namedtuple("GammaValue", ["value", "choice"])

Deviation = namedtuple("Deviation", ["key", "case", "got", "exact"])


class Frontier(namedtuple("Frontier", ["p", "lows", "r0", "r1"])):
    """
    What a decided suffix imposes on the undecided vertices [1, p).

    - `lows`: the three smallest low values among the chosen vertices >= p.  An
      undecided v already has one chosen neighbor per entry <= v.
    - `r0`: nothing in [r0, p) may be chosen.
    - `r1`: at most one vertex of [r1, p) may be chosen.

    Any bound equal to p is inactive.  Build instances with `Frontier.make`, which
    puts every bound in that normal form so equal states share one memo entry.
    """

    __slots__ = ()

    @classmethod
    def make(cls, p: int, lows: Iterable[int], r0: int, r1: int) -> "Frontier":
        ts = sorted(min(t, p) for t in lows)[:3]
        ts += [p] * (3 - len(ts))
        r0 = min(r0, p)
        r1 = min(r1, p)
        if r1 >= r0:
            r1 = p
        return cls(p, tuple(ts), r0, r1)

    def boost(self, v: int) -> int:
        """Chosen neighbors of v (< p) among the decided vertices, capped at 3."""
        return sum(1 for t in self.lows if t <= v)

    def __str__(self) -> str:
        lows = ",".join(str(t) for t in self.lows)
        return f"frontier({self.p}; {lows}; {self.r0},{self.r1})"


class Best:
    """Running minimum over recurrence terms; the first of equal terms wins."""

    def __init__(self) -> None:
        self.value = UNDEFINED
        self.choice = None

    def offer(self, value: Value, choice: Choice) -> None:
        if is_finite(value) and (self.value is UNDEFINED or value < self.value):
            self.value = value
            self.choice = choice

    def result(self, case: str) -> GammaValue:
        if self.choice is None:
            return GammaValue(UNDEFINED, Choice(case))
        return GammaValue(self.value, self.choice)


def undefined(case: str) -> GammaValue:
    return GammaValue(UNDEFINED, Choice(case))


class MemoStore:
    """
    Write-once map from GammaKey to GammaValue, with counters.

    Args:
        cap: Maximum number of entries, defaults to the configured memo cap.
    """

    def __init__(self, cap: Optional[int] = None) -> None:
        self.cap = qd_context.memo_cap if cap is None else cap
        self._table = {}
        self.computed = 0
        self.hits = 0

    def __contains__(self, key: GammaKey) -> bool:
        return key in self._table

    def __len__(self) -> int:
        return len(self._table)

    def get(self, key: GammaKey) -> Optional[GammaValue]:
        entry = self._table.get(key)
        if entry is not None:
            self.hits += 1
        return entry

    def peek(self, key: GammaKey) -> Optional[GammaValue]:
        """Like get, without counting a hit."""
        return self._table.get(key)

    def put(self, key: GammaKey, value: GammaValue) -> GammaValue:
        """
        Store a value.

        Raises:
            StructureError: The key already holds a different value.
            ResourceError: The memo cap would be exceeded.
        """
        existing = self._table.get(key)
        if existing is not None:
            if existing.value != value.value:
                raise StructureError(
                    f"memo entry {key} rewritten: {existing.value} -> {value.value}"
                )
            return existing
        if len(self._table) >= self.cap:
            raise ResourceError(
                f"memo table reached its cap of {self.cap} entries "
                "(set QUASIDOM_MEMO_CAP to raise it)"
            )
        self._table[key] = value
        self.computed += 1
        return value

    @property
    def peak(self) -> int:
        #  entries are never evicted, so the current size is the peak
        return len(self._table)

    def stats(self) -> dict:
        return {"entries": self.computed, "peak": self.peak, "hits": self.hits}
