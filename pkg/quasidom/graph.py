#!/usr/bin/env python3

"""
Graph models: interval graphs in right-endpoint order, chord diagrams, and the
neighborhood tables the dynamic program runs on.

Vertex ids are 1-based everywhere.  An interval graph built here is numbered by
increasing right endpoint (ties: left endpoint, then input order), which gives
the ordering property: if i < j < k and ik is an edge then jk is an edge.
"""

import logging
from collections import namedtuple
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .internals import InputError, StructureError

logger = logging.getLogger(__name__)

INF = float("inf")

Interval = namedtuple("Interval", ["id", "left", "right"])
Chord = namedtuple("Chord", ["label", "p", "q"])
DominationCertificate = namedtuple(
    "DominationCertificate", ["vertices", "j", "valid", "violations"]
)

Number = Union[int, float, Fraction]
PathLike = Union[str, Path]


class Graph:
    """
    A simple undirected graph on vertices 1..n.

    Args:
        n: Vertex count.
        edges: Iterable of (u, v) pairs, 1-based.
    """

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = ()) -> None:
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        adj = [set() for _ in range(n + 1)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise InputError(f"self loop on vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(x) for x in adj)
        #  bit v of masks[u] is set iff uv is an edge
        self.masks = tuple(sum(1 << v for v in x) for x in self.adj)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset:
        return self.adj[v] | {v}

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in self.vertices for v in sorted(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(len(x) for x in self.adj) // 2

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges())
        return g

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, edges={self.edges()})"


class IntervalGraph(Graph):
    """
    A graph whose vertex numbering satisfies the right-endpoint ordering property.

    `source` holds the numbered intervals when the graph was built from geometry.
    """

    def __init__(
        self,
        n: int,
        edges: Iterable[Tuple[int, int]] = (),
        source: Optional[Tuple[Interval, ...]] = None,
    ) -> None:
        super().__init__(n, edges)
        self.source = source

    @classmethod
    def from_intervals(
        cls,
        intervals: Sequence[Tuple[Number, Number]],
        linenos: Optional[Sequence[int]] = None,
    ) -> "IntervalGraph":
        """
        Build the intersection graph of closed intervals, renumbered by right endpoint.

        Args:
            intervals: (left, right) pairs.
            linenos: Optional source line numbers, used in error messages.

        Returns:
            The interval graph with `source` set to the numbered intervals.

        Raises:
            InputError: An interval has left >= right, or the list is empty.

        Examples:

        ```python
        g = IntervalGraph.from_intervals([(1, 3), (2, 5), (4, 6)])
        g.edges()  #  [(1, 2), (2, 3)]
        ```
        """
        if not intervals:
            raise InputError("no intervals given")
        for index, (left, right) in enumerate(intervals):
            if not left < right:
                where = linenos[index] if linenos else index + 1
                raise InputError(
                    f"degenerate interval [{left}, {right}] (left must be < right)",
                    lineno=where,
                )
        order = sorted(
            range(len(intervals)),
            key=lambda x: (intervals[x][1], intervals[x][0], x),
        )
        numbered = tuple(
            Interval(vid, intervals[orig][0], intervals[orig][1])
            for vid, orig in enumerate(order, start=1)
        )
        edges = []
        for a in numbered:
            for b in numbered[a.id :]:
                #  closed intervals; touching endpoints intersect
                if a.left <= b.right and b.left <= a.right:
                    edges.append((a.id, b.id))
        g = cls(len(numbered), edges, source=numbered)
        if __debug__ and not verify_numbering(g):
            raise StructureError("interval numbering lost the ordering property")
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "IntervalGraph":
        """
        Wrap an edge list that is asserted to be in ordering-property numbering.

        The property is checked by `build_index`, not here.
        """
        return cls(n, edges)

    def induced_prefix(self, i: int) -> "IntervalGraph":
        return induced_prefix(self, i)


def verify_numbering(g: Graph) -> bool:
    """
    Check the ordering property: for all i < j < k, ik in E implies jk in E.

    Equivalent to every vertex's lower neighbors forming a contiguous run ending
    just below it, which is what is tested.
    """
    for k in g.vertices:
        lower = [x for x in g.adj[k] if x < k]
        if lower and min(lower) != k - len(lower):
            return False
    return True


def induced_prefix(g: IntervalGraph, i: int) -> IntervalGraph:
    """
    The subgraph induced by vertices 1..i.

    Raises:
        InputError: `i` is outside 1..n.
    """
    if not 1 <= i <= g.n:
        raise InputError(f"prefix end {i} out of range 1..{g.n}")
    edges = [(u, v) for u, v in g.edges() if v <= i]
    source = g.source[:i] if g.source is not None else None
    return IntervalGraph(i, edges, source=source)


class NeighborhoodIndex:
    """
    The low, low-range and maxlow tables of a numbered interval graph.

    `low(a)` is the smallest vertex of N[a]; `low_range(a, b)` is the minimum of
    low over [a, b] (infinite when a > b); `maxlow(a)` is the maximum of low over
    [low(a), a].
    """

    def __init__(self, g: IntervalGraph) -> None:
        n = g.n
        self.n = n
        low = [0] * (n + 1)
        for v in g.vertices:
            low[v] = min(g.adj[v] | {v})
        self._low = low
        #  _range[a][b - a] == low_range(a, b)
        table = [()] * (n + 1)
        for a in g.vertices:
            row = []
            cur = low[a]
            for b in range(a, n + 1):
                cur = min(cur, low[b])
                row.append(cur)
            table[a] = tuple(row)
        self._range = tuple(table)
        self._maxlow = [0] + [max(low[low[a] : a + 1]) for a in range(1, n + 1)]

    def low(self, a: int) -> int:
        return self._low[a]

    def low_range(self, a: int, b: int) -> Union[int, float]:
        if a > b:
            return INF
        return self._range[a][b - a]

    def maxlow(self, a: int) -> int:
        return self._maxlow[a]

    @property
    def lows(self) -> List[int]:
        return self._low[1:]

    @property
    def maxlows(self) -> List[int]:
        return self._maxlow[1:]


def build_index(g: IntervalGraph) -> NeighborhoodIndex:
    """
    Build the neighborhood tables.

    Raises:
        StructureError: The numbering does not satisfy the ordering property.
    """
    if not verify_numbering(g):
        raise StructureError(
            "vertex numbering violates the ordering property (i<j<k, ik in E => jk in E)"
        )
    return NeighborhoodIndex(g)


def is_1j_dominating(
    g: Graph, s: Iterable[int], j: Optional[int] = None
) -> DominationCertificate:
    """
    Check that every vertex outside `s` has between 1 and `j` neighbors in `s`.

    Args:
        g: Any graph.
        s: Candidate vertex set.
        j: Upper bound on neighbors in `s`, None for plain domination.

    Returns:
        A certificate listing every violating (vertex, count) pair.

    Raises:
        InputError: A vertex of `s` is out of range.
    """
    members = frozenset(s)
    for v in members:
        if not 1 <= v <= g.n:
            raise InputError(f"vertex {v} out of range 1..{g.n}")
    violations = []
    for v in g.vertices:
        if v in members:
            continue
        count = len(g.adj[v] & members)
        if count < 1 or (j is not None and count > j):
            violations.append((v, count))
    return DominationCertificate(members, j, not violations, violations)


def has_induced_claw(g: Graph) -> bool:
    """True if some vertex has three pairwise non-adjacent neighbors."""
    ng = g.to_networkx()
    for v in ng.nodes:
        around = nx.complement(ng.subgraph(ng.adj[v]))
        if any(nx.triangles(around).values()):
            return True
    return False


class ChordDiagram:
    """
    Chords on 2N circle positions; chords cross iff their endpoints interleave.

    Raises:
        InputError: Positions are repeated or outside 0..2N-1.
    """

    def __init__(self, chords: Iterable[Tuple[str, int, int]]) -> None:
        self.chords = tuple(Chord(label, min(p, q), max(p, q)) for label, p, q in chords)
        size = 2 * len(self.chords)
        seen = set()
        for chord in self.chords:
            for pos in (chord.p, chord.q):
                if not 0 <= pos < size:
                    raise InputError(
                        f"chord {chord.label!r} position {pos} outside 0..{size - 1}"
                    )
                if pos in seen:
                    raise InputError(f"duplicate chord position {pos}")
                seen.add(pos)

    def __len__(self) -> int:
        return len(self.chords)

    def crosses(self, a: Chord, b: Chord) -> bool:
        return (a.p < b.p < a.q) != (a.p < b.q < a.q)


def chords_to_graph(d: ChordDiagram) -> Graph:
    """
    The intersection graph of a chord diagram; chord i is vertex i + 1.

    The crossing relation is cross-checked against overlap-without-containment of
    the chords read as intervals [p, q].

    Raises:
        StructureError: The two derivations disagree.
    """
    edges = []
    chords = d.chords
    for x, a in enumerate(chords):
        for y in range(x + 1, len(chords)):
            b = chords[y]
            crossing = d.crosses(a, b)
            overlap = a.p < b.q and b.p < a.q
            contained = (a.p < b.p and b.q < a.q) or (b.p < a.p and a.q < b.q)
            if crossing != (overlap and not contained):
                raise StructureError(
                    f"chords {a.label!r} and {b.label!r}: crossing and overlap models disagree"
                )
            if crossing:
                edges.append((x + 1, y + 1))
    return Graph(len(chords), edges)


def content_lines(lines: Iterable[str]):
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def read_lines(source: Union[PathLike, Iterable[str]]) -> List[str]:
    if isinstance(source, (str, Path)):
        try:
            return Path(source).read_text().splitlines()
        except OSError as e:
            raise InputError(f"unable to read {source}: {e.strerror}")
    return list(source)


def parse_number(token: str, lineno: Optional[int] = None) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a number: {token!r}", lineno=lineno)


def format_number(x: Number) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    as_float = repr(float(x))
    if Fraction(as_float) == x:
        return as_float
    return str(x)


def read_intervals(source: Union[PathLike, Iterable[str]]) -> IntervalGraph:
    """
    Read `left right` lines (`#` comments, blank lines ignored).

    Raises:
        InputError: A line does not hold two numbers, or an interval is degenerate.
    """
    pairs = []
    linenos = []
    for lineno, line in content_lines(read_lines(source)):
        fields = line.split()
        if len(fields) != 2:
            raise InputError(f"expected 'left right', got {line!r}", lineno=lineno)
        pairs.append((parse_number(fields[0], lineno), parse_number(fields[1], lineno)))
        linenos.append(lineno)
    if not pairs:
        raise InputError("no intervals in input")
    return IntervalGraph.from_intervals(pairs, linenos=linenos)


def write_intervals(intervals: Iterable[Tuple[Number, Number]]) -> str:
    lines = [f"{format_number(left)} {format_number(right)}" for left, right in intervals]
    return "\n".join(lines) + "\n"


def read_edge_list(source: Union[PathLike, Iterable[str]]) -> IntervalGraph:
    """
    Read a `p edge <n> <m>` header followed by `e <u> <v>` lines.

    Lines starting with `c` are DIMACS comments.  The numbering property is not
    checked here.
    """
    n = None
    m = None
    edges = []
    for lineno, line in content_lines(read_lines(source)):
        fields = line.split()
        if fields[0] == "c":
            continue
        if fields[0] == "p":
            if len(fields) != 4 or fields[1] != "edge" or n is not None:
                raise InputError(f"bad header {line!r}", lineno=lineno)
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise InputError(f"bad header {line!r}", lineno=lineno)
            continue
        if fields[0] == "e":
            if n is None:
                raise InputError("edge before 'p edge' header", lineno=lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except (ValueError, IndexError):
                raise InputError(f"bad edge line {line!r}", lineno=lineno)
            if len(fields) != 3 or not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise InputError(f"bad edge line {line!r}", lineno=lineno)
            edges.append((u, v))
            continue
        raise InputError(f"unrecognized line {line!r}", lineno=lineno)
    if n is None:
        raise InputError("missing 'p edge <n> <m>' header")
    if n < 1:
        raise InputError("graph must have at least one vertex")
    if m != len(edges):
        raise InputError(f"header declares {m} edges, found {len(edges)}")
    return IntervalGraph.from_edges(n, edges)


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"p edge {g.n} {len(edges)}"] + [f"e {u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def read_chord_diagram(source: Union[PathLike, Iterable[str]]) -> ChordDiagram:
    """
    Read a `c <N>` header followed by `h <label> <p> <q>` lines.
    """
    count = None
    chords = []
    for lineno, line in content_lines(read_lines(source)):
        fields = line.split()
        if fields[0] == "c":
            if len(fields) != 2 or count is not None:
                raise InputError(f"bad header {line!r}", lineno=lineno)
            try:
                count = int(fields[1])
            except ValueError:
                raise InputError(f"bad header {line!r}", lineno=lineno)
        elif fields[0] == "h":
            if count is None:
                raise InputError("chord before 'c <N>' header", lineno=lineno)
            if len(fields) != 4:
                raise InputError(f"bad chord line {line!r}", lineno=lineno)
            try:
                chords.append((fields[1], int(fields[2]), int(fields[3])))
            except ValueError:
                raise InputError(f"bad chord line {line!r}", lineno=lineno)
        else:
            raise InputError(f"unrecognized line {line!r}", lineno=lineno)
    if count is None:
        raise InputError("missing 'c <N>' header")
    if count != len(chords):
        raise InputError(f"header declares {count} chords, found {len(chords)}")
    return ChordDiagram(chords)


def write_chord_diagram(d: ChordDiagram, header: Iterable[str] = ()) -> str:
    lines = [f"# {x}" for x in header]
    lines.append(f"c {len(d)}")
    lines.extend(f"h {c.label} {c.p} {c.q}" for c in d.chords)
    return "\n".join(lines) + "\n"
