#!/usr/bin/env python3

"""
3-SAT to [1,2]-domination on circle graphs.

Every clause becomes a fixed block of 34 chords; every pair of consecutive
occurrences of a variable becomes a "link" of two connection chords, each held
in place by a claw (an anchor chord `s` crossed by three leaves).  With
m clauses and t links the target is k = 7m + 2t.

Inside a clause block, for literal l = 1, 2, 3:

- `t<l>` (true) and `f<l>` (false) cross each other and the pair `p<l>x`,
  `p<l>y`, which crosses nothing else, so one of t/f is in any small set.
- the pair `a<l>x`, `a<l>y` crosses `t<l>`; `u13` meets only the a1 pair,
  `u12` the a1 and a2 pairs, `u23` the a2 and a3 pairs, `w13` only the a3 pair.
- `w12` and `w23` cross each other, `u13`, the a2 pair and `w13`.
- `g1` crosses the claw center `c1`, `u12`, `u13` and `u23`; `g2` crosses the
  claw center `c2`, `u12`, `u23` and `w13`.

Left to right a block holds the c1 claw, literal 1, the u/w chords, literal 3,
the c2 claw and literal 2.

Connection chords start in the truth (T) or false (F) slot of one occurrence
and end in a slot of the next one: `tf`/`ft` for equal signs, `tt`/`ff` for
opposite signs.  A chord at a T slot crosses that literal's t chord, one at an
F slot its f chord.  At positions 1 and 3 it also passes over the chords in
`SLOT_PASS_OVER`, which no recipe set contains.

Chord ids follow the order of first endpoints, starting at 1.
"""

import itertools
import logging
from collections import defaultdict, namedtuple
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

from .graph import (
    ChordDiagram,
    Graph,
    chords_to_graph,
    content_lines,
    is_1j_dominating,
    read_lines,
    write_chord_diagram,
)
from .internals import (
    DecodeError,
    DomainAssumptionError,
    InputError,
    ResourceError,
    StructureError,
    qd_context,
)
from .oracle import min_dom_bounded

logger = logging.getLogger(__name__)

SAT_BRUTE_CAP = 20
CHORDS_PER_CLAUSE = 34
CHORDS_PER_LINK = 10

CnfFormula = namedtuple("CnfFormula", ["num_vars", "clauses"])
CnfFormula.__doc__ = """
A 3-CNF formula.  Clauses are triples of DIMACS literals: +v for variable v, -v for its negation.
"""

Link = namedtuple("Link", ["index", "var", "left", "right", "kinds"])
Link.__doc__ = """
Consecutive occurrences of `var` at `left` and `right`, each a (clause, position) pair.
"""


class Assignment(namedtuple("Assignment", ["values"])):
    """
    A truth assignment; `values[v - 1]` is the value of variable v.
    """

    __slots__ = ()

    def value(self, var: int) -> bool:
        return self.values[var - 1]

    def satisfies(self, f: CnfFormula) -> bool:
        return all(
            any(self.value(abs(lit)) == (lit > 0) for lit in clause) for clause in f.clauses
        )

    def as_dict(self) -> Dict[int, bool]:
        return {v: x for v, x in enumerate(self.values, start=1)}


#  One clause block: `name(` opens a chord, `)name` closes it, `[T1]` is a slot.
CLAUSE_EVENTS = """
c1.leaf1( c1.leaf2( c1.leaf3( c1( )c1.leaf3 )c1.leaf2 )c1.leaf1 g1( )c1
f1( [F1] p1x( p1y( t1( )f1 )p1y )p1x [T1] a1x( a1y( )t1
u13( u12( )a1y )a1x u23( )g1 w12( w23( )u13 a2x( a2y(
w13( )w12 )w23 g2( )u12 a3x( a3y( )w13 )u23
t3( )a3y )a3x [T3] p3x( p3y( f3( )t3 )p3y )p3x [F3] )f3
c2( )g2 c2.leaf1( c2.leaf2( c2.leaf3( )c2 )c2.leaf3 )c2.leaf2 )c2.leaf1
t2( )a2y )a2x [T2] p2x( p2y( f2( )t2 )p2y )p2x [F2] )f2
""".split()

CLAUSE_ROLES = tuple(x[:-1] for x in CLAUSE_EVENTS if x.endswith("("))

#  clause chords a connection chord at each position's slots also crosses
SLOT_PASS_OVER = {1: ("g1",), 2: (), 3: ("g2", "a2x", "a2y")}

A_CHORDS = tuple(f"a{l}{x}" for l in "123" for x in "xy")
UW_CHORDS = ("u12", "u13", "u23", "w12", "w13", "w23")


def _pair(name: str) -> Tuple[str, str]:
    return (f"{name}x", f"{name}y")


def _clause_contract() -> tuple:
    rules = []
    for l in "123":
        for p in _pair(f"p{l}"):
            rules.append((p, None, (f"t{l}", f"f{l}")))
        rules.append((f"t{l}", None, (f"f{l}",) + _pair(f"a{l}") + _pair(f"p{l}")))
        rules.append((f"f{l}", None, (f"t{l}",) + _pair(f"p{l}")))
    for chord, positions in (
        ("u12", "12"),
        ("u13", "1"),
        ("u23", "23"),
        ("w12", "2"),
        ("w13", "3"),
        ("w23", "2"),
    ):
        rules.append((chord, A_CHORDS, tuple(a for l in positions for a in _pair(f"a{l}"))))
    rules.append(("w12", UW_CHORDS, ("u13", "w13", "w23")))
    rules.append(("w23", UW_CHORDS, ("u13", "w12", "w13")))
    rules.append(("g1", None, ("c1", "u12", "u13", "u23")))
    rules.append(("g2", None, ("c2", "u12", "u23", "w13")))
    return tuple(rules)


#  (chord, scope, neighbors): among `scope` (None: the whole block) the chord
#  crosses exactly `neighbors`.  Pairs no rule mentions are free.
CLAUSE_CONTRACT = _clause_contract()

#  the two chords of a pair cross the same chords and not each other
CLAUSE_PAIRS = tuple(_pair(f"{kind}{l}") for kind in "ap" for l in "123")

GADGET_HEADER = """\
quasidom circle gadget
clauses {{ m }} links {{ t }} chords {{ chords }}
k {{ k }}"""

LABELS_TEMPLATE = """\
# chord labels for {{ diagram }} (k {{ k }})
{% for label, cid in labels %}
label {{ cid }} {{ label }}
{% endfor %}
"""


def validate_formula(f: CnfFormula) -> None:
    """
    Raises:
        InputError: A clause is not three literals over 1..num_vars.
        DomainAssumptionError: A clause repeats a variable.
    """
    if f.num_vars < 0:
        raise InputError(f"variable count must be non-negative, got {f.num_vars}")
    for j, clause in enumerate(f.clauses, start=1):
        if len(clause) != 3:
            raise InputError(f"clause {j} has {len(clause)} literals, expected 3")
        for lit in clause:
            if lit == 0 or abs(lit) > f.num_vars:
                raise InputError(f"clause {j}: literal {lit} outside 1..{f.num_vars}")
        if len({abs(lit) for lit in clause}) != 3:
            raise DomainAssumptionError(
                f"clause {j} repeats a variable; the construction assumes every "
                "variable appears at most once in each clause"
            )


def parse_dimacs_cnf(source: Union[str, Path, Iterable[str]]) -> CnfFormula:
    """
    Read DIMACS cnf: `c` comments, a `p cnf <vars> <clauses>` header, then
    clauses of three nonzero literals each terminated by 0.

    Raises:
        InputError: Malformed input (with the line number).
        DomainAssumptionError: A clause repeats a variable.
    """
    header = None
    clauses = []
    current = []
    last = 0
    for lineno, line in content_lines(read_lines(source)):
        last = lineno
        fields = line.split()
        if fields[0] == "c":
            continue
        if fields[0] == "%":
            break
        if fields[0] == "p":
            if header is not None or len(fields) != 4 or fields[1] != "cnf":
                raise InputError(f"bad problem line {line!r}", lineno=lineno)
            try:
                header = (int(fields[2]), int(fields[3]))
            except ValueError:
                raise InputError(f"bad problem line {line!r}", lineno=lineno)
            continue
        if header is None:
            raise InputError("clause before 'p cnf' header", lineno=lineno)
        for token in fields:
            try:
                lit = int(token)
            except ValueError:
                raise InputError(f"not a literal: {token!r}", lineno=lineno)
            if lit == 0:
                if len(current) != 3:
                    raise InputError(
                        f"clause has {len(current)} literals, expected 3", lineno=lineno
                    )
                if len({abs(x) for x in current}) != 3:
                    raise DomainAssumptionError(
                        f"line {lineno}: clause repeats a variable; the construction "
                        "assumes every variable appears at most once in each clause"
                    )
                clauses.append(tuple(current))
                current = []
            else:
                if abs(lit) > header[0]:
                    raise InputError(f"literal {lit} outside 1..{header[0]}", lineno=lineno)
                current.append(lit)
    if header is None:
        raise InputError("missing 'p cnf' header")
    if current:
        raise InputError("last clause is not terminated by 0", lineno=last)
    if len(clauses) != header[1]:
        raise InputError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


def write_dimacs_cnf(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    lines.extend(" ".join(str(x) for x in clause) + " 0" for clause in f.clauses)
    return "\n".join(lines) + "\n"


def find_links(f: CnfFormula) -> List[Link]:
    """
    Chain consecutive occurrences of every variable.

    Equal signs are linked by a `tf` and an `ft` chord, opposite signs by `tt`
    and `ff`.
    """
    occurrences = defaultdict(list)
    for j, clause in enumerate(f.clauses, start=1):
        for position, lit in enumerate(clause, start=1):
            occurrences[abs(lit)].append((j, position, lit < 0))
    links = []
    for var in sorted(occurrences):
        chain = occurrences[var]
        for (j1, l1, neg1), (j2, l2, neg2) in zip(chain, chain[1:]):
            kinds = ("tf", "ft") if neg1 == neg2 else ("tt", "ff")
            links.append(Link(len(links) + 1, var, (j1, l1), (j2, l2), kinds))
    return links


def target_k(f: CnfFormula) -> int:
    """k = 7m + 2t, t the number of links."""
    return 7 * len(f.clauses) + 2 * len(find_links(f))


class GadgetInstance:
    """
    A built gadget: the diagram, the target k and the label -> chord id map.

    Clause chords are labelled `C<j>.<role>` (e.g. `C1.t2`, `C1.c1.leaf1`),
    link chords `L<n>.<kind>` with anchor `L<n>.<kind>.s` and leaves
    `L<n>.<kind>.s.leaf<x>`.
    """

    def __init__(
        self,
        formula: CnfFormula,
        diagram: ChordDiagram,
        labels: Dict[str, int],
        links: List[Link],
    ) -> None:
        self.formula = formula
        self.diagram = diagram
        self.labels = labels
        self.links = links
        self.m = len(formula.clauses)
        self.t = len(links)
        self.k = 7 * self.m + 2 * self.t
        self._graph = None

    @property
    def graph(self) -> Graph:
        """The intersection graph; vertex ids are chord ids."""
        if self._graph is None:
            self._graph = chords_to_graph(self.diagram)
        return self._graph

    def chord(self, label: str) -> int:
        try:
            return self.labels[label]
        except KeyError:
            raise InputError(f"no chord labelled {label!r}")

    def label_of(self, chord_id: int) -> str:
        return self.diagram.chords[chord_id - 1].label

    def literal_chords(self, clause: int, position: int) -> Tuple[int, int]:
        """(t chord id, f chord id) of one literal."""
        return (
            self.chord(f"C{clause}.t{position}"),
            self.chord(f"C{clause}.f{position}"),
        )

    def anchors(self) -> List[int]:
        """Chord ids of every claw center (c1, c2 of each clause, every link anchor)."""
        ids = []
        for j in range(1, self.m + 1):
            ids += [self.chord(f"C{j}.c1"), self.chord(f"C{j}.c2")]
        for link in self.links:
            ids += [self.chord(f"L{link.index}.{kind}.s") for kind in link.kinds]
        return ids


def _anchor_block(name: str) -> List[Tuple[str, bool]]:
    leaves = [f"{name}.s.leaf{x}" for x in (1, 2, 3)]
    return (
        [(x, True) for x in leaves]
        + [(f"{name}.s", True)]
        + [(x, False) for x in reversed(leaves)]
        + [(name, True), (f"{name}.s", False)]
    )


def build_gadget(f: CnfFormula) -> GadgetInstance:
    """
    Build the circle gadget of a formula.

    Raises:
        InputError: Malformed formula.
        DomainAssumptionError: A clause repeats a variable.

    Examples:

    ```python
    inst = build_gadget(CnfFormula(3, ((1, 2, 3),)))
    len(inst.diagram), inst.k  #  (34, 7)
    ```
    """
    validate_formula(f)
    links = find_links(f)
    incoming = defaultdict(list)
    outgoing = defaultdict(list)
    for link in links:
        for kind in link.kinds:
            name = f"L{link.index}.{kind}"
            outgoing[(link.left, kind[0].upper())].append(name)
            incoming[(link.right, kind[1].upper())].append(name)

    events = []
    for j in range(1, len(f.clauses) + 1):
        for token in CLAUSE_EVENTS:
            if token.startswith("["):
                slot = ((j, int(token[2])), token[1])
                #  chords ending here close before new ones start
                events.extend((name, False) for name in incoming[slot])
                for name in outgoing[slot]:
                    events.extend(_anchor_block(name))
            elif token.endswith("("):
                events.append((f"C{j}.{token[:-1]}", True))
            else:
                events.append((f"C{j}.{token[1:]}", False))

    opened = {}
    chords = []
    for pos, (label, opening) in enumerate(events):
        if opening:
            if label in opened:
                raise StructureError(f"chord {label} opened twice")
            opened[label] = pos
        else:
            if label not in opened:
                raise StructureError(f"chord {label} closed before it opened")
            chords.append((label, opened[label], pos))
    if len(chords) != len(opened):
        raise StructureError("a chord was never closed")
    chords.sort(key=lambda chord: chord[1])
    diagram = ChordDiagram(chords)
    labels = {label: cid for cid, (label, _, _) in enumerate(chords, start=1)}
    inst = GadgetInstance(f, diagram, labels, links)
    logger.debug("gadget: m=%d t=%d chords=%d k=%d", inst.m, inst.t, len(diagram), inst.k)
    return inst


def check_adjacency_contract(inst: GadgetInstance) -> List[str]:
    """
    Check the gadget against its contract on the derived intersection graph.

    Every clause block must meet `CLAUSE_CONTRACT`, `CLAUSE_PAIRS` and its two
    claws.  Every connection chord must cross its anchor's claw, the right t/f
    chord at both ends, and no other clause chord outside `SLOT_PASS_OVER`.

    Returns:
        Human readable violations; empty when the gadget is sound.
    """
    problems = []
    expected = CHORDS_PER_CLAUSE * inst.m + CHORDS_PER_LINK * inst.t
    if len(inst.diagram) != expected:
        problems.append(f"{len(inst.diagram)} chords, expected {expected}")
    if inst.k != 7 * inst.m + 2 * inst.t:
        problems.append(f"k is {inst.k}, expected {7 * inst.m + 2 * inst.t}")
    try:
        g = inst.graph
    except StructureError as exc:
        return problems + [str(exc)]

    clause_chords = set()
    for j in range(1, inst.m + 1):
        ids = {role: inst.chord(f"C{j}.{role}") for role in CLAUSE_ROLES}
        role_of = {cid: role for role, cid in ids.items()}
        clause_chords |= set(role_of)

        def crossed(role: str) -> set:
            return {role_of[x] for x in g.adj[ids[role]] if x in role_of}

        for role, scope, want in CLAUSE_CONTRACT:
            got = crossed(role)
            if scope is not None:
                got &= set(scope)
            for other in sorted(set(want) - got):
                problems.append(f"clause {j}: {role} should cross {other}")
            for other in sorted(got - set(want)):
                problems.append(f"clause {j}: {role} should not cross {other}")
        for x, y in CLAUSE_PAIRS:
            if g.has_edge(ids[x], ids[y]) or crossed(x) != crossed(y):
                problems.append(f"clause {j}: {x} and {y} are not a pair")
        for center, guard in (("c1", "g1"), ("c2", "g2")):
            problems += _check_claw(
                g, inst, f"C{j}.{center}", f"C{j}.{center}.leaf", f"C{j}.{guard}"
            )

    for link in inst.links:
        for kind in link.kinds:
            name = f"L{link.index}.{kind}"
            x = inst.chord(name)
            allowed = set()
            for (clause, position), side in ((link.left, kind[0]), (link.right, kind[1])):
                t_id, f_id = inst.literal_chords(clause, position)
                want = t_id if side == "t" else f_id
                if not g.has_edge(x, want):
                    problems.append(f"{name} does not cross {inst.label_of(want)}")
                allowed.add(want)
                allowed |= {inst.chord(f"C{clause}.{r}") for r in SLOT_PASS_OVER[position]}
            for y in sorted(g.adj[x]):
                if y in clause_chords and y not in allowed:
                    problems.append(f"{name} crosses {inst.label_of(y)}")
            problems += _check_claw(g, inst, f"{name}.s", f"{name}.s.leaf", name)
    return problems


def _check_claw(g: Graph, inst: GadgetInstance, center: str, leaf: str, guard: str) -> List[str]:
    c = inst.chord(center)
    leaves = {inst.chord(f"{leaf}{x}") for x in (1, 2, 3)}
    problems = []
    if set(g.adj[c]) != leaves | {inst.chord(guard)}:
        problems.append(f"{center} is crossed by {sorted(inst.label_of(x) for x in g.adj[c])}")
    for x in leaves:
        if g.adj[x] != {c}:
            problems.append(f"{inst.label_of(x)} crosses more than its center")
    return problems


def _literal_ids(inst: GadgetInstance, clause: int, positions: Iterable[int]) -> List[int]:
    true = set(positions)
    ids = []
    for position in (1, 2, 3):
        t_id, f_id = inst.literal_chords(clause, position)
        ids.append(t_id if position in true else f_id)
    return ids


def recipe_set(inst: GadgetInstance, true_literals: Iterable[int], clause: int = 1) -> FrozenSet[int]:
    """
    The seven chords one clause contributes for the given true literal positions.

    The t chord of every true literal, the f chord of every false one, c1, c2,
    and the u/w chords named after the two positions other than a true one:
    position 2 when it is true, else the first true position.

    Raises:
        InputError: No true literal, or a position outside 1..3.
    """
    true = sorted(set(true_literals))
    if not true or not set(true) <= {1, 2, 3}:
        raise InputError(f"true literal positions must be a nonempty subset of 1..3, got {true}")
    #  with t2 chosen, u12/w12 or u23/w23 would hit the a2 pair three times
    key = 2 if 2 in true else true[0]
    others = "".join(str(x) for x in (1, 2, 3) if x != key)
    members = _literal_ids(inst, clause, true)
    for role in (f"u{others}", f"w{others}", "c1", "c2"):
        members.append(inst.chord(f"C{clause}.{role}"))
    return frozenset(members)


def assignment_set(inst: GadgetInstance, assignment: Assignment) -> FrozenSet[int]:
    """
    The size-k set a satisfying assignment maps to: each clause's recipe plus every link anchor.

    Raises:
        InputError: The assignment leaves a clause unsatisfied.
    """
    members = set()
    for j, clause in enumerate(inst.formula.clauses, start=1):
        true = [p for p, lit in enumerate(clause, start=1) if assignment.value(abs(lit)) == (lit > 0)]
        if not true:
            raise InputError(f"assignment does not satisfy clause {j}")
        members |= recipe_set(inst, true, j)
    for link in inst.links:
        members |= {inst.chord(f"L{link.index}.{kind}.s") for kind in link.kinds}
    return frozenset(members)


def decode_assignment(inst: GadgetInstance, d: Iterable[int]) -> Assignment:
    """
    Read a truth assignment off a [1,2]-dominating set of size at most k.

    A literal is true iff its t chord is in the set.  Variables that occur in
    no clause are false.

    Raises:
        DecodeError: The set is too large or invalid, a literal has both or
            neither of its t/f chords, a clause has no true literal, or two
            occurrences of a variable disagree.
    """
    members = frozenset(d)
    if len(members) > inst.k:
        raise DecodeError(f"set of size {len(members)} exceeds k = {inst.k}")
    f = inst.formula
    values: Dict[int, bool] = {}
    for j, clause in enumerate(f.clauses, start=1):
        satisfied = False
        for position, lit in enumerate(clause, start=1):
            t_id, f_id = inst.literal_chords(j, position)
            has_t, has_f = t_id in members, f_id in members
            if has_t == has_f:
                which = "both" if has_t else "neither"
                raise DecodeError(f"clause {j} literal {position}: {which} of t/f chosen")
            satisfied |= has_t
            value = has_t != (lit < 0)
            var = abs(lit)
            if values.setdefault(var, value) != value:
                raise DecodeError(f"variable {var} decodes inconsistently at clause {j}")
        if not satisfied:
            raise DecodeError(f"clause {j} has none of its t chords chosen")
    cert = is_1j_dominating(inst.graph, members, 2)
    if not cert.valid:
        raise DecodeError(f"not a [1,2]-dominating set: violations {cert.violations[:5]}")
    return Assignment(tuple(values.get(v, False) for v in range(1, f.num_vars + 1)))


def _assignments(num_vars: int) -> Iterable[Assignment]:
    for values in itertools.product((False, True), repeat=num_vars):
        yield Assignment(values)


def find_satisfying(f: CnfFormula, cap: int = SAT_BRUTE_CAP) -> Optional[Assignment]:
    """
    The first satisfying assignment in lexicographic order, None if unsatisfiable.

    Raises:
        ResourceError: More than `cap` variables.
    """
    if f.num_vars > cap:
        raise ResourceError(f"brute force SAT cap exceeded: {f.num_vars} variables > {cap}")
    for assignment in _assignments(f.num_vars):
        if assignment.satisfies(f):
            return assignment
    return None


def sat_brute(f: CnfFormula, cap: int = SAT_BRUTE_CAP) -> bool:
    """True iff some assignment satisfies every clause."""
    validate_formula(f)
    return find_satisfying(f, cap) is not None


ReductionReport = namedtuple(
    "ReductionReport",
    [
        "sat",
        "k",
        "chords",
        "min_value",
        "within_k",
        "below_k",
        "decoded",
        "decoded_satisfies",
        "anchors_chosen",
        "agree",
    ],
)


def verify_reduction_small(f: CnfFormula, cap: Optional[int] = None) -> ReductionReport:
    """
    Check both directions of the reduction on one formula by exact search.

    Args:
        f: The formula.
        cap: Vertex cap for the search, defaults to the constrained oracle cap.

    Returns:
        A report: SAT by enumeration, the minimum [1,2]-dominating set size when
        at most k, whether a set of size k - 1 exists, the decoded assignment and
        whether it satisfies f, whether every claw center is in the set found.

    Raises:
        ResourceError: The gadget has more chords than the cap.
    """
    inst = build_gadget(f)
    cap = qd_context.oracle_cap_constrained if cap is None else cap
    sat = sat_brute(f)
    g = inst.graph
    found = min_dom_bounded(g, 2, inst.k, cap=cap)
    within = not found.exceeds_budget
    below = None
    decoded = None
    decoded_ok = None
    anchored = None
    if within:
        below = inst.k > 0 and found.value < inst.k
        if inst.k > 0 and not below:
            below = not min_dom_bounded(g, 2, inst.k - 1, cap=cap).exceeds_budget
        try:
            decoded = decode_assignment(inst, found.witness)
            decoded_ok = decoded.satisfies(f)
        except DecodeError as exc:
            logger.warning("decode failed: %s", exc)
            decoded_ok = False
        anchored = set(inst.anchors()) <= found.witness
    return ReductionReport(
        sat=sat,
        k=inst.k,
        chords=len(inst.diagram),
        min_value=found.value if within else None,
        within_k=within,
        below_k=below,
        decoded=decoded,
        decoded_satisfies=decoded_ok,
        anchors_chosen=anchored,
        agree=sat == within,
    )


def write_gadget(inst: GadgetInstance, path: Union[str, Path]) -> Tuple[Path, Path]:
    """
    Write the chord diagram to `path` and the label map to `<path>.labels`.

    Returns:
        The two paths written.
    """
    path = Path(path)
    header = qd_context.render(
        GADGET_HEADER, m=inst.m, t=inst.t, chords=len(inst.diagram), k=inst.k
    ).splitlines()
    path.write_text(write_chord_diagram(inst.diagram, header=header))
    labels_path = path.with_name(path.name + ".labels")
    ordered = sorted(inst.labels.items(), key=lambda item: item[1])
    labels_path.write_text(
        qd_context.render(LABELS_TEMPLATE, diagram=path.name, k=inst.k, labels=ordered)
    )
    return path, labels_path
