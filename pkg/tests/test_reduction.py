#!/usr/bin/env python3

import itertools
from itertools import product
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import quasidom.reduction as reduction
from quasidom.generators import GenKind, GenSpec, gen_3sat
from quasidom.graph import has_induced_claw, is_1j_dominating, read_chord_diagram
from quasidom.internals import DecodeError, DomainAssumptionError, InputError, ResourceError
from quasidom.reduction import (
    CHORDS_PER_CLAUSE,
    CHORDS_PER_LINK,
    CLAUSE_ROLES,
    SLOT_PASS_OVER,
    Assignment,
    CnfFormula,
    assignment_set,
    build_gadget,
    check_adjacency_contract,
    decode_assignment,
    find_links,
    find_satisfying,
    parse_dimacs_cnf,
    recipe_set,
    sat_brute,
    target_k,
    verify_reduction_small,
    write_dimacs_cnf,
    write_gadget,
)

ONE_CLAUSE = CnfFormula(3, ((1, 2, 3),))
TWO_CLAUSES = CnfFormula(4, ((1, 2, 3), (-1, 2, 4)))
#  shares a negated and a plain occurrence at positions 1 and 2
MIXED_SIGNS = CnfFormula(4, ((-1, 2, 3), (1, 2, 4)))
#  variable 2 at every position
THREE_CLAUSES = CnfFormula(5, ((1, 2, 3), (2, -1, 4), (3, 5, -2)))
#  every sign pattern over three variables: unsatisfiable
ALL_PATTERNS = CnfFormula(
    3, tuple((a * 1, b * 2, c * 3) for a, b, c in product((1, -1), repeat=3))
)


def test_parse_dimacs_cnf():
    f = parse_dimacs_cnf(
        [
            "c a comment",
            "p cnf 4 2",
            "1 2 3 0",
            "-1 2",
            "4 0",
            "%",
            "0",
        ]
    )
    assert f == TWO_CLAUSES
    assert parse_dimacs_cnf(write_dimacs_cnf(f).splitlines()) == f


@pytest.mark.parametrize(
    "lines, error",
    [
        (["1 2 3 0"], InputError),
        (["p cnf 3 1", "1 2 0"], InputError),
        (["p cnf 3 1", "1 2 3"], InputError),
        (["p cnf 3 2", "1 2 3 0"], InputError),
        (["p cnf 3 1", "1 2 5 0"], InputError),
        (["p cnf 3 1", "1 x 3 0"], InputError),
        (["p dnf 3 1"], InputError),
        (["p cnf 3 1", "1 -1 3 0"], DomainAssumptionError),
    ],
)
def test_parse_dimacs_cnf_errors(lines, error):
    with pytest.raises(error):
        parse_dimacs_cnf(lines)


def test_find_links():
    links = find_links(TWO_CLAUSES)
    assert [(x.var, x.left, x.right, x.kinds) for x in links] == [
        (1, (1, 1), (2, 1), ("tt", "ff")),
        (2, (1, 2), (2, 2), ("tf", "ft")),
    ]
    assert target_k(TWO_CLAUSES) == 7 * 2 + 2 * 2


def test_single_clause_gadget():
    inst = build_gadget(ONE_CLAUSE)
    assert len(inst.diagram) == CHORDS_PER_CLAUSE == len(CLAUSE_ROLES)
    assert (inst.m, inst.t, inst.k) == (1, 0, 7)
    assert inst.label_of(1) == "C1.c1.leaf1"
    assert inst.chord("C1.c1.leaf1") == 1
    assert check_adjacency_contract(inst) == []
    assert has_induced_claw(inst.graph)
    assert inst.anchors() == [inst.chord("C1.c1"), inst.chord("C1.c2")]
    with pytest.raises(InputError):
        inst.chord("C2.t1")


def test_linked_gadget_structure():
    inst = build_gadget(TWO_CLAUSES)
    assert len(inst.diagram) == 2 * CHORDS_PER_CLAUSE + 2 * CHORDS_PER_LINK
    assert inst.k == 18
    assert check_adjacency_contract(inst) == []


@pytest.mark.parametrize("seed", range(12))
def test_random_gadgets_keep_the_contract(seed):
    f = gen_3sat(GenSpec(GenKind.RANDOM_3SAT, 5, seed, {"clauses": 1 + seed % 4}))
    inst = build_gadget(f)
    assert len(inst.diagram) == CHORDS_PER_CLAUSE * inst.m + CHORDS_PER_LINK * inst.t
    assert inst.k == 7 * inst.m + 2 * inst.t
    assert check_adjacency_contract(inst) == []


@pytest.mark.parametrize("true_literals", [[1], [2], [3], [1, 2], [1, 3], [2, 3], [1, 2, 3]])
def test_recipe_sets_dominate(true_literals):
    inst = build_gadget(ONE_CLAUSE)
    s = recipe_set(inst, true_literals)
    assert len(s) == 7
    assert is_1j_dominating(inst.graph, s, 2).valid


def test_recipe_uw_pair_skips_position_2_when_true():
    inst = build_gadget(ONE_CLAUSE)
    for true, pair in (([1], "23"), ([3], "12"), ([1, 2], "13"), ([2, 3], "13"), ([1, 3], "23")):
        s = recipe_set(inst, true)
        assert {inst.chord(f"C1.u{pair}"), inst.chord(f"C1.w{pair}")} <= s, true


def test_recipe_set_errors():
    inst = build_gadget(ONE_CLAUSE)
    with pytest.raises(InputError):
        recipe_set(inst, [])
    with pytest.raises(InputError):
        recipe_set(inst, [4])


def test_decode_recipe():
    f = CnfFormula(3, ((1, -2, 3),))
    inst = build_gadget(f)
    assignment = decode_assignment(inst, recipe_set(inst, [2]))
    assert assignment == Assignment((False, False, False))
    assert assignment.satisfies(f)
    assert assignment.as_dict() == {1: False, 2: False, 3: False}


def test_decode_failures():
    inst = build_gadget(ONE_CLAUSE)
    good = recipe_set(inst, [1])
    t1, f1 = inst.literal_chords(1, 1)
    with pytest.raises(DecodeError, match="both"):
        decode_assignment(inst, (good - {inst.chord("C1.c1")}) | {f1})
    with pytest.raises(DecodeError, match="neither"):
        decode_assignment(inst, good - {t1})
    with pytest.raises(DecodeError, match="exceeds"):
        decode_assignment(inst, range(1, 9))
    with pytest.raises(DecodeError, match="none of its t chords"):
        decode_assignment(inst, recipe_set(inst, [1]) - {t1} | {f1})


def test_assignment_set_for_single_clause():
    inst = build_gadget(ONE_CLAUSE)
    s = assignment_set(inst, Assignment((True, True, False)))
    assert s == recipe_set(inst, [1, 2])
    with pytest.raises(InputError):
        assignment_set(inst, Assignment((False, False, False)))


def test_assignment_set_includes_link_anchors():
    inst = build_gadget(TWO_CLAUSES)
    s = assignment_set(inst, Assignment((True, True, False, False)))
    assert len(s) == inst.k
    assert set(inst.anchors()) <= s


def test_sat_brute():
    assert sat_brute(ONE_CLAUSE)
    assert not sat_brute(ALL_PATTERNS)
    assert find_satisfying(ONE_CLAUSE) == Assignment((False, False, True))
    with pytest.raises(ResourceError):
        find_satisfying(CnfFormula(30, ((1, 2, 3),)))


def test_repeated_variable_is_a_domain_violation():
    with pytest.raises(DomainAssumptionError):
        build_gadget(CnfFormula(3, ((1, 1, 2),)))


def test_write_gadget(tmp_path):
    inst = build_gadget(ONE_CLAUSE)
    diagram, labels = write_gadget(inst, tmp_path / "one.chords")
    assert labels.name == "one.chords.labels"
    assert read_chord_diagram(diagram).chords == inst.diagram.chords
    text = labels.read_text()
    assert "label 1 C1.c1.leaf1\n" in text
    assert "(k 7)" in text
    assert "# k 7" in diagram.read_text()


def test_single_clause_layout_is_frozen(tmp_path):
    diagram, _ = write_gadget(build_gadget(ONE_CLAUSE), tmp_path / "one.chords")
    golden = Path(__file__).parent / "data" / "one_clause.chords"
    assert diagram.read_text() == golden.read_text()


def test_verify_over_cap():
    with pytest.raises(ResourceError):
        verify_reduction_small(TWO_CLAUSES)


@pytest.mark.slow
@pytest.mark.parametrize("signs", list(product((1, -1), repeat=3)))
def test_verify_single_clause(signs):
    f = CnfFormula(3, (tuple(s * v for s, v in zip(signs, (1, 2, 3))),))
    report = verify_reduction_small(f)
    assert report.sat
    assert report.agree
    assert report.min_value == 7
    assert report.below_k is False
    assert report.decoded_satisfies
    assert report.anchors_chosen


def _satisfying(f):
    for values in product((False, True), repeat=f.num_vars):
        assignment = Assignment(values)
        if assignment.satisfies(f):
            yield assignment


def _crossed(inst, label, clause=1):
    g = inst.graph
    prefix = f"C{clause}."
    return {
        inst.label_of(x)[len(prefix) :]
        for x in g.adj[inst.chord(prefix + label)]
        if inst.label_of(x).startswith(prefix)
    }


def test_clause_crossings_read_directly():
    inst = build_gadget(ONE_CLAUSE)
    a_pairs = {f"a{l}{x}" for l in "123" for x in "xy"}
    assert _crossed(inst, "u13") & a_pairs == {"a1x", "a1y"}
    assert _crossed(inst, "w13") & a_pairs == {"a3x", "a3y"}
    assert _crossed(inst, "u12") & a_pairs == {"a1x", "a1y", "a2x", "a2y"}
    assert _crossed(inst, "u23") & a_pairs == {"a2x", "a2y", "a3x", "a3y"}
    for w in ("w12", "w23"):
        assert {"u13", "a2x", "a2y", "w13"} <= _crossed(inst, w)
    assert "w23" in _crossed(inst, "w12")
    assert _crossed(inst, "g1") == {"c1", "u12", "u13", "u23"}
    assert _crossed(inst, "g2") == {"c2", "u12", "u23", "w13"}
    for l in "123":
        assert _crossed(inst, f"p{l}x") == {f"t{l}", f"f{l}"}


def test_contract_reports_a_broken_block(monkeypatch):
    swapped = list(reduction.CLAUSE_EVENTS)
    i, j = swapped.index(")w12"), swapped.index(")w23")
    swapped[i], swapped[j] = swapped[j], swapped[i]
    monkeypatch.setattr(reduction, "CLAUSE_EVENTS", swapped)
    problems = check_adjacency_contract(build_gadget(ONE_CLAUSE))
    assert "clause 1: w12 should cross w23" in problems


def test_contract_reports_extra_link_crossings(monkeypatch):
    monkeypatch.setattr(reduction, "SLOT_PASS_OVER", {1: (), 2: (), 3: ()})
    problems = check_adjacency_contract(build_gadget(TWO_CLAUSES))
    assert "L1.tt crosses C1.g1" in problems
    assert not any("L2." in x for x in problems)


def test_pass_over_chords_are_never_chosen():
    inst = build_gadget(ONE_CLAUSE)
    passed = {inst.chord(f"C1.{r}") for roles in SLOT_PASS_OVER.values() for r in roles}
    for n in (1, 2, 3):
        for true in itertools.combinations((1, 2, 3), n):
            assert not recipe_set(inst, true) & passed


@pytest.mark.parametrize("f", [TWO_CLAUSES, MIXED_SIGNS, THREE_CLAUSES])
def test_assignment_sets_dominate(f):
    inst = build_gadget(f)
    assert check_adjacency_contract(inst) == []
    assignments = list(_satisfying(f))
    assert assignments
    for assignment in assignments:
        s = assignment_set(inst, assignment)
        assert len(s) == inst.k
        assert is_1j_dominating(inst.graph, s, 2).valid, assignment
        assert decode_assignment(inst, s).satisfies(f)


clause_lists = st.lists(
    st.tuples(
        st.permutations(range(1, 6)).map(lambda p: p[:3]),
        st.tuples(*[st.sampled_from((1, -1))] * 3),
    ).map(lambda x: tuple(v * s for v, s in zip(*x))),
    min_size=1,
    max_size=3,
)


@settings(max_examples=60, deadline=None)
@given(clause_lists)
def test_every_assignment_set_dominates(clauses):
    f = CnfFormula(5, tuple(clauses))
    inst = build_gadget(f)
    assert check_adjacency_contract(inst) == []
    for assignment in _satisfying(f):
        s = assignment_set(inst, assignment)
        assert len(s) == inst.k
        assert is_1j_dominating(inst.graph, s, 2).valid, assignment
