#!/usr/bin/env python3

from fractions import Fraction

import pytest
from hypothesis import given

from conftest import interval_lists, named_graph
from quasidom.graph import (
    INF,
    ChordDiagram,
    Graph,
    IntervalGraph,
    build_index,
    chords_to_graph,
    format_number,
    has_induced_claw,
    induced_prefix,
    is_1j_dominating,
    read_chord_diagram,
    read_edge_list,
    read_intervals,
    verify_numbering,
    write_chord_diagram,
    write_edge_list,
    write_intervals,
)
from quasidom.internals import InputError, StructureError


def test_numbered_by_right_endpoint():
    g = IntervalGraph.from_intervals([(2, 5), (1, 3), (4, 6)])
    assert [(x.left, x.right) for x in g.source] == [(1, 3), (2, 5), (4, 6)]
    assert g.edges() == [(1, 2), (2, 3)]


def test_touching_endpoints_intersect():
    g = IntervalGraph.from_intervals([(0, 1), (1, 2)])
    assert g.has_edge(1, 2)


def test_degenerate_interval_reports_line():
    with pytest.raises(InputError, match="line 3"):
        read_intervals(["# header", "0 1", "3 3"])


def test_read_intervals_rejects_garbage():
    with pytest.raises(InputError, match="line 1"):
        read_intervals(["0 1 2"])
    with pytest.raises(InputError):
        read_intervals(["# nothing here"])


def test_read_intervals_fractions(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text(write_intervals([(Fraction(1, 2), 2), (0, Fraction(1, 3))]))
    g = read_intervals(path)
    assert g.n == 2
    assert g.source[0].right == Fraction(1, 3)


def test_format_number():
    assert format_number(4) == "4"
    assert format_number(Fraction(1, 2)) == "0.5"
    assert format_number(Fraction(1, 3)) == "1/3"


def test_verify_numbering():
    assert verify_numbering(Graph(3, [(1, 2), (2, 3)]))
    assert not verify_numbering(Graph(3, [(1, 3)]))
    with pytest.raises(StructureError):
        build_index(IntervalGraph.from_edges(3, [(1, 3)]))


@given(interval_lists())
def test_numbering_property_always_holds(intervals):
    g = IntervalGraph.from_intervals(intervals)
    assert verify_numbering(g)
    expected = sum(
        1
        for x in range(len(intervals))
        for y in range(x + 1, len(intervals))
        if intervals[x][0] <= intervals[y][1] and intervals[y][0] <= intervals[x][1]
    )
    assert g.edge_count() == expected


def test_neighborhood_tables(path3):
    index = build_index(path3)
    assert index.lows == [1, 1, 2]
    assert index.maxlow(3) == 2
    assert index.low_range(2, 3) == 1
    assert index.low_range(3, 2) == INF


def test_induced_prefix(path4):
    prefix = induced_prefix(path4, 2)
    assert prefix.n == 2
    assert prefix.edges() == [(1, 2)]
    assert path4.induced_prefix(3).edges() == [(1, 2), (2, 3)]
    with pytest.raises(InputError):
        induced_prefix(path4, 0)


def test_is_1j_dominating(claw):
    assert is_1j_dominating(claw, {4}, 2).valid
    cert = is_1j_dominating(claw, {1, 2, 3}, 2)
    assert not cert.valid
    assert cert.violations == [(4, 3)]
    assert is_1j_dominating(claw, {1, 2, 3}).valid
    assert not is_1j_dominating(claw, {1}).valid
    with pytest.raises(InputError):
        is_1j_dominating(claw, {9})


def test_claw_detection(claw, path4):
    assert has_induced_claw(claw)
    assert not has_induced_claw(path4)
    assert not has_induced_claw(named_graph("triangle"))


def test_graph_rejects_bad_edges():
    with pytest.raises(InputError):
        Graph(2, [(1, 3)])
    with pytest.raises(InputError):
        Graph(2, [(2, 2)])


def test_to_networkx(path4):
    ng = path4.to_networkx()
    assert ng.number_of_nodes() == 4
    assert sorted(tuple(sorted(e)) for e in ng.edges) == path4.edges()


def test_edge_list(tmp_path, path4):
    path = tmp_path / "g.edges"
    path.write_text("c a path\n" + write_edge_list(path4))
    g = read_edge_list(path)
    assert g == path4


@pytest.mark.parametrize(
    "lines",
    [
        ["e 1 2"],
        ["p edge 2 2", "e 1 2"],
        ["p edge 2 1", "e 1 3"],
        ["p edge 2 1", "e 1 1"],
        ["p edge 2 1", "x 1 2"],
        ["p edge two 1"],
        [],
    ],
)
def test_edge_list_errors(lines):
    with pytest.raises(InputError):
        read_edge_list(lines)


def test_missing_file(tmp_path):
    with pytest.raises(InputError, match="unable to read"):
        read_intervals(tmp_path / "absent.txt")


def test_chord_crossing():
    d = ChordDiagram([("a", 0, 2), ("b", 1, 3), ("c", 4, 5)])
    a, b, c = d.chords
    assert d.crosses(a, b)
    assert not d.crosses(a, c)
    assert chords_to_graph(d).edges() == [(1, 2)]


def test_nested_chords_do_not_cross():
    d = ChordDiagram([("outer", 0, 3), ("inner", 1, 2)])
    assert chords_to_graph(d).edge_count() == 0


def test_chord_diagram_errors():
    with pytest.raises(InputError, match="duplicate"):
        ChordDiagram([("a", 0, 1), ("b", 1, 2)])
    with pytest.raises(InputError, match="outside"):
        ChordDiagram([("a", 0, 2)])


def test_chord_diagram_file(tmp_path):
    d = ChordDiagram([("a", 0, 2), ("b", 1, 3)])
    path = tmp_path / "d.chords"
    path.write_text(write_chord_diagram(d, header=["two chords"]))
    back = read_chord_diagram(path)
    assert back.chords == d.chords
    with pytest.raises(InputError, match="declares"):
        read_chord_diagram(["c 3", "h a 0 1"])
    with pytest.raises(InputError, match="before"):
        read_chord_diagram(["h a 0 1"])


@given(interval_lists(max_size=12))
def test_maxlow_window_is_a_clique_with_an_escape_vertex(intervals):
    g = IntervalGraph.from_intervals(intervals)
    index = build_index(g)
    for i in g.vertices:
        top = index.maxlow(i)
        window = range(top, i + 1)
        assert all(g.has_edge(x, y) for x in window for y in window if x < y)
        #  some vertex of the window has no neighbor below it
        assert any(all(y >= top for y in g.adj[k]) for k in window)


@given(interval_lists(max_size=12))
def test_low_range_is_the_plain_minimum(intervals):
    g = IntervalGraph.from_intervals(intervals)
    index = build_index(g)
    for a in g.vertices:
        for b in g.vertices:
            expected = min(index.low(k) for k in range(a, b + 1)) if a <= b else INF
            assert index.low_range(a, b) == expected
