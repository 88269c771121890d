import re

import pytest
from hypothesis import given, settings

from conftest import closure_lattices
from sslattice.errors import CoverFormatError, NotALattice
from sslattice.generators import boolean_lattice, chain_lattice, make_family, pentagon
from sslattice.io import export_dot, parse_cover_file, serialize_cover_file
from sslattice.lattice import build_from_covers
from sslattice.modularity import find_pentagon

N5_TEXT = "n 5\n0 1\n1 2\n2 4\n0 3\n3 4"


def nodes(dot):
    return re.findall(r"^  (\d+) \[label=", dot, re.M)


def edges(dot):
    return re.findall(r"^  (\d+) -> (\d+)(.*);$", dot, re.M)


def test_parse_examples():
    assert parse_cover_file("n 2\n0 1") == chain_lattice(2)
    assert parse_cover_file(N5_TEXT) == pentagon()
    with pytest.raises(CoverFormatError) as e:
        parse_cover_file("n 2\n0 2")
    assert e.value.line == 2


def test_parse_labels_and_comments():
    text = "# a diamond\nn 5\n\n0 1  # atom\n0 2\n0 3\n1 4\n2 4\n3 4\nlabel 4 the top\nlabel 0 bot\n"
    L = parse_cover_file(text)
    assert L.n == 5 and L.labels[4] == "the top" and L.labels[0] == "bot" and L.labels[1] == ""


def test_parse_accepts_comparabilities():
    # non-cover pairs are reduced away
    assert parse_cover_file("n 3\n0 1\n1 2\n0 2").covers == ((0, 1), (1, 2))


@pytest.mark.parametrize("text,line", [
    ("0 1\nn 2", 1),
    ("n 2\nn 2", 2),
    ("n x", 1),
    ("n 0", 1),
    ("n 3\n0 1 2", 2),
    ("n 3\nlabel 5 x", 2),
    ("", 1),
])
def test_parse_errors(text, line):
    with pytest.raises(CoverFormatError) as e:
        parse_cover_file(text)
    assert e.value.line == line


def test_parse_passes_lattice_errors_through():
    with pytest.raises(NotALattice):
        parse_cover_file("n 4\n0 1\n0 2\n1 3")


def test_round_trip_families():
    for L in (pentagon(), boolean_lattice(3), make_family("partition", 4),
              make_family("noncrossing_partition", 4), make_family("divisor", 60)):
        text = serialize_cover_file(L)
        back = parse_cover_file(text)
        assert back == L and back.labels == L.labels
        assert serialize_cover_file(back) == text


@settings(max_examples=50, deadline=None)
@given(closure_lattices())
def test_round_trip_random(L):
    text = serialize_cover_file(L)
    assert parse_cover_file(text) == L
    assert serialize_cover_file(parse_cover_file(text)) == text


def test_dot_chain():
    dot = export_dot(chain_lattice(2))
    assert len(nodes(dot)) == 2 and edges(dot) == [("0", "1", "")]
    assert dot.startswith("digraph lattice {\n  rankdir=BT;")


def test_dot_pentagon_witness():
    N5 = pentagon()
    w = find_pentagon(N5)
    dot = export_dot(N5, witnesses=[w])
    assert len(nodes(dot)) == 5 and len(edges(dot)) == 5
    for x in (w.x, w.y, w.z):
        assert re.search(rf"^  {x} \[.*style=filled", dot, re.M)
    assert '"#f4a582"' in dot and '"#92c5de"' in dot
    assert "rank=same" not in dot  # N5 is not graded


def test_dot_boolean_highlight(b3):
    dot = export_dot(b3, highlight=[0, 1, 3, 7])
    assert len(nodes(dot)) == 8 and len(edges(dot)) == 12
    red = [(i, j) for i, j, attrs in edges(dot) if "color=red" in attrs]
    assert red == [("0", "1"), ("1", "3"), ("3", "7")]
    assert dot.count("rank=same") == 4


def test_dot_labels_are_escaped():
    L = build_from_covers(2, [(0, 1)], labels=['a"b', "c\\d"])
    dot = export_dot(L)
    assert r'label="a\"b"' in dot and r'label="c\\d"' in dot


def test_dot_deterministic(pi4):
    w = [find_pentagon(pi4, short_side=z) for z in range(pi4.n)]
    w = [x for x in w if x is not None]
    assert export_dot(pi4, (14, 4, 1, 0)[::-1], w) == export_dot(pi4, (14, 4, 1, 0)[::-1], w)
