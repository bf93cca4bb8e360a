"""Text formats: parsing, formatting, round trips, and parse errors."""

import pytest

from latkit import corpus, io
from latkit.errors import OrthoAxiomFailed, ParseError

LATTICE_DOC = """
# a diamond with an orthocomplement
lattice D4
elements: 0 a b 1
covers: 0<a 0<b a<1 b<1
ortho: 0->1 a->b b->a 1->0

lattice C2
elements: 0 1
covers: 0<1

map f : D4 -> C2
0 |-> 0
a |-> 0
b |-> 1
1 |-> 1

umap t : D4 -> D4
a |-> {a}
b |-> {b}
1 |-> {a,1}

causal r : C2 -> D4
0 ~> 0
1 ~> 0
1 ~> a
"""


def test_load_workspace_resolves_everything():
    ws = io.load_workspace(LATTICE_DOC)
    assert set(ws.lattices) == {"D4", "C2"}
    assert "D4" in ws.orthos
    d4 = ws.lattices["D4"]
    assert d4.size == 4 and d4.labels == ("0", "a", "b", "1")
    f = ws.maps["f"]
    assert f.values == (0, 0, 1, 1)
    assert ws.signatures["f"] == ("D4", "C2")
    theta = ws.union_maps["t"]
    assert theta(frozenset([3])) == frozenset([1, 3])
    relation = ws.causals["r"]
    assert relation.holds(1, 0) and not relation.holds(1, 3)


def test_forward_references_allowed():
    # The map appears before the lattices it names.
    text = "map g : A -> A\nx |-> x\n0 |-> 0\n1 |-> 1\n" + (
        "lattice A\nelements: 0 x 1\ncovers: 0<x x<1\n"
    )
    ws = io.load_workspace(text)
    assert ws.maps["g"].values == (0, 1, 2)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        io.parse_blocks("elements: 0 1\n")
    assert "line 1" in str(err.value)
    with pytest.raises(ParseError) as err:
        io.parse_blocks("lattice A\nwhat even is this line\n")
    assert "line 2" in str(err.value)
    with pytest.raises(ParseError) as err:
        io.parse_blocks("map f\n")
    assert "NAME : DOM -> COD" in str(err.value)


def test_cyclic_covers_become_parse_errors():
    text = "lattice A\nelements: x y\ncovers: x<y y<x\n"
    with pytest.raises(ParseError):
        io.load_workspace(text)


def test_broken_ortho_is_a_validation_error():
    text = "lattice A\nelements: 0 1\ncovers: 0<1\northo: 0->0 1->1\n"
    with pytest.raises(OrthoAxiomFailed):
        io.load_workspace(text)


def test_duplicate_names_rejected():
    text = "lattice A\nelements: 0\n\nlattice A\nelements: 0\n"
    with pytest.raises(ParseError):
        io.load_workspace(text)


def test_unknown_label_rejected():
    text = "lattice A\nelements: 0 1\ncovers: 0<2\n"
    with pytest.raises(ParseError):
        io.load_workspace(text)


def test_partial_map_blocks():
    text = (
        "lattice C3\nelements: 0 m 1\ncovers: 0<m m<1\n"
        "lattice C2\nelements: 0 1\ncovers: 0<1\n"
        "map p : C3 -> C2\nanchor: m\n0 |-> 0\nm |-> 1\n"
    )
    ws = io.load_workspace(text)
    partial = ws.maps["p"]
    assert partial.anchor == 1
    assert partial(1) == 1


def test_continuous_map_blocks():
    text = (
        "cspace S\npoints: p q\nclosed: {} {p} {q}\n"
        "map a : S -> S\nkernel: q\np |-> p\n"
    )
    ws = io.load_workspace(text)
    alpha = ws.cmaps["a"]
    assert alpha.kernel == frozenset([1])
    assert alpha(0) == 0


def test_lattice_format_roundtrip():
    for name, lattice in corpus.named_lattices(max_size=8).items():
        text = io.format_lattice(name, lattice)
        rebuilt = io.load_workspace(text).lattices[name]
        assert rebuilt == lattice


def test_ortho_format_roundtrip():
    for name, ol in corpus.ortho_lattices().items():
        text = io.format_lattice(name, ol.lattice, ol)
        ws = io.load_workspace(text)
        assert ws.orthos[name].ortho == ol.ortho


def test_space_format_roundtrips():
    for name, space in corpus.closure_spaces().items():
        rebuilt = io.load_workspace(io.format_cspace(name, space)).cspaces[name]
        assert rebuilt.closed == space.closed
    for name, space in corpus.orthospaces().items():
        rebuilt = io.load_workspace(io.format_ospace(name, space)).ospaces[name]
        assert rebuilt.orth == space.orth


def test_map_format_roundtrip():
    ws = io.load_workspace(LATTICE_DOC)
    f = ws.maps["f"]
    text = LATTICE_DOC + "\n" + io.format_map("f2", f, "D4", "C2")
    assert io.load_workspace(text).maps["f2"] == f
    theta = ws.union_maps["t"]
    text = LATTICE_DOC + "\n" + io.format_umap("t2", theta, "D4", "D4")
    assert io.load_workspace(text).union_maps["t2"] == theta
    relation = ws.causals["r"]
    text = LATTICE_DOC + "\n" + io.format_causal("r2", relation, "C2", "D4")
    assert io.load_workspace(text).causals["r2"].pairs == relation.pairs


def test_comments_and_blank_lines_ignored():
    text = "# leading comment\n\nlattice A  # trailing\nelements: 0 1\ncovers: 0<1\n"
    ws = io.load_workspace(text)
    assert ws.lattices["A"].size == 2
