"""Ortholattices, conjugation, dagger calculus, orthospaces."""

import pytest

from latkit import corpus
from latkit.core import LatticeMap, identity_map
from latkit.errors import NotSeparating, OrthoAxiomFailed
from latkit.maps import compose, hom_set, right_adjoint
from latkit.ortho import (
    OrthoSpace,
    biortho_lattice,
    colatt_check,
    conjugate,
    dagger,
    is_isometry,
    lattice_isomorphic_with_ortho,
    orthospace_from_lattice,
    validate_ortho,
    validate_orthospace,
)

ORTHOS = corpus.ortho_lattices()


def test_validate_ortho_accepts_corpus():
    for name, ol in ORTHOS.items():
        lat = ol.lattice
        for a in lat.elements():
            assert ol.comp(ol.comp(a)) == a
            assert lat.meet2(a, ol.comp(a)) == lat.bottom
            assert lat.join2(a, ol.comp(a)) == lat.top


def test_validate_ortho_rejects_broken_tables():
    d4 = corpus.diamond()
    # Identity is not order reversing on a diamond.
    with pytest.raises(OrthoAxiomFailed):
        validate_ortho(d4, (0, 1, 2, 3))
    # Not involutive.
    with pytest.raises(OrthoAxiomFailed):
        validate_ortho(d4, (3, 1, 2, 0))


def test_conjugate_is_involutive():
    b4 = ORTHOS["B4"]
    for f in hom_set(b4.lattice, b4.lattice, "isotone"):
        assert conjugate(conjugate(f, b4, b4), b4, b4) == f


def test_dagger_involution_on_o6():
    o6 = ORTHOS["O6"]
    for f in hom_set(o6.lattice, o6.lattice, "join"):
        assert dagger(dagger(f, o6, o6), o6, o6) == f


def test_dagger_of_identity_and_zero():
    for ol in (ORTHOS["B4"], ORTHOS["O6"]):
        lat = ol.lattice
        assert dagger(identity_map(lat), ol, ol) == identity_map(lat)
        zero = LatticeMap(lat, lat, (lat.bottom,) * lat.size)
        assert dagger(zero, ol, ol) == zero


def test_dagger_contravariance_on_b4():
    b4 = ORTHOS["B4"]
    maps = hom_set(b4.lattice, b4.lattice, "join")
    table = {f.values: dagger(f, b4, b4) for f in maps}
    for f1 in maps:
        for f2 in maps:
            composite = compose(f2, f1)
            assert table[composite.values] == compose(table[f1.values], table[f2.values])


def test_isometry_oracle_agreement():
    o6 = ORTHOS["O6"]
    found = 0
    for u in hom_set(o6.lattice, o6.lattice, "join"):
        # is_isometry asserts internally that both oracles agree.
        if is_isometry(u, o6, o6):
            found += 1
    assert found >= 1  # the identity at least


def test_colatt_check_identity():
    b8 = ORTHOS["B8"]
    report = colatt_check(identity_map(b8.lattice), b8, b8)
    assert report.passed


def test_colatt_check_boolean_inclusion():
    # Pad b4 atom-sets into b8 along a fixed atom embedding.
    b4, b8 = ORTHOS["B4"], ORTHOS["B8"]
    l4, l8 = b4.lattice, b8.lattice
    a0, a1 = l4.atoms()
    b0, b1 = l8.atoms()[0], l8.atoms()[1]
    values = []
    for x in l4.elements():
        image = []
        if l4.leq(a0, x):
            image.append(b0)
        if l4.leq(a1, x):
            image.append(b1)
        values.append(l8.join(image))
    h = LatticeMap(l4, l8, tuple(values))
    # Joins preserved, meets and complement are not (the image is not closed
    # under complement), so this must be rejected as a full ortho morphism.
    from latkit.errors import NotCOLattMorphism

    with pytest.raises(NotCOLattMorphism):
        colatt_check(h, b4, b8)


def test_orthospace_validation():
    spaces = corpus.orthospaces()
    for space in spaces.values():
        validate_orthospace(space)
    # Two points with no orthogonality cannot be separated.
    with pytest.raises(NotSeparating):
        validate_orthospace(OrthoSpace(2, (0, 0)))
    with pytest.raises(OrthoAxiomFailed):
        validate_orthospace(OrthoSpace(1, (1,)))


def test_biortho_lattice_of_pair_space_is_o6():
    # Four points with two orthogonal pairs generate the six-element
    # ortholattice with four incomparable middles.
    space = corpus.orthospaces()["P4pairs"]
    ol, sets = biortho_lattice(space)
    assert ol.size == 6
    lat, ortho = corpus.o6()
    reference = validate_ortho(lat, ortho)
    assert lattice_isomorphic_with_ortho(ol, reference) is not None


def test_orthospace_roundtrip_on_corpus():
    for name, ol in ORTHOS.items():
        space, _ = orthospace_from_lattice(ol)
        rebuilt, _ = biortho_lattice(space)
        if ol.size <= 8:
            assert lattice_isomorphic_with_ortho(ol, rebuilt) is not None
        else:
            assert rebuilt.size == ol.size


def test_complete_orthospace_gives_boolean():
    space = corpus.orthospaces()["P4"]
    ol, _ = biortho_lattice(space)
    assert ol.size == 16
    assert ol.lattice.is_atomistic()
