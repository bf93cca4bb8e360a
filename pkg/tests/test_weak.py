"""Weak meet maps and their partial / pointed-extension adjoints."""

import pytest

from latkit import corpus
from latkit.core import LatticeMap
from latkit.errors import NotWeakMeet, ShapeMismatch
from latkit.maps import preservation_profile
from latkit.weak import (
    PartialJoinMap,
    WeakMeetMap,
    compose_partial,
    partial_from_table,
    partial_from_weak,
    partial_to_upper,
    pointed_extend,
    restrict_codomain,
    upper_adjoint,
    upper_from_weak,
    upper_to_partial,
)


def weak_meet_maps(dom, cod):
    from latkit.maps import hom_set

    out = []
    for f in hom_set(dom, cod, "isotone"):
        if preservation_profile(f).nonempty_meets:
            out.append(WeakMeetMap(f))
    return out


SMALL = ["C2", "C3", "D4", "B4"]


def test_weak_meet_map_rejects_non_meet_maps():
    d4 = corpus.diamond()
    # Swap the two atoms of the image: joins fine, meets broken.
    bad = LatticeMap(d4, d4, (0, 3, 3, 3))
    with pytest.raises(NotWeakMeet):
        WeakMeetMap(bad)


def test_restrict_codomain_lands_on_interval():
    table = corpus.named_lattices()
    for name1 in SMALL:
        for name2 in SMALL:
            for g in weak_meet_maps(table[name1], table[name2]):
                restricted, partial, anchor = restrict_codomain(g)
                assert anchor == g(g.dom.top)
                # The corestriction preserves all meets including the empty one.
                assert preservation_profile(restricted).meets
                assert partial.anchor == anchor


def test_pointed_extension_balanced_adjoint():
    table = corpus.named_lattices()
    for name1 in SMALL:
        for name2 in SMALL:
            for g in weak_meet_maps(table[name1], table[name2]):
                extended, upper = pointed_extend(g)
                # The extension fixes the adjoined top and agrees with g below.
                assert extended(g.dom.size) == g.cod.size
                for b in g.dom.elements():
                    assert extended(b) == g(b)
                profile = preservation_profile(upper.map)
                assert profile.joins and profile.balanced


def test_partial_upper_roundtrips():
    table = corpus.named_lattices()
    for name1 in SMALL:
        for name2 in SMALL:
            for g in weak_meet_maps(table[name1], table[name2]):
                partial = partial_from_weak(g)
                upper = upper_from_weak(g)
                assert partial_to_upper(partial) == upper
                assert upper_to_partial(upper) == partial
                # The upper route recovers g on the base carrier.
                adjoint = upper_adjoint(partial)
                for b in g.dom.elements():
                    assert adjoint(b) == g(b)


def test_compose_partial_matches_weak_composition():
    from latkit.maps import compose

    table = corpus.named_lattices()
    c3, d4, b4 = table["C3"], table["D4"], table["B4"]
    for g1 in weak_meet_maps(d4, c3):
        for g2 in weak_meet_maps(b4, d4):
            composite_weak = WeakMeetMap(compose(g1.map, g2.map))
            left = compose_partial(partial_from_weak(g2), partial_from_weak(g1))
            assert left == partial_from_weak(composite_weak)


def test_partial_map_validation():
    c3 = corpus.chain(3)
    c2 = corpus.chain(2)
    with pytest.raises(ShapeMismatch):
        PartialJoinMap(c3, c2, 1, ((0, 0),))  # missing value at 1
    partial = partial_from_table(c3, c2, 1, {0: 0, 1: 1})
    assert partial(1) == 1
    interval, inner = partial.interval_map()
    assert inner.values == (0, 1)


def test_compose_partial_shape_guard():
    c2, c3 = corpus.chain(2), corpus.chain(3)
    p1 = partial_from_table(c2, c2, 1, {0: 0, 1: 1})
    p2 = partial_from_table(c3, c3, 2, {0: 0, 1: 1, 2: 2})
    with pytest.raises(ShapeMismatch):
        compose_partial(p2, p1)
