"""Maps between lattices: preservation analysis, adjoints, duality,
special morphisms, classification, and Hom-set enumeration."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import FiniteLattice, LatticeMap, identity_map, lower_interval
from .errors import (
    EmptyFamily,
    NotInClass,
    NotJoinPreserving,
    NotMeetPreserving,
    ShapeMismatch,
    SizeLimit,
)

HOM_SET_CANDIDATE_BOUND = 500_000


@dataclass(frozen=True)
class PreservationProfile:
    joins: bool  # all joins, including the empty one (f(0)=0)
    nonempty_joins: bool
    meets: bool
    nonempty_meets: bool
    balanced: bool  # f(1)=1
    dense: bool  # f(a)=0 only for a=0
    bottom_fixed: bool  # f(0)=0; the balanced notion for meet-preserving maps
    top_reflecting: bool  # f(a)=1 only for a=1; the dense notion for meet maps


def preservation_profile(f):
    """Decide every flag exhaustively; binary checks suffice on finite carriers."""
    dom, cod = f.dom, f.cod
    nonempty_joins = all(
        f(dom.join2(a, b)) == cod.join2(f(a), f(b))
        for a in dom.elements()
        for b in dom.elements()
    )
    nonempty_meets = all(
        f(dom.meet2(a, b)) == cod.meet2(f(a), f(b))
        for a in dom.elements()
        for b in dom.elements()
    )
    return PreservationProfile(
        joins=nonempty_joins and f(dom.bottom) == cod.bottom,
        nonempty_joins=nonempty_joins,
        meets=nonempty_meets and f(dom.top) == cod.top,
        nonempty_meets=nonempty_meets,
        balanced=f(dom.top) == cod.top,
        dense=all(f(a) != cod.bottom for a in dom.elements() if a != dom.bottom),
        bottom_fixed=f(dom.bottom) == cod.bottom,
        top_reflecting=all(f(a) != cod.top for a in dom.elements() if a != dom.top),
    )


def preserves_joins(f):
    return preservation_profile(f).joins


def preserves_meets(f):
    return preservation_profile(f).meets


def _join_witness(f):
    dom, cod = f.dom, f.cod
    if f(dom.bottom) != cod.bottom:
        return (dom.bottom,)
    for a in dom.elements():
        for b in dom.elements():
            if f(dom.join2(a, b)) != cod.join2(f(a), f(b)):
                return (a, b)
    return None


def _meet_witness(f):
    dom, cod = f.dom, f.cod
    if f(dom.top) != cod.top:
        return (dom.top,)
    for a in dom.elements():
        for b in dom.elements():
            if f(dom.meet2(a, b)) != cod.meet2(f(a), f(b)):
                return (a, b)
    return None


def right_adjoint(f):
    """f*(b) = join of everything f sends below b.  Requires all joins."""
    witness = _join_witness(f)
    if witness is not None:
        raise NotJoinPreserving("map does not preserve joins", witness=witness)
    dom, cod = f.dom, f.cod
    values = tuple(
        dom.join([a for a in dom.elements() if cod.leq(f(a), b)])
        for b in cod.elements()
    )
    g = LatticeMap(cod, dom, values)
    assert check_adjunction(f, g)
    return g


def left_adjoint(g):
    """g_*(a) = meet of everything g sends above a.  Requires all meets."""
    witness = _meet_witness(g)
    if witness is not None:
        raise NotMeetPreserving("map does not preserve meets", witness=witness)
    dom, cod = g.dom, g.cod
    values = tuple(
        dom.meet([b for b in dom.elements() if cod.leq(a, g(b))])
        for a in cod.elements()
    )
    f = LatticeMap(cod, dom, values)
    assert check_adjunction(f, g)
    return f


def check_adjunction(f, g):
    """f(a) <= b iff a <= g(b), cross-checked against the unit/counit form."""
    if f.dom is not g.cod and f.dom != g.cod:
        raise ShapeMismatch("dom of left map must equal cod of right map")
    if f.cod is not g.dom and f.cod != g.dom:
        raise ShapeMismatch("cod of left map must equal dom of right map")
    pairwise = all(
        f.cod.leq(f(a), b) == f.dom.leq(a, g(b))
        for a in f.dom.elements()
        for b in f.cod.elements()
    )
    unit_counit = all(f.dom.leq(a, g(f(a))) for a in f.dom.elements()) and all(
        f.cod.leq(f(g(b)), b) for b in f.cod.elements()
    )
    if f.is_isotone() and g.is_isotone():
        assert pairwise == unit_counit
    return pairwise


def compose(f2, f1):
    if f1.cod is not f2.dom and f1.cod != f2.dom:
        raise ShapeMismatch("maps not composable")
    return LatticeMap(f1.dom, f2.cod, tuple(f2(f1(a)) for a in f1.dom.elements()))


def verify_compose_adjoint(f2, f1):
    """(f2 o f1)* equals f1* o f2*."""
    return right_adjoint(compose(f2, f1)) == compose(right_adjoint(f1), right_adjoint(f2))


def map_leq(f, g):
    """Pointwise order on a Hom-set."""
    if f.dom != g.dom or f.cod != g.cod:
        raise ShapeMismatch("maps live in different Hom-sets")
    return all(f.cod.leq(f(a), g(a)) for a in f.dom.elements())


def pointwise_join(fs):
    fs = list(fs)
    if not fs:
        raise EmptyFamily("pointwise join of no maps")
    dom, cod = fs[0].dom, fs[0].cod
    for f in fs:
        if f.dom != dom or f.cod != cod:
            raise ShapeMismatch("family does not share dom/cod")
    return LatticeMap(dom, cod, tuple(cod.join([f(a) for f in fs]) for a in dom.elements()))


def pointwise_meet(gs):
    gs = list(gs)
    if not gs:
        raise EmptyFamily("pointwise meet of no maps")
    dom, cod = gs[0].dom, gs[0].cod
    for g in gs:
        if g.dom != dom or g.cod != cod:
            raise ShapeMismatch("family does not share dom/cod")
    return LatticeMap(dom, cod, tuple(cod.meet([g(a) for g in gs]) for a in dom.elements()))


def dualize(f, direction="join"):
    """Pass between join-preserving and meet-preserving maps via the adjoint."""
    if direction == "join":
        return right_adjoint(f)
    if direction == "meet":
        return left_adjoint(f)
    raise ValueError("direction must be 'join' or 'meet'")


@dataclass(frozen=True)
class SpecialMaps:
    """The eight canonical maps attached to an element a of L."""

    point: LatticeMap  # 2 -> L, 1 |-> a (join preserving)
    above_test: LatticeMap  # L -> 2, x |-> 1 iff a <= x (meet preserving)
    copoint: LatticeMap  # 2 -> L, 0 |-> a (meet preserving)
    below_test: LatticeMap  # L -> 2, x |-> 0 iff x <= a (join preserving)
    inclusion: LatticeMap  # [0,a] -> L, x |-> x
    projection: LatticeMap  # L -> [0,a], x |-> x /\ a
    capped_inclusion: LatticeMap  # [0,a] -> L, a |-> 1
    capped_projection: LatticeMap  # L -> [0,a], x |-> x if x <= a else a
    interval: FiniteLattice


def two_element_lattice():
    from .corpus import chain

    return chain(2)


def point_map(two, lattice, a):
    return LatticeMap(two, lattice, (lattice.bottom, a))


def above_test_map(lattice, two, a):
    return LatticeMap(
        lattice, two, tuple(1 if lattice.leq(a, x) else 0 for x in lattice.elements())
    )


def special_maps(lattice, a, two=None):
    two = two or two_element_lattice()
    interval = lower_interval(lattice, a)
    sub = interval.lattice
    index = {e: i for i, e in enumerate(interval.elements)}
    a_sub = index[a]
    capped_inclusion = LatticeMap(
        sub,
        lattice,
        tuple(lattice.top if x == a_sub else interval.elements[x] for x in sub.elements()),
    )
    capped_projection = LatticeMap(
        lattice,
        sub,
        tuple(
            index[x] if lattice.leq(x, a) else a_sub for x in lattice.elements()
        ),
    )
    return SpecialMaps(
        point=point_map(two, lattice, a),
        above_test=above_test_map(lattice, two, a),
        copoint=LatticeMap(two, lattice, (a, lattice.top)),
        below_test=LatticeMap(
            lattice, two, tuple(0 if lattice.leq(x, a) else 1 for x in lattice.elements())
        ),
        inclusion=interval.inclusion,
        projection=interval.projection,
        capped_inclusion=capped_inclusion,
        capped_projection=capped_projection,
        interval=sub,
    )


def join_irreducibles(lattice):
    """Nonzero elements that are not the join of the elements strictly below."""
    out = []
    for a in lattice.elements():
        if a == lattice.bottom:
            continue
        below = [x for x in lattice.elements() if lattice.leq(x, a) and x != a]
        if lattice.join(below) != a:
            out.append(a)
    return out


def meet_irreducibles(lattice):
    out = []
    for a in lattice.elements():
        if a == lattice.top:
            continue
        above = [x for x in lattice.elements() if lattice.leq(a, x) and x != a]
        if lattice.meet(above) != a:
            out.append(a)
    return out


def _guard(candidates, bound):
    if candidates > bound:
        raise SizeLimit("%d candidate maps exceed bound %d" % (candidates, bound))


def _enumerate_isotone(dom, cod, bound):
    order = sorted(dom.elements(), key=lambda a: len(dom.downset(a)))
    values = [None] * dom.size
    _guard(cod.size ** dom.size, bound)
    out = []

    def assign(k):
        if k == len(order):
            out.append(LatticeMap(dom, cod, tuple(values)))
            return
        x = order[k]
        for v in cod.elements():
            ok = True
            for y in order[:k]:
                if dom.leq(y, x) and not cod.leq(values[y], v):
                    ok = False
                    break
                if dom.leq(x, y) and not cod.leq(v, values[y]):
                    ok = False
                    break
            if ok:
                values[x] = v
                assign(k + 1)
        values[x] = None

    assign(0)
    return out


def _enumerate_join_maps(dom, cod, bound):
    irr = join_irreducibles(dom)
    _guard(cod.size ** len(irr), bound)
    seen = set()
    out = []
    for choice in itertools.product(cod.elements(), repeat=len(irr)):
        values = tuple(
            cod.join([v for j, v in zip(irr, choice) if dom.leq(j, a)])
            for a in dom.elements()
        )
        if values in seen:
            continue
        f = LatticeMap(dom, cod, values)
        if preservation_profile(f).joins:
            seen.add(values)
            out.append(f)
    return out


def _enumerate_meet_maps(dom, cod, bound):
    irr = meet_irreducibles(dom)
    _guard(cod.size ** len(irr), bound)
    seen = set()
    out = []
    for choice in itertools.product(cod.elements(), repeat=len(irr)):
        values = tuple(
            cod.meet([v for m, v in zip(irr, choice) if dom.leq(a, m)])
            for a in dom.elements()
        )
        if values in seen:
            continue
        f = LatticeMap(dom, cod, values)
        if preservation_profile(f).meets:
            seen.add(values)
            out.append(f)
    return out


def hom_set(dom, cod, cls="join", bound=HOM_SET_CANDIDATE_BOUND):
    """Complete, duplicate-free enumeration in lexicographic table order."""
    if cls == "isotone":
        maps = _enumerate_isotone(dom, cod, bound)
    elif cls == "join":
        maps = _enumerate_join_maps(dom, cod, bound)
    elif cls == "meet":
        maps = _enumerate_meet_maps(dom, cod, bound)
    elif cls == "balanced-join":
        maps = [f for f in _enumerate_join_maps(dom, cod, bound) if f(dom.top) == cod.top]
    elif cls == "dense-join":
        maps = [
            f
            for f in _enumerate_join_maps(dom, cod, bound)
            if preservation_profile(f).dense
        ]
    elif cls == "atomic-join":
        targets = set(cod.atoms()) | {cod.bottom}
        maps = [
            f
            for f in _enumerate_join_maps(dom, cod, bound)
            if all(f(p) in targets for p in dom.atoms())
        ]
    else:
        raise ValueError("unknown map class %r" % cls)
    return sorted(maps, key=lambda f: f.values)


@dataclass(frozen=True)
class MorphismFlags:
    epic: bool
    monic: bool
    section: bool
    retraction: bool
    injective: bool
    surjective: bool
    balanced: bool
    dense: bool


def classify_morphism(f, cls="join", bound=HOM_SET_CANDIDATE_BOUND):
    """Classification via the adjoint criteria; one-sided inverses by search."""
    profile = preservation_profile(f)
    if cls == "join":
        if not profile.joins:
            raise NotInClass("map does not preserve joins", witness=_join_witness(f))
        g = right_adjoint(f)
        epic = compose(f, g) == identity_map(f.cod)
        monic = compose(g, f) == identity_map(f.dom)
    elif cls == "meet":
        if not profile.meets:
            raise NotInClass("map does not preserve meets", witness=_meet_witness(f))
        g = left_adjoint(f)
        epic = compose(f, g) == identity_map(f.cod)
        monic = compose(g, f) == identity_map(f.dom)
    else:
        raise ValueError("cls must be 'join' or 'meet'")
    injective = len(set(f.values)) == f.dom.size
    surjective = len(set(f.values)) == f.cod.size
    inverses = hom_set(f.cod, f.dom, cls, bound)
    section = any(compose(h, f) == identity_map(f.dom) for h in inverses)
    retraction = any(compose(f, h) == identity_map(f.cod) for h in inverses)
    return MorphismFlags(
        epic=epic,
        monic=monic,
        section=section,
        retraction=retraction,
        injective=injective,
        surjective=surjective,
        balanced=profile.balanced,
        dense=profile.dense,
    )


def categorical_epi(f, probes, cls="join", bound=HOM_SET_CANDIDATE_BOUND):
    """Slow oracle: quantify over all post-composable map pairs into probes."""
    for probe in probes:
        maps = hom_set(f.cod, probe, cls, bound)
        for h1 in maps:
            for h2 in maps:
                if h1 != h2 and compose(h1, f) == compose(h2, f):
                    return False
    return True


def categorical_mono(f, probes, cls="join", bound=HOM_SET_CANDIDATE_BOUND):
    for probe in probes:
        maps = hom_set(probe, f.dom, cls, bound)
        for h1 in maps:
            for h2 in maps:
                if h1 != h2 and compose(f, h1) == compose(f, h2):
                    return False
    return True
