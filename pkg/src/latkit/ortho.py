"""Orthocomplemented lattices, conjugation and dagger calculus, orthospaces,
and the biorthogonal closure."""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteLattice, LatticeMap, lattice_of_sets
from .errors import (
    NotAtomistic,
    NotCOLattMorphism,
    NotJoinPreserving,
    NotSeparating,
    OrthoAxiomFailed,
    ShapeMismatch,
)
from .maps import (
    compose,
    identity_map,
    left_adjoint,
    preservation_profile,
    right_adjoint,
)


@dataclass(frozen=True)
class OrthoLattice:
    lattice: FiniteLattice
    ortho: tuple[int, ...]  # a |-> a'

    @property
    def size(self):
        return self.lattice.size

    def comp(self, a):
        return self.ortho[a]


def validate_ortho(lattice, ortho):
    """Check order reversal, involution, and a /\\ a' = 0; derive a \\/ a' = 1."""
    ortho = tuple(ortho)
    if len(ortho) != lattice.size:
        raise ShapeMismatch("ortho table does not cover the carrier")
    for a in lattice.elements():
        for b in lattice.elements():
            if lattice.leq(a, b) and not lattice.leq(ortho[b], ortho[a]):
                raise OrthoAxiomFailed("orthocomplement not order reversing", witness=(a, b))
    for a in lattice.elements():
        if ortho[ortho[a]] != a:
            raise OrthoAxiomFailed("orthocomplement not involutive", witness=a)
        if lattice.meet2(a, ortho[a]) != lattice.bottom:
            raise OrthoAxiomFailed("a /\\ a' is not bottom", witness=a)
        # Follows from the three axioms by De Morgan through the involution.
        assert lattice.join2(a, ortho[a]) == lattice.top, "derived a \\/ a' = 1 failed"
    return OrthoLattice(lattice, ortho)


def conjugate(alpha, dom, cod):
    """a |-> alpha(a')' for an isotone map between ortholattices."""
    if alpha.dom != dom.lattice or alpha.cod != cod.lattice:
        raise ShapeMismatch("map does not match the given ortholattices")
    return LatticeMap(
        alpha.dom,
        alpha.cod,
        tuple(cod.comp(alpha(dom.comp(a))) for a in alpha.dom.elements()),
    )


def dagger(f, dom, cod):
    """Orthoadjoint of a join-preserving map: the conjugate of its right adjoint."""
    if f.dom != dom.lattice or f.cod != cod.lattice:
        raise ShapeMismatch("map does not match the given ortholattices")
    adj = right_adjoint(f)  # raises NotJoinPreserving with witness
    return conjugate(adj, cod, dom)


def is_isometry(u, dom, cod):
    """u dagger-composed with itself is the identity; two oracles must agree."""
    via_dagger = compose(dagger(u, dom, cod), u) == identity_map(u.dom)
    via_order = all(
        u.dom.leq(a, dom.comp(b)) == u.cod.leq(u(a), cod.comp(u(b)))
        for a in u.dom.elements()
        for b in u.dom.elements()
    )
    assert via_dagger == via_order, "isometry oracles disagree"
    return via_dagger


@dataclass(frozen=True)
class ColattReport:
    passed: bool
    failures: tuple[str, ...]


def colatt_check(h, dom, cod):
    """For a join/meet/ortho-preserving map: adjoint-complement compatibility,
    the dagger collapse, and partial isometry."""
    profile = preservation_profile(h)
    if not (profile.joins and profile.meets):
        raise NotCOLattMorphism("map must preserve joins and meets")
    for a in h.dom.elements():
        if h(dom.comp(a)) != cod.comp(h(a)):
            raise NotCOLattMorphism("map does not preserve orthocomplement", witness=a)
    upper = right_adjoint(h)
    lower = left_adjoint(h)
    failures = []
    for b in h.cod.elements():
        if lower(cod.comp(b)) != dom.comp(upper(b)):
            failures.append("left adjoint of complement != complement of right adjoint at %d" % b)
    if dagger(h, dom, cod) != lower:
        failures.append("dagger differs from left adjoint")
    if compose(h, compose(dagger(h, dom, cod), h)) != h:
        failures.append("h o h-dagger o h differs from h")
    return ColattReport(passed=not failures, failures=tuple(failures))


@dataclass(frozen=True)
class OrthoSpace:
    """Point set with a symmetric, antireflexive, separating orthogonality."""

    size: int
    orth: tuple[int, ...]  # bitmask rows: bit q of orth[p] set iff p _|_ q
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(
                self, "labels", tuple("p%d" % i for i in range(self.size))
            )

    def perp(self, p, q):
        return bool(self.orth[p] >> q & 1)

    def points(self):
        return range(self.size)

    def orthogonal_set(self, subset):
        out = []
        for q in self.points():
            if all(self.perp(p, q) for p in subset):
                out.append(q)
        return frozenset(out)

    def biclosure(self, subset):
        return self.orthogonal_set(self.orthogonal_set(subset))


def validate_orthospace(space, require_separating=True):
    for p in space.points():
        if space.perp(p, p):
            raise OrthoAxiomFailed("orthogonality not antireflexive", witness=p)
        for q in space.points():
            if space.perp(p, q) != space.perp(q, p):
                raise OrthoAxiomFailed("orthogonality not symmetric", witness=(p, q))
    if require_separating:
        for p in space.points():
            for q in space.points():
                if p != q and not any(
                    space.perp(p, r) and not space.perp(q, r) for r in space.points()
                ):
                    raise NotSeparating("points %d and %d not separated" % (p, q), witness=(p, q))
    return space


def orthospace_from_lattice(ol):
    """Atoms with p _|_ q iff p <= q'."""
    lattice = ol.lattice
    if not lattice.is_atomistic():
        raise NotAtomistic("carrier is not atomistic")
    ats = lattice.atoms()
    rows = []
    for p in ats:
        row = 0
        for j, q in enumerate(ats):
            if lattice.leq(p, ol.comp(q)):
                row |= 1 << j
        rows.append(row)
    space = OrthoSpace(len(ats), tuple(rows), tuple(lattice.labels[p] for p in ats))
    return validate_orthospace(space), ats


def biortho_lattice(space):
    """Ortholattice of biorthogonal subsets ordered by inclusion."""
    for p in space.points():
        if space.biclosure(frozenset([p])) != frozenset([p]):
            raise NotSeparating("singleton %d not biorthogonal" % p, witness=p)
    subsets = []
    seen = set()
    # Every biorthogonal set is an orthogonal-set of something.
    for mask in range(1 << space.size):
        subset = frozenset(p for p in space.points() if mask >> p & 1)
        closed = space.biclosure(subset)
        if closed not in seen:
            seen.add(closed)
            subsets.append(closed)
    lattice, sets = lattice_of_sets(subsets, space.size)
    index = {s: i for i, s in enumerate(sets)}
    ortho = tuple(index[space.orthogonal_set(s)] for s in sets)
    return validate_ortho(lattice, ortho), sets


def lattice_isomorphic_with_ortho(left, right):
    """Search for an order isomorphism preserving the orthocomplement."""
    import itertools

    if left.size != right.size:
        return None
    la, ra = left.lattice, right.lattice
    for perm in itertools.permutations(range(right.size)):
        if all(
            la.leq(a, b) == ra.leq(perm[a], perm[b])
            for a in la.elements()
            for b in la.elements()
        ) and all(perm[left.comp(a)] == right.comp(perm[a]) for a in la.elements()):
            return perm
    return None
