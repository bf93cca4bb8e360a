"""Finite posets and complete lattices.

Elements are identified by index; labels are cosmetic.  The order relation
is kept as one bitmask row per element (bit j of ``up[i]`` set iff i <= j),
and join/meet tables are precomputed at construction so everything above
this module is a table lookup.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import (
    CycleDetected,
    FactorTooSmall,
    NotALattice,
    NotTransitive,
    ShapeMismatch,
    SizeLimit,
    ValidationError,
)

# Default bound for any lattice-producing construction.
MAX_LATTICE_SIZE = 64
# Default bound for anything materializing a truncated powerset.
MAX_POWER_BASE = 16


@dataclass(frozen=True)
class FinitePoset:
    """Finite partially ordered set.

    up[i] is the bitmask of elements j with i <= j.
    """

    up: tuple[int, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(
                self, "labels", tuple("e%d" % i for i in range(len(self.up)))
            )
        if len(self.labels) != len(self.up):
            raise ShapeMismatch("label count does not match element count")

    @property
    def size(self):
        return len(self.up)

    def leq(self, a, b):
        return bool(self.up[a] >> b & 1)

    def elements(self):
        return range(len(self.up))

    def validate(self):
        n = self.size
        for a in range(n):
            if not self.leq(a, a):
                raise ValidationError("order not reflexive", witness=a)
        for a in range(n):
            for b in range(n):
                if a != b and self.leq(a, b) and self.leq(b, a):
                    raise CycleDetected(
                        "antisymmetry fails at %s, %s" % (self.labels[a], self.labels[b]),
                        witness=(a, b),
                    )
        for a in range(n):
            reach = self.up[a]
            closed = reach
            for b in range(n):
                if reach >> b & 1:
                    closed |= self.up[b]
            if closed != reach:
                raise NotTransitive(
                    "transitivity fails above %s" % self.labels[a], witness=a
                )
        return self

    def covers(self, a):
        """Elements covering a: minimal elements strictly above a."""
        strictly_above = [b for b in self.elements() if b != a and self.leq(a, b)]
        out = []
        for b in strictly_above:
            if not any(c != b and self.leq(c, b) for c in strictly_above):
                out.append(b)
        return out

    def cover_pairs(self):
        return [(a, b) for a in self.elements() for b in self.covers(a)]


def build_poset(n, pairs, mode="covers", labels=None):
    """Build a poset from ordered pairs.

    covers mode takes the reflexive-transitive closure; full mode validates
    the given relation as-is (the diagonal is supplied automatically).
    """
    if mode not in ("covers", "full-leq"):
        raise ValueError("unknown mode %r" % mode)
    up = [1 << i for i in range(n)]
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise ShapeMismatch("pair (%d, %d) out of range for n=%d" % (a, b, n))
        up[a] |= 1 << b
    poset = FinitePoset(tuple(up), tuple(labels) if labels else ())
    if mode == "covers":
        # Warshall-style transitive closure on the bitmask rows.
        up = list(poset.up)
        for k in range(n):
            for i in range(n):
                if up[i] >> k & 1:
                    up[i] |= up[k]
        poset = FinitePoset(tuple(up), poset.labels)
        for a in range(n):
            for b in range(n):
                if a != b and poset.leq(a, b) and poset.leq(b, a):
                    raise CycleDetected(
                        "cycle through %s and %s"
                        % (poset.labels[a], poset.labels[b]),
                        witness=(a, b),
                    )
        return poset
    return poset.validate()


@dataclass(frozen=True)
class FiniteLattice:
    """Complete lattice on a finite carrier with precomputed tables."""

    poset: FinitePoset
    bottom: int
    top: int
    join_table: tuple[tuple[int, ...], ...]
    meet_table: tuple[tuple[int, ...], ...]

    @property
    def size(self):
        return self.poset.size

    @property
    def labels(self):
        return self.poset.labels

    def elements(self):
        return range(self.size)

    def leq(self, a, b):
        return self.poset.leq(a, b)

    def join2(self, a, b):
        return self.join_table[a][b]

    def meet2(self, a, b):
        return self.meet_table[a][b]

    def join(self, subset):
        out = self.bottom
        for a in subset:
            out = self.join_table[out][a]
        return out

    def meet(self, subset):
        out = self.top
        for a in subset:
            out = self.meet_table[out][a]
        return out

    def atoms(self):
        return self.poset.covers(self.bottom)

    def coatoms(self):
        return [a for a in self.elements() if self.top in self.poset.covers(a)]

    def is_atomistic(self):
        ats = self.atoms()
        for a in self.elements():
            below = [p for p in ats if self.leq(p, a)]
            if self.join(below) != a:
                return False
        return True

    def downset(self, a):
        """Elements <= a, in index order."""
        return [x for x in self.elements() if self.leq(x, a)]


def lattice_from_poset(poset):
    """Compute bounds and join/meet tables; fails if any lub/glb is missing."""
    poset.validate()
    n = poset.size
    if n == 0:
        raise NotALattice("empty carrier has no bounds")
    bottoms = [a for a in range(n) if all(poset.leq(a, b) for b in range(n))]
    tops = [a for a in range(n) if all(poset.leq(b, a) for b in range(n))]
    if not bottoms:
        raise NotALattice("no bottom element")
    if not tops:
        raise NotALattice("no top element")
    bottom, top = bottoms[0], tops[0]
    join_rows = []
    meet_rows = []
    for a in range(n):
        jrow = []
        mrow = []
        for b in range(n):
            uppers = [c for c in range(n) if poset.leq(a, c) and poset.leq(b, c)]
            least = [c for c in uppers if all(poset.leq(c, d) for d in uppers)]
            if not least:
                raise NotALattice(
                    "no least upper bound for %s, %s"
                    % (poset.labels[a], poset.labels[b]),
                    witness=(a, b),
                )
            jrow.append(least[0])
            lowers = [c for c in range(n) if poset.leq(c, a) and poset.leq(c, b)]
            greatest = [c for c in lowers if all(poset.leq(d, c) for d in lowers)]
            if not greatest:
                raise NotALattice(
                    "no greatest lower bound for %s, %s"
                    % (poset.labels[a], poset.labels[b]),
                    witness=(a, b),
                )
            mrow.append(greatest[0])
        join_rows.append(tuple(jrow))
        meet_rows.append(tuple(mrow))
    return FiniteLattice(poset, bottom, top, tuple(join_rows), tuple(meet_rows))


def join(lattice, subset):
    return lattice.join(subset)


def meet(lattice, subset):
    return lattice.meet(subset)


def atoms(lattice):
    return lattice.atoms()


def is_atomistic(lattice):
    return lattice.is_atomistic()


@dataclass(frozen=True)
class LatticeMap:
    """Total map between lattice carriers, stored as a value table."""

    dom: FiniteLattice
    cod: FiniteLattice
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.dom.size:
            raise ShapeMismatch("value table does not cover the domain")
        for v in self.values:
            if not 0 <= v < self.cod.size:
                raise ShapeMismatch("value %d outside codomain" % v)

    def __call__(self, a):
        return self.values[a]

    def is_isotone(self):
        for a in self.dom.elements():
            for b in self.dom.elements():
                if self.dom.leq(a, b) and not self.cod.leq(self.values[a], self.values[b]):
                    return False
        return True

    def image(self):
        return sorted(set(self.values))


def identity_map(lattice):
    return LatticeMap(lattice, lattice, tuple(lattice.elements()))


def constant_map(dom, cod, value):
    return LatticeMap(dom, cod, (value,) * dom.size)


@dataclass(frozen=True)
class Interval:
    """Lower interval [0, a] with its inclusion and meet-projection."""

    lattice: FiniteLattice
    elements: tuple[int, ...]
    inclusion: LatticeMap
    projection: LatticeMap


def sublattice_on(lattice, elems, labels=None):
    """Restrict the order to elems (must be meet/join closed to be a lattice)."""
    index = {e: i for i, e in enumerate(elems)}
    up = []
    for a in elems:
        row = 0
        for b in elems:
            if lattice.leq(a, b):
                row |= 1 << index[b]
        up.append(row)
    if labels is None:
        labels = tuple(lattice.labels[e] for e in elems)
    return lattice_from_poset(FinitePoset(tuple(up), tuple(labels)))


def lower_interval(lattice, a):
    elems = tuple(lattice.downset(a))
    sub = sublattice_on(lattice, elems)
    index = {e: i for i, e in enumerate(elems)}
    inclusion = LatticeMap(sub, lattice, elems)
    projection = LatticeMap(
        lattice, sub, tuple(index[lattice.meet2(x, a)] for x in lattice.elements())
    )
    return Interval(sub, elems, inclusion, projection)


@dataclass(frozen=True)
class Product:
    lattice: FiniteLattice
    factors: tuple[FiniteLattice, ...]
    elements: tuple[tuple[int, ...], ...]
    projections: tuple[LatticeMap, ...]
    bottom_sections: tuple[LatticeMap, ...]  # pad the other factors with 0
    top_sections: tuple[LatticeMap, ...]  # pad the other factors with 1


def direct_product(factors, max_size=MAX_LATTICE_SIZE):
    if not factors:
        raise ShapeMismatch("need at least one factor")
    total = 1
    for f in factors:
        total *= f.size
    if total > max_size:
        raise SizeLimit("product carrier %d exceeds bound %d" % (total, max_size))
    elems = tuple(itertools.product(*[range(f.size) for f in factors]))
    index = {e: i for i, e in enumerate(elems)}
    up = []
    for a in elems:
        row = 0
        for b in elems:
            if all(f.leq(x, y) for f, x, y in zip(factors, a, b)):
                row |= 1 << index[b]
        up.append(row)
    if len(factors) == 1:
        labels = tuple(factors[0].labels[e[0]] for e in elems)
    else:
        labels = tuple(
            "(%s)" % ",".join(f.labels[x] for f, x in zip(factors, e)) for e in elems
        )
    lattice = lattice_from_poset(FinitePoset(tuple(up), labels))
    projections = []
    bottom_sections = []
    top_sections = []
    for k, f in enumerate(factors):
        projections.append(LatticeMap(lattice, f, tuple(e[k] for e in elems)))
        lo = []
        hi = []
        for b in f.elements():
            lo.append(index[tuple(b if i == k else g.bottom for i, g in enumerate(factors))])
            hi.append(index[tuple(b if i == k else g.top for i, g in enumerate(factors))])
        bottom_sections.append(LatticeMap(f, lattice, tuple(lo)))
        top_sections.append(LatticeMap(f, lattice, tuple(hi)))
    return Product(
        lattice,
        tuple(factors),
        elems,
        tuple(projections),
        tuple(bottom_sections),
        tuple(top_sections),
    )


@dataclass(frozen=True)
class HorizontalSum:
    lattice: FiniteLattice
    factors: tuple[FiniteLattice, ...]
    inclusions: tuple[LatticeMap, ...]  # interior elements kept, bounds shared
    top_collapses: tuple[LatticeMap, ...]  # foreign interiors sent to 1
    bottom_collapses: tuple[LatticeMap, ...]  # foreign interiors sent to 0


def horizontal_sum(factors, max_size=MAX_LATTICE_SIZE):
    """Disjoint union of interiors with shared bottom and top."""
    for f in factors:
        if f.size < 2:
            raise FactorTooSmall("horizontal sum factor needs >= 2 elements")
    interiors = [
        [e for e in f.elements() if e not in (f.bottom, f.top)] for f in factors
    ]
    total = 2 + sum(len(i) for i in interiors)
    if total > max_size:
        raise SizeLimit("sum carrier %d exceeds bound %d" % (total, max_size))
    # Index 0 is the shared bottom, last index the shared top.
    labels = ["0"]
    where = {}  # (factor, element) -> sum index
    for k, f in enumerate(factors):
        for e in interiors[k]:
            where[(k, e)] = len(labels)
            labels.append("L%d:%s" % (k + 1, f.labels[e]))
    top = len(labels)
    labels.append("1")
    n = top + 1
    up = [0] * n
    for i in range(n):
        up[i] |= 1 << i
        up[0] |= 1 << i
        up[i] |= 1 << top
    for k, f in enumerate(factors):
        for a in interiors[k]:
            for b in interiors[k]:
                if f.leq(a, b):
                    up[where[(k, a)]] |= 1 << where[(k, b)]
    lattice = lattice_from_poset(FinitePoset(tuple(up), tuple(labels)))
    inclusions = []
    top_collapses = []
    bottom_collapses = []
    for k, f in enumerate(factors):
        inc = []
        for e in f.elements():
            if e == f.bottom:
                inc.append(0)
            elif e == f.top:
                inc.append(top)
            else:
                inc.append(where[(k, e)])
        inclusions.append(LatticeMap(f, lattice, tuple(inc)))
        back = dict((v, e) for e, v in zip(f.elements(), inc))
        sigma = []
        rho = []
        for x in range(n):
            if x in back:
                sigma.append(back[x])
                rho.append(back[x])
            else:
                sigma.append(f.top)
                rho.append(f.bottom)
        top_collapses.append(LatticeMap(lattice, f, tuple(sigma)))
        bottom_collapses.append(LatticeMap(lattice, f, tuple(rho)))
    return HorizontalSum(
        lattice,
        tuple(factors),
        tuple(inclusions),
        tuple(top_collapses),
        tuple(bottom_collapses),
    )


def upper_extension(lattice):
    """Adjoin a new top strictly above the old one."""
    n = lattice.size
    up = [row | 1 << n for row in lattice.poset.up]
    up.append(1 << n)
    labels = lattice.labels + ("**1**",)
    return lattice_from_poset(FinitePoset(tuple(up), labels))


def lattice_of_sets(family, universe_size, labels=None):
    """Lattice of a family of sets ordered by inclusion."""
    sets = sorted(set(map(frozenset, family)), key=lambda s: (len(s), sorted(s)))
    index = {s: i for i, s in enumerate(sets)}
    up = []
    for a in sets:
        row = 0
        for b in sets:
            if a <= b:
                row |= 1 << index[b]
        up.append(row)
    if labels is None:
        labels = tuple("{%s}" % ",".join(map(str, sorted(s))) for s in sets)
    return lattice_from_poset(FinitePoset(tuple(up), tuple(labels))), sets


def random_moore_lattice(seed, n_points, n_generators, max_points=MAX_POWER_BASE):
    """Deterministic random Moore family on n_points, as a lattice of closed sets."""
    if n_points > max_points:
        raise SizeLimit("%d points exceeds bound %d" % (n_points, max_points))
    rng = random.Random(seed)
    universe = frozenset(range(n_points))
    family = {universe}
    for _ in range(n_generators):
        subset = frozenset(p for p in range(n_points) if rng.random() < 0.5)
        family.add(subset)
    # Close under pairwise intersection to a Moore family.
    changed = True
    while changed:
        changed = False
        for a, b in itertools.combinations(list(family), 2):
            c = a & b
            if c not in family:
                family.add(c)
                changed = True
    lattice, _ = lattice_of_sets(family, n_points)
    return lattice
