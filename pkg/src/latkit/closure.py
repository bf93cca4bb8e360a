"""Closure operators as monads on a lattice, closure spaces with partial
continuous maps, the closed-set/atomistic-lattice equivalence, and the
power and Boolean functors."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import FiniteLattice, LatticeMap, lattice_of_sets
from .errors import (
    NotAdjoint,
    NotAtomicMap,
    NotAtomistic,
    NotBoolean,
    NotClosure,
    NotContinuous,
    NotSimple,
    ShapeMismatch,
)
from .maps import check_adjunction, compose, preservation_profile, right_adjoint


@dataclass(frozen=True)
class ClosureOperator:
    lattice: FiniteLattice
    table: tuple[int, ...]

    def __call__(self, a):
        return self.table[a]

    def fixed(self):
        return [a for a in self.lattice.elements() if self.table[a] == a]


def validate_closure(lattice, table):
    table = tuple(table)
    if len(table) != lattice.size:
        raise ShapeMismatch("closure table does not cover the carrier")
    for a in lattice.elements():
        for b in lattice.elements():
            if lattice.leq(a, b) and not lattice.leq(table[a], table[b]):
                raise NotClosure("not isotone", witness=(a, b))
    for a in lattice.elements():
        if not lattice.leq(a, table[a]):
            raise NotClosure("not inflationary", witness=a)
        if table[table[a]] != table[a]:
            raise NotClosure("not idempotent", witness=a)
    return ClosureOperator(lattice, table)


@dataclass(frozen=True)
class FixedPointLattice:
    lattice: FiniteLattice
    elements: tuple[int, ...]  # indices into the ambient carrier
    inclusion: LatticeMap  # fixed points into the ambient lattice
    reflection: LatticeMap  # ambient lattice onto fixed points, a |-> T(a)


def fixed_points(operator):
    """Fixed points ordered as in the ambient lattice.

    Meets are inherited; joins are the closure of the ambient join.  Both
    facts are re-verified against a from-scratch lattice construction.
    """
    ambient = operator.lattice
    elems = tuple(operator.fixed())
    from .core import sublattice_on

    sub = sublattice_on(ambient, elems)
    index = {e: i for i, e in enumerate(elems)}
    for a in elems:
        for b in elems:
            assert elems[sub.meet2(index[a], index[b])] == ambient.meet2(a, b)
            assert elems[sub.join2(index[a], index[b])] == operator(ambient.join2(a, b))
    inclusion = LatticeMap(sub, ambient, elems)
    reflection = LatticeMap(ambient, sub, tuple(index[operator(a)] for a in ambient.elements()))
    return FixedPointLattice(sub, elems, inclusion, reflection)


def monad_from_adjunction(f, g):
    """g o f is a closure whose fixed points are exactly the image of g."""
    if not check_adjunction(f, g):
        raise NotAdjoint("maps are not adjoint")
    operator = validate_closure(f.dom, tuple(g(f(a)) for a in f.dom.elements()))
    assert sorted(operator.fixed()) == g.image()
    return operator


@dataclass(frozen=True)
class ClosureSpace:
    """Point set with an explicit Moore family of closed subsets."""

    size: int
    closed: frozenset[frozenset[int]]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(
                self, "labels", tuple("p%d" % i for i in range(self.size))
            )
        universe = frozenset(range(self.size))
        if universe not in self.closed:
            raise NotClosure("the whole point set must be closed")
        for a in self.closed:
            for b in self.closed:
                if a & b not in self.closed:
                    raise NotClosure("family not intersection closed", witness=(a, b))

    def points(self):
        return range(self.size)

    def closure_of(self, subset):
        subset = frozenset(subset)
        out = frozenset(range(self.size))
        for c in self.closed:
            if subset <= c:
                out &= c
        return out

    def is_simple(self):
        if frozenset() not in self.closed:
            return False
        return all(frozenset([p]) in self.closed for p in self.points())


def closure_of(space, subset):
    return space.closure_of(subset)


def is_simple(space):
    return space.is_simple()


def discrete_space(n):
    family = frozenset(
        frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(n), k)
    )
    return ClosureSpace(n, family)


@dataclass(frozen=True)
class PartialContinuousMap:
    """Partially defined point map whose preimages of closed sets close up
    with the kernel."""

    source: ClosureSpace
    target: ClosureSpace
    kernel: frozenset[int]
    mapping: tuple[tuple[int, int], ...]  # defined point -> image point

    def __post_init__(self):
        defined = {p for p, _ in self.mapping}
        expected = set(self.source.points()) - set(self.kernel)
        if defined != expected:
            raise ShapeMismatch("map must be defined exactly off its kernel")

    def __call__(self, p):
        return dict(self.mapping)[p]

    def defined_points(self):
        return [p for p in self.source.points() if p not in self.kernel]

    def preimage(self, subset):
        table = dict(self.mapping)
        return frozenset(p for p in self.defined_points() if table[p] in subset)


def partial_map(source, target, kernel, mapping):
    return PartialContinuousMap(
        source, target, frozenset(kernel), tuple(sorted(mapping.items()))
    )


def check_continuity(alpha):
    """Kernel union preimage of any closed set must be closed."""
    for closed_set in sorted(alpha.target.closed, key=lambda s: (len(s), sorted(s))):
        pulled = alpha.kernel | alpha.preimage(closed_set)
        if pulled not in alpha.source.closed:
            return False, closed_set
    return True, None


def require_continuous(alpha):
    ok, witness = check_continuity(alpha)
    if not ok:
        raise NotContinuous("preimage of a closed set is not closed", witness=witness)
    return alpha


def compose_continuous(second, first):
    """Kernel of the composite is K1 union the first map's preimage of K2."""
    if first.target != second.source:
        raise ShapeMismatch("maps not composable")
    kernel = first.kernel | first.preimage(second.kernel)
    mapping = {
        p: second(first(p)) for p in first.source.points() if p not in kernel
    }
    composite = partial_map(first.source, second.target, kernel, mapping)
    return require_continuous(composite)


def closed_set_lattice(space):
    """Closed sets ordered by inclusion; atoms are the singletons when simple."""
    lattice, sets = lattice_of_sets(space.closed, space.size)
    return lattice, sets


def space_to_lattice(space):
    if not space.is_simple():
        raise NotSimple("space must have empty set and singletons closed")
    return closed_set_lattice(space)


def map_to_join_map(alpha):
    """Forward functor on morphisms: A |-> closure of the direct image off the kernel."""
    require_continuous(alpha)
    lat1, sets1 = space_to_lattice(alpha.source)
    lat2, sets2 = space_to_lattice(alpha.target)
    index2 = {s: i for i, s in enumerate(sets2)}
    table = dict(alpha.mapping)
    values = []
    for s in sets1:
        image = frozenset(table[p] for p in s if p not in alpha.kernel)
        values.append(index2[alpha.target.closure_of(image)])
    forward = LatticeMap(lat1, lat2, tuple(values))
    index1 = {s: i for i, s in enumerate(sets1)}
    back_values = tuple(
        index1[alpha.source.closure_of(alpha.kernel | alpha.preimage(s))] for s in sets2
    )
    backward = LatticeMap(lat2, lat1, back_values)
    assert check_adjunction(forward, backward)
    return forward, backward


def lattice_to_space(lattice):
    """Atoms with closure A |-> atoms below the join of A."""
    if not lattice.is_atomistic():
        raise NotAtomistic("lattice must be atomistic")
    ats = lattice.atoms()
    position = {p: i for i, p in enumerate(ats)}
    family = set()
    for a in lattice.elements():
        family.add(frozenset(position[p] for p in ats if lattice.leq(p, a)))
    space = ClosureSpace(len(ats), frozenset(family), tuple(lattice.labels[p] for p in ats))
    assert space.is_simple()
    return space, ats


def join_map_to_partial(f):
    """Backward functor on morphisms: kernel where f kills an atom."""
    space1, ats1 = lattice_to_space(f.dom)
    space2, ats2 = lattice_to_space(f.cod)
    position2 = {p: i for i, p in enumerate(ats2)}
    allowed = set(f.cod.atoms()) | {f.cod.bottom}
    for p in ats1:
        if f(p) not in allowed:
            raise NotAtomicMap("map sends an atom outside atoms and bottom", witness=p)
    kernel = frozenset(i for i, p in enumerate(ats1) if f(p) == f.cod.bottom)
    mapping = {i: position2[f(p)] for i, p in enumerate(ats1) if i not in kernel}
    return require_continuous(partial_map(space1, space2, kernel, mapping))


@dataclass(frozen=True)
class RoundtripReport:
    passed: bool
    detail: str


def space_roundtrip(space):
    """p |-> {p} must be an isomorphism onto the closed-set lattice's space."""
    lattice, sets = space_to_lattice(space)
    back, ats = lattice_to_space(lattice)
    # Atom i of the closed-set lattice is the singleton set; match points up.
    atom_of = {}
    for i, a in enumerate(ats):
        (point,) = sets[a]
        atom_of[point] = i
    if sorted(atom_of) != list(space.points()):
        return RoundtripReport(False, "atom/point mismatch")
    for mask in range(1 << space.size):
        subset = frozenset(p for p in space.points() if mask >> p & 1)
        transported = frozenset(atom_of[p] for p in subset)
        if (subset in space.closed) != (transported in back.closed):
            return RoundtripReport(False, "closed families differ at %s" % sorted(subset))
    return RoundtripReport(True, "bijective and bicontinuous")


def lattice_roundtrip(lattice):
    """a |-> atoms below a must be an order isomorphism onto closed sets."""
    space, ats = lattice_to_space(lattice)
    closed_lattice, sets = space_to_lattice(space)
    position = {p: i for i, p in enumerate(ats)}
    index = {s: i for i, s in enumerate(sets)}
    psi = []
    for a in lattice.elements():
        image = frozenset(position[p] for p in ats if lattice.leq(p, a))
        if image not in index:
            return RoundtripReport(False, "image of %s not closed" % lattice.labels[a]), None
        psi.append(index[image])
    if len(set(psi)) != lattice.size or closed_lattice.size != lattice.size:
        return RoundtripReport(False, "not bijective"), None
    for a in lattice.elements():
        for b in lattice.elements():
            if lattice.leq(a, b) != closed_lattice.leq(psi[a], psi[b]):
                return RoundtripReport(False, "order not preserved"), None
    return RoundtripReport(True, "order isomorphism"), LatticeMap(
        lattice, closed_lattice, tuple(psi)
    )


def power_functors(mapping, n_source, n_target):
    """Direct image and preimage on full powerset lattices, as an adjoint pair."""
    source = discrete_space(n_source)
    target = discrete_space(n_target)
    lat1, sets1 = closed_set_lattice(source)
    lat2, sets2 = closed_set_lattice(target)
    index1 = {s: i for i, s in enumerate(sets1)}
    index2 = {s: i for i, s in enumerate(sets2)}
    direct = LatticeMap(
        lat1, lat2, tuple(index2[frozenset(mapping[p] for p in s)] for s in sets1)
    )
    inverse = LatticeMap(
        lat2,
        lat1,
        tuple(index1[frozenset(p for p in range(n_source) if mapping[p] in s)] for s in sets2),
    )
    assert check_adjunction(direct, inverse)
    return direct, inverse


def is_boolean(lattice):
    """Finite Boolean means atomistic with 2^atoms elements and complements."""
    if not lattice.is_atomistic():
        return False
    return lattice.size == 1 << len(lattice.atoms())


@dataclass(frozen=True)
class BooleanDualityReport:
    atom_unit_identity: bool  # atom-set map composed with join is the identity
    set_unit_identity: bool  # join composed with atom-set map is the identity
    atoms_to_atoms: bool
    ortho_preserved_by_adjoint: bool
    agree: bool


def atom_set_maps(lattice):
    """mu: a |-> its atoms, and rho: a set of atoms |-> its join."""
    if not is_boolean(lattice):
        raise NotBoolean("lattice is not a finite Boolean algebra")
    ats = lattice.atoms()
    position = {p: i for i, p in enumerate(ats)}
    space = discrete_space(len(ats))
    powerset, sets = closed_set_lattice(space)
    index = {s: i for i, s in enumerate(sets)}
    mu = LatticeMap(
        lattice,
        powerset,
        tuple(
            index[frozenset(position[p] for p in ats if lattice.leq(p, a))]
            for a in lattice.elements()
        ),
    )
    rho = LatticeMap(
        powerset, lattice, tuple(lattice.join([ats[i] for i in s]) for s in sets)
    )
    return mu, rho


def boolean_duality(f, g):
    """For an adjunction between finite Boolean lattices: atoms-to-atoms on the
    left iff the right adjoint commutes with complement."""
    if not (is_boolean(f.dom) and is_boolean(f.cod)):
        raise NotBoolean("both lattices must be finite Boolean algebras")
    if not check_adjunction(f, g):
        raise NotAdjoint("maps are not adjoint")
    from .corpus import boolean_ortho

    ortho2 = boolean_ortho(f.cod)
    ortho1 = boolean_ortho(f.dom)
    atoms_to_atoms = all(f(p) in set(f.cod.atoms()) for p in f.dom.atoms())
    ortho_preserved = all(g(ortho2[b]) == ortho1[g(b)] for b in f.cod.elements())
    mu1, rho1 = atom_set_maps(f.dom)
    return BooleanDualityReport(
        atom_unit_identity=compose(rho1, mu1).values == tuple(f.dom.elements()),
        set_unit_identity=compose(mu1, rho1).values == tuple(mu1.cod.elements()),
        atoms_to_atoms=atoms_to_atoms,
        ortho_preserved_by_adjoint=ortho_preserved,
        agree=atoms_to_atoms == ortho_preserved,
    )
