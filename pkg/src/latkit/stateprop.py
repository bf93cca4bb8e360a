"""State-property systems over atomistic lattices: atom-set maps, the center
and classical direct-product decomposition, observable spectrum splitting,
causal relations with their weak meet morphisms, and evolution adjoints."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import FiniteLattice, LatticeMap, direct_product, lower_interval
from .errors import (
    NotAtomistic,
    NotBalancedAtZero,
    NotBoolean,
    NotCOLattMorphism,
    NotFullyIsotone,
    NotMeetStable,
    NotWeakMeet,
    ShapeMismatch,
    ValidationError,
)
from .maps import compose, identity_map, left_adjoint, preservation_profile, right_adjoint
from .ortho import OrthoLattice, validate_ortho
from .weak import UpperMap, WeakMeetMap, pointed_extend


@dataclass(frozen=True)
class StatePropertySystem:
    """Atomistic ortholattice of properties with its atoms as states."""

    properties: OrthoLattice
    states: tuple[int, ...]  # atoms, in carrier order

    def atom_support(self, a):
        """The set of states actualizing property a."""
        L = self.properties.lattice
        return frozenset(p for p in self.states if L.leq(p, a))

    def property_of_state(self, p):
        return p

    def state_orthogonal(self, p, q):
        """p and q orthogonal as states: p below the complement of q."""
        return self.properties.lattice.leq(p, self.properties.comp(q))


def build_system(ortho_lattice):
    lattice = ortho_lattice.lattice
    if not lattice.is_atomistic():
        raise NotAtomistic("property lattice must be atomistic")
    system = StatePropertySystem(ortho_lattice, tuple(lattice.atoms()))
    # Support map injectivity and meet-to-intersection, exhaustively.
    supports = [system.atom_support(a) for a in lattice.elements()]
    if len(set(supports)) != lattice.size:
        raise NotAtomistic("atom support map is not injective")
    for mask in range(1 << lattice.size):
        subset = [a for a in lattice.elements() if mask >> a & 1]
        meet_support = system.atom_support(lattice.meet(subset))
        inter = frozenset(system.states)
        for a in subset:
            inter &= supports[a]
        assert meet_support == inter, "support of meet differs from intersection"
    return system


def center(ortho_lattice):
    """Elements z with every atom below z or below z'."""
    L = ortho_lattice.lattice
    if not L.is_atomistic():
        raise NotAtomistic("center computation requires an atomistic carrier")
    ats = L.atoms()
    out = []
    for z in L.elements():
        if all(L.leq(p, z) or L.leq(p, ortho_lattice.comp(z)) for p in ats):
            out.append(z)
    return out


def center_sublattice(ortho_lattice):
    from .core import sublattice_on

    elems = center(ortho_lattice)
    L = ortho_lattice.lattice
    sub = sublattice_on(L, elems, [L.labels[e] for e in elems])
    # Closed under complement, join and meet by construction; verify anyway.
    elem_set = set(elems)
    for z in elems:
        assert ortho_lattice.comp(z) in elem_set
        for w in elems:
            assert L.join2(z, w) in elem_set
            assert L.meet2(z, w) in elem_set
    return sub, elems


@dataclass(frozen=True)
class Decomposition:
    product: FiniteLattice
    factors: tuple[FiniteLattice, ...]
    factor_tops: tuple[int, ...]  # atoms of the center, in carrier order
    iso: LatticeMap  # carrier -> product


def classical_decomposition(ortho_lattice):
    """Split the lattice over the atoms of its center into lower intervals."""
    L = ortho_lattice.lattice
    sub, elems = center_sublattice(ortho_lattice)
    # Atoms of the center, read inside the center sublattice.
    center_atoms = [elems[i] for i in sub.atoms()]
    if not center_atoms:
        # One-element lattice: a single trivial factor.
        center_atoms = [L.top]
    intervals = [lower_interval(L, alpha) for alpha in center_atoms]
    factors = [iv.lattice for iv in intervals]
    product = direct_product(factors)
    tuple_index = {t: i for i, t in enumerate(product.elements)}
    values = []
    for a in L.elements():
        coords = []
        for iv, alpha in zip(intervals, center_atoms):
            coords.append(iv.elements.index(L.meet2(a, alpha)))
        values.append(tuple_index[tuple(coords)])
    iso = LatticeMap(L, product.lattice, tuple(values))
    if len(set(iso.values)) != L.size or product.lattice.size != L.size:
        raise ValidationError("decomposition map is not a bijection")
    for a in L.elements():
        for b in L.elements():
            assert L.leq(a, b) == product.lattice.leq(iso(a), iso(b))
    return Decomposition(product.lattice, tuple(factors), tuple(center_atoms), iso)


def is_boolean_ortho(ortho_lattice):
    L = ortho_lattice.lattice
    return L.is_atomistic() and L.size == 1 << len(L.atoms())


@dataclass(frozen=True)
class SpectrumReport:
    null_part: int  # N: largest property reported impossible
    discrete_part: int  # D: join of sharp outcomes
    continuous_part: int  # C: what remains; zero on finite carriers
    discrete_interval: "object"
    continuous_interval: "object"


def observable_spectrum(m, dom_ortho, cod_ortho):
    """Split the outcome lattice of a question-valued observable.

    m maps a Boolean outcome lattice into the property lattice and must
    preserve joins, meets and the orthocomplement.
    """
    B = m.dom
    if not is_boolean_ortho(dom_ortho) or dom_ortho.lattice != B:
        raise NotBoolean("observable domain must be a Boolean ortholattice")
    profile = preservation_profile(m)
    if not (profile.joins and profile.meets):
        raise NotCOLattMorphism("observable must preserve joins and meets")
    for a in B.elements():
        if m(dom_ortho.comp(a)) != cod_ortho.comp(m(a)):
            raise NotCOLattMorphism("observable does not preserve complement", witness=a)
    adj = right_adjoint(m)
    null_part = adj(m.cod.bottom)
    comp_null = dom_ortho.comp(null_part)
    discrete = B.join([e for e in B.atoms() if B.leq(e, comp_null)])
    continuous = B.meet2(dom_ortho.comp(discrete), comp_null)
    # A finite interval with no atoms is trivial, so the leftover part must
    # vanish; anything else means the input does not model a finite system.
    if continuous != B.bottom:
        raise ValidationError(
            "nonzero residual spectrum part on a finite carrier", witness=continuous
        )
    assert B.meet2(null_part, discrete) == B.bottom
    assert B.join([null_part, discrete, continuous]) == B.top
    disc_iv = lower_interval(B, discrete)
    cont_iv = lower_interval(B, continuous)
    assert disc_iv.lattice.is_atomistic()
    return SpectrumReport(null_part, discrete, continuous, disc_iv, cont_iv)


@dataclass(frozen=True)
class CausalRelation:
    """Relation telling which earlier properties guarantee later ones."""

    source: FiniteLattice
    target: FiniteLattice
    pairs: frozenset[tuple[int, int]]

    def holds(self, a1, a2):
        return (a1, a2) in self.pairs


def validate_causal(relation):
    src, tgt, pairs = relation.source, relation.target, relation.pairs
    for (a1, a2) in pairs:
        for x1 in src.elements():
            for x2 in tgt.elements():
                if src.leq(x1, a1) and tgt.leq(a2, x2) and (x1, x2) not in pairs:
                    raise NotFullyIsotone(
                        "relation misses a dominated pair", witness=((a1, a2), (x1, x2))
                    )
    for a1 in src.elements():
        targets = [a2 for a2 in tgt.elements() if (a1, a2) in pairs]
        if targets and (a1, tgt.meet(targets)) not in pairs:
            raise NotMeetStable(
                "relation not stable under meets on the right",
                witness=(a1, targets),
            )
    return relation


def causal_closure(source, target, seed_pairs):
    """Smallest relation containing the seed pairs that supports the
    representation law; for generating test inputs, not for repairing
    user data.

    Besides the two validity rules, the closure adds joins on the left:
    without that a generated relation need not be recoverable from its
    weak meet morphism.
    """
    pairs = set(seed_pairs)
    changed = True
    while changed:
        changed = False
        for (a1, a2) in list(pairs):
            for x1 in source.elements():
                for x2 in target.elements():
                    if source.leq(x1, a1) and target.leq(a2, x2) and (x1, x2) not in pairs:
                        pairs.add((x1, x2))
                        changed = True
        for a1 in source.elements():
            targets = [a2 for a2 in target.elements() if (a1, a2) in pairs]
            if targets:
                m = target.meet(targets)
                if (a1, m) not in pairs:
                    pairs.add((a1, m))
                    changed = True
        for a2 in target.elements():
            sources = [a1 for a1 in source.elements() if (a1, a2) in pairs]
            # The empty join makes the bottom a cause of everything.
            j = source.join(sources)
            if (j, a2) not in pairs:
                pairs.add((j, a2))
                changed = True
    return validate_causal(CausalRelation(source, target, frozenset(pairs)))


def causal_to_map(relation):
    """g sending a later property to the largest earlier property forcing it."""
    validate_causal(relation)
    src, tgt = relation.source, relation.target
    values = []
    for a2 in tgt.elements():
        values.append(src.join([a1 for a1 in src.elements() if relation.holds(a1, a2)]))
    g = LatticeMap(tgt, src, tuple(values))
    # The relation must be recoverable from g; this needs the relation to
    # also contain the join of all causes of each effect, which the two
    # validity rules alone do not force.
    for a1 in src.elements():
        for a2 in tgt.elements():
            if relation.holds(a1, a2) != src.leq(a1, g(a2)):
                raise ValidationError(
                    "relation is not representable by its induced map",
                    witness=(a1, a2),
                )
    return WeakMeetMap(g)


def map_to_causal(weak):
    """The relation a1 leads-to a2 iff a1 lies below g(a2)."""
    g = weak.map
    pairs = frozenset(
        (a1, a2)
        for a1 in g.cod.elements()
        for a2 in g.dom.elements()
        if g.cod.leq(a1, g(a2))
    )
    return validate_causal(CausalRelation(g.cod, g.dom, pairs))


def propagation(weak):
    """Forward property propagation as the pointed extension's left adjoint."""
    return pointed_extend(weak)[1]


@dataclass(frozen=True)
class EvolutionReport:
    backward: LatticeMap  # the given meet-direction map
    forward: LatticeMap  # its adjoint in the direction of time
    dense: bool
    atom_orthogonality: tuple[tuple[int, int], ...]  # informational failures


def evolution_adjoint(phi, dom_ortho=None, cod_ortho=None):
    """Adjoint of a backward property map that fixes both bounds.

    phi must preserve non-empty meets and send bottom to bottom; if it also
    fixes the top it preserves all meets and has a genuine left adjoint,
    which is dense. Orthogonality of atom images is reported, not enforced.
    """
    if not isinstance(phi, WeakMeetMap):
        phi = WeakMeetMap(phi)
    g = phi.map
    if g(g.dom.bottom) != g.cod.bottom:
        raise NotBalancedAtZero("evolution map must send bottom to bottom")
    if g(g.dom.top) != g.cod.top:
        raise NotWeakMeet("evolution map must fix the top to admit a total adjoint")
    psi = left_adjoint(g)
    profile = preservation_profile(psi)
    dense = profile.dense
    failures = []
    if dom_ortho is not None and cod_ortho is not None:
        # psi runs from the codomain ortholattice back to the domain one.
        L_from, L_to = psi.dom, psi.cod
        for p in L_from.atoms():
            for q in L_from.atoms():
                if L_from.leq(p, cod_ortho.comp(q)):
                    ip, iq = psi(p), psi(q)
                    if ip != L_to.bottom and iq != L_to.bottom:
                        if not L_to.leq(ip, dom_ortho.comp(iq)):
                            failures.append((p, q))
    return EvolutionReport(g, psi, dense, tuple(failures))
