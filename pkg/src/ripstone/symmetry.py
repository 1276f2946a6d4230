"""Edge-graph automorphism groups and the ten-tetrahedra character check.

Groups are stored as generator lists with the order computed by an
orbit-stabilizer chain.  The rotation subgroup is obtained purely
combinatorially as the derived subgroup; for the dodecahedron this is the
index-2 simple group of order 60, and the full group splits off a central
involution (the antipodal map).  The closing verification compares the
permutation action on the ten distance-3 tetrahedra, class by class,
against the character predicted by tensoring the doubled natural
fixed-point counts with the two-element sign table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ParameterError, StructuralError, VerificationError
from .patterns import pattern_graph, embeddings
from .polytopes import PolytopeGraph
from .simplicial import Simplex

Perm = tuple

# Fixed points of the alternating group on five letters acting naturally,
# keyed by element order; the two order-5 classes share the value 0.
_NATURAL_FIXED_BY_ORDER = {1: 5, 2: 1, 3: 2, 5: 0}


@dataclass(frozen=True)
class PermGroup:
    """Permutation group on range(degree) given by generators."""

    degree: int
    generators: tuple
    order: int


@dataclass(frozen=True)
class CharacterData:
    """Classwise data for a group action on the ten tetrahedra.

    h3_character is the permutation character minus the trivial one, the
    character of the degree-9 kernel representation.
    """

    class_reps: tuple
    class_sizes: tuple
    element_orders: tuple
    in_rotation: tuple
    fixed_counts: tuple
    predicted_counts: tuple
    h3_character: tuple


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def compose(p: Perm, q: Perm) -> Perm:
    """Apply q first, then p."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def perm_order(p: Perm) -> int:
    seen = [False] * len(p)
    order = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            v = p[v]
            length += 1
        order = math.lcm(order, length)
    return order


def apply_to_simplex(p: Perm, s: Simplex) -> Simplex:
    return tuple(sorted(p[v] for v in s))


@lru_cache(maxsize=None)
def _closure(degree: int, generators: tuple) -> tuple:
    found = {identity_perm(degree)}
    frontier = list(found)
    while frontier:
        nxt = []
        for p in frontier:
            for s in generators:
                q = compose(s, p)
                if q not in found:
                    found.add(q)
                    nxt.append(q)
        frontier = nxt
    return tuple(sorted(found))


def group_elements(group: PermGroup) -> tuple:
    """Every element, sorted; cached per generator tuple."""
    return _closure(group.degree, group.generators)


def _reduce_generators(degree: int, elements) -> tuple:
    """Greedy small generating set drawn from sorted elements."""
    total = len(set(elements))
    gens: list[Perm] = []
    have = {identity_perm(degree)}
    for p in sorted(elements):
        if len(have) == total:
            break
        if p not in have:
            gens.append(p)
            have = set(_closure(degree, tuple(gens)))
    return tuple(gens)


def _chain_order(degree: int, generators) -> int:
    """Group order by recursive orbit-stabilizer with Schreier generators."""
    gens = tuple(sorted({g for g in generators if g != identity_perm(degree)}))
    if not gens:
        return 1
    beta = min(i for g in gens for i in range(degree) if g[i] != i)
    orbit = {beta: identity_perm(degree)}
    frontier = [beta]
    while frontier:
        nxt = []
        for pt in frontier:
            rep = orbit[pt]
            for s in gens:
                q = s[pt]
                if q not in orbit:
                    orbit[q] = compose(s, rep)
                    nxt.append(q)
        frontier = nxt
    stab = set()
    for pt, rep in orbit.items():
        for s in gens:
            carry = orbit[s[pt]]
            stab.add(compose(inverse(carry), compose(s, rep)))
    return len(orbit) * _chain_order(degree, stab)


def automorphisms(g: PolytopeGraph) -> PermGroup:
    """Full automorphism group of the edge graph.

    Enumeration rides on the pattern-embedding backtracker with the whole
    graph as the pattern; an induced embedding of equal size is exactly an
    automorphism.
    """
    n = g.vertex_count
    whole = pattern_graph(n, g.edges(), [0])
    elements = tuple(e.images for e in embeddings(whole, g))
    gens = _reduce_generators(n, elements)
    order = _chain_order(n, gens)
    if order != len(elements):
        raise StructuralError(
            f"orbit-stabilizer order {order} disagrees with enumeration {len(elements)}"
        )
    return PermGroup(degree=n, generators=gens, order=order)


def rotation_subgroup(g: PermGroup) -> PermGroup:
    """Derived subgroup, with the order-60 and simplicity checks built in.

    Generated by all pairwise commutators; simplicity is certified by
    checking that every nontrivial conjugacy class generates the whole
    subgroup (any proper normal subgroup would be a union of classes).
    """
    elems = group_elements(g)
    comms = set()
    for a in elems:
        ainv = inverse(a)
        for b in elems:
            comms.add(compose(a, compose(b, compose(ainv, inverse(b)))))
    gens = _reduce_generators(g.degree, comms)
    derived = _closure(g.degree, gens)
    order = _chain_order(g.degree, gens)
    if order != len(derived):
        raise StructuralError("derived subgroup order mismatch")
    if order != 60:
        raise VerificationError(f"derived subgroup has order {order}, expected 60")
    sub = PermGroup(degree=g.degree, generators=gens, order=order)
    for cls in conjugacy_classes(sub)[1:]:
        closure = _closure(g.degree, tuple(cls))
        if len(closure) != order:
            raise VerificationError(
                f"class of order-{perm_order(cls[0])} elements generates a proper "
                f"normal subgroup of size {len(closure)}"
            )
    return sub


def conjugacy_classes(group: PermGroup) -> list:
    """Classes as sorted tuples, ordered by their smallest member.

    The identity class always comes first because the identity is the
    smallest degree-n permutation.
    """
    elems = group_elements(group)
    gens = group.generators
    remaining = set(elems)
    classes = []
    for p in elems:
        if p not in remaining:
            continue
        cls = {p}
        frontier = [p]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = compose(s, compose(x, inverse(s)))
                    if y not in cls:
                        cls.add(y)
                        nxt.append(y)
            frontier = nxt
        remaining -= cls
        classes.append(tuple(sorted(cls)))
    return classes


def center(group: PermGroup) -> tuple:
    elems = group_elements(group)
    return tuple(
        p for p in elems if all(compose(p, s) == compose(s, p) for s in group.generators)
    )


def tetrahedra_orbits(h: PermGroup, tets) -> list:
    """Orbit partition of the tetrahedra under h, each orbit sorted."""
    tet_set = set(tets)
    if len(tet_set) != len(tets):
        raise ParameterError("duplicate tetrahedra")
    orbits = []
    placed = set()
    for t in sorted(tets):
        if t in placed:
            continue
        orbit = {t}
        frontier = [t]
        while frontier:
            nxt = []
            for s in frontier:
                for p in h.generators:
                    u = apply_to_simplex(p, s)
                    if u not in tet_set:
                        raise StructuralError(
                            f"group moves tetrahedron {s} to {u}, outside the family"
                        )
                    if u not in orbit:
                        orbit.add(u)
                        nxt.append(u)
            frontier = nxt
        placed |= orbit
        orbits.append(tuple(sorted(orbit)))
    return orbits


def verify_remark(g: PermGroup, tets, h3_rank: int) -> CharacterData:
    """Classwise fixed-point check of the action on the ten tetrahedra.

    The predicted count doubles the natural five-point fixed counts on the
    rotation subgroup and vanishes off it; the rank-9 homology matches the
    kernel of the augmentation on the free module over the tetrahedra.
    Raises on the first failing class.
    """
    tets = sorted(tets)
    if len(tets) != 10:
        raise VerificationError(f"expected 10 tetrahedra, got {len(tets)}")
    if h3_rank != len(tets) - 1:
        raise VerificationError(f"H3 rank {h3_rank} != {len(tets) - 1}")
    if g.order != 120:
        raise VerificationError(f"full group has order {g.order}, expected 120")
    rotations = set(group_elements(rotation_subgroup(g)))

    reps = []
    sizes = []
    orders = []
    in_rot = []
    fixed_counts = []
    predicted = []
    for cls in conjugacy_classes(g):
        rep = cls[0]
        fixed_per_member = {
            sum(1 for t in tets if apply_to_simplex(p, t) == t) for p in cls
        }
        if len(fixed_per_member) != 1:
            raise VerificationError(
                f"fixed-point count not constant on the class of {rep}"
            )
        fixed = fixed_per_member.pop()
        member_in_rot = {p in rotations for p in cls}
        if len(member_in_rot) != 1:
            raise VerificationError(
                f"rotation membership not constant on the class of {rep}"
            )
        inh = member_in_rot.pop()
        order = perm_order(rep)
        if inh:
            if order not in _NATURAL_FIXED_BY_ORDER:
                raise VerificationError(
                    f"rotation element of order {order} has no natural-action profile"
                )
            pred = 2 * _NATURAL_FIXED_BY_ORDER[order]
        else:
            pred = 0
        if fixed != pred:
            raise VerificationError(
                f"class of order-{order} elements (size {len(cls)}, "
                f"{'rotation' if inh else 'reflective'}): fixed {fixed} != "
                f"predicted {pred}"
            )
        reps.append(rep)
        sizes.append(len(cls))
        orders.append(order)
        in_rot.append(inh)
        fixed_counts.append(fixed)
        predicted.append(pred)

    if sum(sizes) != g.order:
        raise StructuralError("class sizes do not sum to the group order")
    return CharacterData(
        class_reps=tuple(reps),
        class_sizes=tuple(sizes),
        element_orders=tuple(orders),
        in_rotation=tuple(in_rot),
        fixed_counts=tuple(fixed_counts),
        predicted_counts=tuple(predicted),
        h3_character=tuple(f - 1 for f in fixed_counts),
    )
