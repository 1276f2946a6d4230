"""Colored pattern graphs and their induced embeddings into edge graphs.

A pattern is a small abstract graph with a distinguished set of colored
vertices; every embedding of the pattern as an induced subgraph of a host
graph contributes one simplex, the image of the colored set.  Patterns with
a face subset one vertex smaller than the colored set generate facet/cofacet
pairs instead, which is how whole families of matched cells are specified at
once.  An optional oriented edge, checked against a fixed host orientation,
breaks symmetries that would otherwise pair a cell twice.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import ParameterError, StructuralError, VerificationError
from .morse import Matching, matching_from_pairs
from .polytopes import DistanceMatrix, PolytopeGraph
from .simplicial import Simplex


@dataclass(frozen=True)
class PatternGraph:
    """Abstract graph with colored vertices, optional face and oriented edge.

    edges hold ascending pairs; colored and face are ascending vertex
    tuples; face, when present, must sit inside the colored set.  At most
    one edge carries an orientation.
    """

    size: int
    edges: tuple[tuple[int, int], ...]
    colored: tuple[int, ...]
    face: tuple[int, ...] | None = None
    oriented_edge: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ParameterError("pattern needs at least one vertex")
        for u, v in self.edges:
            if not (0 <= u < v < self.size):
                raise ParameterError(f"bad pattern edge ({u}, {v})")
        if len(set(self.edges)) != len(self.edges):
            raise ParameterError("duplicate pattern edge")
        if not self.colored:
            raise ParameterError("colored set must be non-empty")
        for group in (self.colored, self.face or ()):
            if any(not 0 <= v < self.size for v in group):
                raise ParameterError("colored/face vertex out of range")
            if any(a >= b for a, b in zip(group, group[1:])):
                raise ParameterError("colored/face vertices must ascend")
        if self.face is not None and not set(self.face) <= set(self.colored):
            raise ParameterError("face must be a subset of the colored set")
        if self.oriented_edge is not None:
            u, v = self.oriented_edge
            if (min(u, v), max(u, v)) not in self.edges:
                raise ParameterError("oriented edge is not an edge of the pattern")


def pattern_graph(
    size: int,
    edges,
    colored,
    face=None,
    oriented_edge=None,
) -> PatternGraph:
    """Normalize raw vertex collections into a validated PatternGraph."""
    norm_edges = tuple(sorted({(min(u, v), max(u, v)) for u, v in edges}))
    return PatternGraph(
        size=size,
        edges=norm_edges,
        colored=tuple(sorted(set(colored))),
        face=None if face is None else tuple(sorted(set(face))),
        oriented_edge=None if oriented_edge is None else tuple(oriented_edge),
    )


@dataclass(frozen=True)
class EdgeOrientation:
    """One chosen direction per host edge, drawn deterministically from seed."""

    seed: int
    directed: frozenset

    def agrees(self, u: int, v: int) -> bool:
        return (u, v) in self.directed


def fixed_orientation(g: PolytopeGraph, seed: int) -> EdgeOrientation:
    """Direct every edge of g by one seeded coin flip per edge."""
    rng = random.Random(seed)
    directed = set()
    for u, v in g.edges():
        directed.add((u, v) if rng.randrange(2) == 0 else (v, u))
    return EdgeOrientation(seed=seed, directed=frozenset(directed))


@dataclass(frozen=True)
class Embedding:
    """Injective vertex map; images[i] is the host image of pattern vertex i."""

    images: tuple[int, ...]

    def image_of(self, v: int) -> int:
        return self.images[v]


def is_induced_embedding(
    p: PatternGraph,
    g: PolytopeGraph,
    e: Embedding,
    o: EdgeOrientation | None = None,
) -> bool:
    """Re-verify a claimed embedding from scratch."""
    img = e.images
    if len(img) != p.size or len(set(img)) != len(img):
        return False
    if any(not 0 <= w < g.vertex_count for w in img):
        return False
    edge_set = set(p.edges)
    for u in range(p.size):
        for v in range(u + 1, p.size):
            if ((u, v) in edge_set) != g.adjacent(img[u], img[v]):
                return False
    if p.oriented_edge is not None:
        if o is None:
            raise ParameterError("pattern has an oriented edge; orientation required")
        x, y = p.oriented_edge
        if not o.agrees(img[x], img[y]):
            return False
    return True


def embeddings(
    p: PatternGraph,
    g: PolytopeGraph,
    o: EdgeOrientation | None = None,
) -> list[Embedding]:
    """All induced-subgraph embeddings of p into g, in image order.

    Backtracking over pattern vertices, visiting each new vertex through an
    already placed neighbor whenever one exists so adjacency constraints
    prune early.  Hosts have at most 20 vertices, so nothing fancier is
    needed.
    """
    if p.size > g.vertex_count:
        raise ParameterError("pattern larger than host graph")
    if p.oriented_edge is not None and o is None:
        raise ParameterError("pattern has an oriented edge; orientation required")

    adj = [set() for _ in range(p.size)]
    for u, v in p.edges:
        adj[u].add(v)
        adj[v].add(u)

    order: list[int] = []
    seen: set[int] = set()
    while len(order) < p.size:
        nxt = min(
            (v for v in range(p.size) if v not in seen),
            key=lambda v: (-len(adj[v] & seen), v),
        )
        order.append(nxt)
        seen.add(nxt)

    results: list[Embedding] = []
    img = [-1] * p.size
    used = [False] * g.vertex_count

    def place(depth: int) -> None:
        if depth == p.size:
            results.append(Embedding(images=tuple(img)))
            return
        v = order[depth]
        for w in range(g.vertex_count):
            if used[w]:
                continue
            ok = True
            for u in order[:depth]:
                if (u in adj[v]) != g.adjacent(img[u], w):
                    ok = False
                    break
            if ok and p.oriented_edge is not None:
                x, y = p.oriented_edge
                if v == x and img[y] >= 0 and not o.agrees(w, img[y]):
                    ok = False
                elif v == y and img[x] >= 0 and not o.agrees(img[x], w):
                    ok = False
            if ok:
                img[v] = w
                used[w] = True
                place(depth + 1)
                img[v] = -1
                used[w] = False

    place(0)
    results.sort(key=lambda e: e.images)
    return results


def simplices_of_type(
    p: PatternGraph,
    g: PolytopeGraph,
    o: EdgeOrientation | None = None,
) -> list[Simplex]:
    """Deduplicated colored-set images over all embeddings, sorted."""
    found = {
        tuple(sorted(e.images[b] for b in p.colored)) for e in embeddings(p, g, o)
    }
    return sorted(found)


def pattern_matching(
    rules,
    g: PolytopeGraph,
    o: EdgeOrientation | None = None,
) -> Matching:
    """Pair face image with colored image for every embedding of every rule.

    Embeddings that produce the exact same pair collapse to one; a cell
    showing up in two different pairs is a conflict in the rule set and is
    reported with both responsible rules and embeddings.
    """
    rules = list(rules)
    for idx, p in enumerate(rules):
        if p.face is None:
            raise ParameterError(f"rule {idx} has no face subset")
        if len(p.colored) != len(p.face) + 1:
            raise ParameterError(
                f"rule {idx}: colored set must exceed the face by exactly one vertex"
            )

    chosen: dict[Simplex, tuple[Simplex, Simplex]] = {}
    origin: dict[tuple[Simplex, Simplex], tuple[int, Embedding]] = {}
    pairs: list[tuple[Simplex, Simplex]] = []
    for idx, p in enumerate(rules):
        for e in embeddings(p, g, o):
            lower = tuple(sorted(e.images[b] for b in p.face))
            upper = tuple(sorted(e.images[b] for b in p.colored))
            pair = (lower, upper)
            for cell in pair:
                prev = chosen.get(cell)
                if prev is not None and prev != pair:
                    pidx, pemb = origin[prev]
                    raise StructuralError(
                        f"cell {cell} paired twice: rule {pidx} embedding "
                        f"{pemb.images} gives {prev}, rule {idx} embedding "
                        f"{e.images} gives {pair}"
                    )
            if chosen.get(lower) == pair:
                continue
            chosen[lower] = pair
            chosen[upper] = pair
            origin[pair] = (idx, e)
            pairs.append(pair)
    return matching_from_pairs(pairs)


def diameter3_tetrahedra(metric: DistanceMatrix) -> list[Simplex]:
    """All 4-subsets with every pairwise hop distance equal to 3.

    Brute force over all C(n, 4) subsets.  On the dodecahedron there must
    be exactly ten; any other count is a verification failure.
    """
    tets = [
        q
        for q in combinations(range(metric.size), 4)
        if all(metric.d(a, b) == 3 for a, b in combinations(q, 2))
    ]
    if len(tets) != 10:
        raise VerificationError(
            f"expected 10 pairwise-distance-3 tetrahedra, found {len(tets)}"
        )
    return sorted(tets)
