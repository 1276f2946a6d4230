"""End-to-end verification pipelines assembled into reports.

Three entry points: the full betti table over all five solids and every
integer scale, the dodecahedron tetrahedra trace (matching search, critical
complex, flowed boundary classes), and the symmetry/character report.
"""

from __future__ import annotations

from collections import Counter

from .errors import SearchFailure, VerificationError
from .homology import cycle_class, homology, make_chain, simplex_boundary
from .morse import check_matching, critical_complex_homology, find_matching, morse_flow
from .patterns import diameter3_tetrahedra
from .polytopes import SOLIDS, build_solid, combinatorial_metric
from .reports import Report, row
from .simplicial import (
    antipodal_free_complex,
    boundary_complex,
    delete_open_cells,
    face_diameter,
    maximal_simplices,
    same_faces,
    vr_complex,
)
from .symmetry import automorphisms, rotation_subgroup, tetrahedra_orbits, verify_remark

# Unreduced betti of the scale-r complex for every solid, r from 0 through
# the contractible diameter case; trailing zeros dropped.  Wedges of spheres
# carry no torsion, so betti plus torsion-freeness pins the homotopy type.
EXPECTED_BETTI = {
    "tetrahedron": ((4,), (1,)),
    "cube": ((8,), (1, 5), (1, 0, 0, 1), (1,)),
    "octahedron": ((6,), (1, 0, 1), (1,)),
    "dodecahedron": (
        (20,),
        (1, 11),
        (1, 0, 1),
        (1, 0, 0, 9),
        (1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
        (1,),
    ),
    "icosahedron": ((12,), (1, 0, 1), (1, 0, 0, 0, 0, 1), (1,)),
}

# Solids whose scale-(diameter - 1) complex must equal the complex of all
# antipodal-pair-free vertex sets (the cross-polytope boundary pattern).
_ANTIPODAL_ROWS = (("octahedron", 1), ("icosahedron", 2), ("dodecahedron", 4))


def verify_main_theorem() -> Report:
    """Betti tables for every solid and scale, plus the structural identities."""
    rows = []
    cached = {}
    metrics = {}
    for name in SOLIDS:
        metric = combinatorial_metric(build_solid(name))
        metrics[name] = metric
        for r, expected in enumerate(EXPECTED_BETTI[name]):
            c = vr_complex(metric, r)
            cached[(name, r)] = c
            res = homology(c)
            got = res.betti_stripped()
            if any(res.torsion):
                rows.append(row(f"{name} r={r} betti", expected, f"{got} with torsion"))
            else:
                rows.append(row(f"{name} r={r} betti", expected, got))
    for name in ("cube", "octahedron", "dodecahedron", "icosahedron"):
        rows.append(
            row(
                f"{name} r=1 equals the boundary complex",
                True,
                same_faces(cached[(name, 1)], boundary_complex(name)),
            )
        )
    for name, r in _ANTIPODAL_ROWS:
        metric = metrics[name]
        rows.append(
            row(
                f"{name} r={r} equals the antipodal-pair-free complex",
                True,
                same_faces(
                    cached[(name, r)],
                    antipodal_free_complex(metric, metric.diameter()),
                ),
            )
        )
    census = Counter(len(s) - 1 for s in maximal_simplices(cached[("dodecahedron", 2)]))
    rows.append(
        row(
            "dodecahedron r=2 maximal face census (dimension, count)",
            ((3, 20), (4, 12)),
            tuple(sorted(census.items())),
        )
    )
    return Report(title="betti tables for all solids and scales", rows=tuple(rows))


def trace_dodecahedron(seed: int = 1, max_attempts: int = 1000) -> Report:
    """Matching search and chain-level retraction trace at scale 3.

    Finds a certified-acyclic matching on the diameter-3 faces whose
    critical cells are exactly the ten tetrahedra, checks the critical
    complex left after removing them, and flows each tetrahedron boundary
    down to the 2-sphere class.
    """
    title = "dodecahedron scale-3 trace"
    g = build_solid("dodecahedron")
    metric = combinatorial_metric(g)
    tets = diameter3_tetrahedra(metric)
    rows = [row("pairwise-distance-3 tetrahedra", 10, len(tets))]

    c3 = vr_complex(metric, 3)
    candidate = [
        s
        for k in range(c3.dim + 1)
        for s in c3.simplices(k)
        if face_diameter(metric, s) == 3
    ]
    try:
        m = find_matching(
            c3, candidate, forced_critical=tets, seed=seed, max_attempts=max_attempts
        )
    except SearchFailure as e:
        rows.append(
            row(
                "acyclic matching on diameter-3 faces",
                "all non-tetrahedron cells matched",
                f"search failed: {e}",
                passed=False,
            )
        )
        return Report(title=title, rows=tuple(rows))

    report = check_matching(c3, m)
    rows.append(row("matching certified acyclic", True, report.ok()))
    critical_d3 = sorted(
        s for s in report.critical if face_diameter(metric, s) == 3
    )
    rows.append(
        row(
            "critical diameter-3 cells are exactly the tetrahedra",
            True,
            critical_d3 == tets,
        )
    )

    pruned = delete_open_cells(c3, tets)
    crit_res = critical_complex_homology(pruned, m)
    rows.append(
        row(
            "critical complex betti with tetrahedra removed",
            (1, 0, 1),
            crit_res.betti_stripped(),
        )
    )
    rows.append(
        row(
            "scale-3 betti via the critical complex",
            (1, 0, 0, 9),
            critical_complex_homology(c3, m).betti_stripped(),
        )
    )

    in_scale2 = True
    for i, t in enumerate(tets, start=1):
        z = make_chain(2, dict(simplex_boundary(t)))
        flowed = morse_flow(pruned, m, z)
        if any(face_diameter(metric, s) > 2 for s in flowed.chain.support()):
            in_scale2 = False
        cls = cycle_class(pruned, flowed.chain)
        rows.append(
            row(
                f"class of the flowed boundary of tetrahedron {i}",
                "(1) or (-1)",
                cls,
                passed=cls in ((1,), (-1,)),
            )
        )
    rows.append(row("flowed boundaries live at scale 2", True, in_scale2))
    rows.append(row("H3 rank at scale 3", 9, homology(c3).betti[3]))
    return Report(title=title, rows=tuple(rows))


def symmetry_report() -> Report:
    """Automorphism groups, tetrahedra orbits, and the classwise character."""
    title = "dodecahedron symmetry of the ten tetrahedra"
    g = build_solid("dodecahedron")
    metric = combinatorial_metric(g)
    tets = diameter3_tetrahedra(metric)
    grp = automorphisms(g)
    rows = [row("full automorphism group order", 120, grp.order)]
    try:
        rot = rotation_subgroup(grp)
    except VerificationError as e:
        rows.append(row("derived subgroup", "order 60, simple", str(e), passed=False))
        return Report(title=title, rows=tuple(rows))
    rows.append(row("derived subgroup order", 60, rot.order))
    rows.append(row("derived subgroup is simple", True, True))
    orbit_sizes = tuple(sorted(len(o) for o in tetrahedra_orbits(rot, tets)))
    rows.append(row("orbit sizes under the derived subgroup", (5, 5), orbit_sizes))
    full_sizes = tuple(sorted(len(o) for o in tetrahedra_orbits(grp, tets)))
    rows.append(row("orbit sizes under the full group", (10,), full_sizes))
    h3 = homology(vr_complex(metric, 3)).betti[3]
    rows.append(row("H3 rank at scale 3", 9, h3))
    try:
        cd = verify_remark(grp, tets, h3)
    except VerificationError as e:
        rows.append(
            row("classwise character check", "all classes match", str(e), passed=False)
        )
        return Report(title=title, rows=tuple(rows))
    for i, (size, order, inh, fx, pred) in enumerate(
        zip(
            cd.class_sizes,
            cd.element_orders,
            cd.in_rotation,
            cd.fixed_counts,
            cd.predicted_counts,
        ),
        start=1,
    ):
        kind = "rotation" if inh else "reflective"
        rows.append(
            row(f"class {i}: size {size}, order {order}, {kind}: fixed count", pred, fx)
        )
    rows.append(row("class sizes sum to the group order", 120, sum(cd.class_sizes)))
    return Report(title=title, rows=tuple(rows))
