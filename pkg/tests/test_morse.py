"""Discrete vector fields: certification, search, flow, fans and flips."""

import pytest

from ripstone.errors import (
    ParameterError,
    PreconditionError,
    SearchFailure,
    StructuralError,
)
from ripstone.homology import homology, make_chain, simplex_boundary
from ripstone.morse import (
    check_matching,
    critical_complex_homology,
    fan_matching,
    fan_triangulation,
    find_matching,
    flip_matching_update,
    matching_from_pairs,
    morse_flow,
)
from ripstone.polytopes import build_solid, combinatorial_metric
from ripstone.simplicial import from_faces, full_simplex_complex, vr_complex

COLLAPSE_TO_EDGE = [
    ((0, 2, 3), (0, 1, 2, 3)),
    ((2, 3), (1, 2, 3)),
    ((0, 2), (0, 1, 2)),
    ((1, 3), (0, 1, 3)),
    ((3,), (0, 3)),
    ((2,), (1, 2)),
]


def all_faces(c):
    out = []
    for k in range(c.dim + 1):
        out.extend(c.simplices(k))
    return out


def square_cycle_matching():
    c = from_faces([(0, 1), (1, 2), (2, 3), (0, 3)])
    m = matching_from_pairs(
        [((0,), (0, 1)), ((1,), (1, 2)), ((2,), (2, 3)), ((3,), (0, 3))]
    )
    return c, m


def test_collapse_of_tetrahedron_onto_an_edge():
    c = full_simplex_complex(4)
    report = check_matching(c, matching_from_pairs(COLLAPSE_TO_EDGE))
    assert report.ok()
    assert set(report.critical) == {(0,), (1,), (0, 1)}
    h = critical_complex_homology(c, matching_from_pairs(COLLAPSE_TO_EDGE))
    assert h.betti_stripped() == (1,)
    # the critical complex lives in dimensions 0 and 1 only
    assert h.torsion == ((), ())


def test_rotating_square_matching_is_rejected_with_certificate():
    c, m = square_cycle_matching()
    report = check_matching(c, m)
    assert report.valid and not report.acyclic and not report.ok()
    assert report.certificate == (
        (0, 1), (1,), (1, 2), (2,), (2, 3), (3,), (0, 3), (0,),
    )
    assert report.critical == ()


def test_check_matching_reports_rule_violations():
    c = full_simplex_complex(3)
    bad = matching_from_pairs([((0,), (0, 3))])
    rep = check_matching(c, bad)
    assert not rep.valid and "outside the complex" in rep.violations[0]

    reused = matching_from_pairs([((0,), (0, 1)), ((0,), (0, 2))])
    rep = check_matching(c, reused)
    assert not rep.valid
    assert any("more than one pair" in v for v in rep.violations)

    skew = matching_from_pairs([((0,), (1, 2))])
    rep = check_matching(c, skew)
    assert not rep.valid and "not a facet-cofacet pair" in rep.violations[0]


def test_flow_pushes_off_apex_free_triangle():
    c = full_simplex_complex(4)
    m = fan_matching(4, 0)
    flowed = morse_flow(c, m, make_chain(2, {(1, 2, 3): 1}))
    assert flowed.chain.terms == {(0, 1, 2): 1, (0, 2, 3): 1}
    assert flowed.steps == 1
    again = morse_flow(c, m, flowed.chain)
    assert again.steps == 0
    assert again.chain.terms == flowed.chain.terms


def test_flow_error_paths():
    c, m = square_cycle_matching()
    z = make_chain(1, {(0, 1): 1})
    with pytest.raises(PreconditionError):
        morse_flow(c, m, z)
    good = fan_matching(4, 0)
    full = full_simplex_complex(4)
    with pytest.raises(StructuralError):
        morse_flow(full, good, make_chain(1, {(0, 9): 1}))
    with pytest.raises(PreconditionError):
        critical_complex_homology(c, m)


@pytest.mark.parametrize("ngon", [4, 5, 6, 7, 8])
def test_fan_matchings_leave_the_triangulation_critical(ngon):
    c = full_simplex_complex(ngon)
    tri = fan_triangulation(ngon, 0)
    assert len(tri) == 4 * ngon - 5
    m = fan_matching(ngon, 0)
    report = check_matching(c, m)
    assert report.ok()
    assert set(report.critical) == set(tri)
    assert 2 * len(m.pairs) + len(tri) == c.face_total()
    h = critical_complex_homology(c, m)
    assert h.betti_stripped() == (1,)


def test_fan_apex_choice_matters_but_counts_do_not():
    tri2 = fan_triangulation(5, 2)
    assert len(tri2) == 15
    assert (2, 4) in tri2 and (0, 2) in tri2
    report = check_matching(full_simplex_complex(5), fan_matching(5, 2))
    assert report.ok() and set(report.critical) == set(tri2)


def test_fan_guards():
    with pytest.raises(ParameterError):
        fan_triangulation(2, 0)
    with pytest.raises(ParameterError):
        fan_triangulation(13, 0)
    with pytest.raises(ParameterError):
        fan_triangulation(5, 5)


def flipped_set(tri, a, b, c_, d):
    out = set(tri)
    out -= {tuple(sorted((a, c_))), tuple(sorted((a, b, c_))), tuple(sorted((a, c_, d)))}
    out |= {tuple(sorted((b, d))), tuple(sorted((b, c_, d))), tuple(sorted((a, b, d)))}
    return out


def test_square_flip_moves_the_diagonal():
    c = full_simplex_complex(4)
    m = fan_matching(4, 0)
    m2 = flip_matching_update(m, (0, 1, 2, 3), (0, 2))
    report = check_matching(c, m2)
    assert report.ok()
    assert set(report.critical) == flipped_set(fan_triangulation(4, 0), 0, 1, 2, 3)
    assert len(set(m.pairs) ^ set(m2.pairs)) == 4
    assert critical_complex_homology(c, m2).betti_stripped() == (1,)
    # flipping back along the new diagonal restores the fan
    m3 = flip_matching_update(m2, (0, 1, 2, 3), (1, 3))
    report3 = check_matching(c, m3)
    assert report3.ok()
    assert set(report3.critical) == set(fan_triangulation(4, 0))


@pytest.mark.parametrize("ngon", [5, 6, 8])
def test_flips_recertify_on_larger_fans(ngon):
    c = full_simplex_complex(ngon)
    m = fan_matching(ngon, 0)
    quad = (0, 2, 3, 4)
    m2 = flip_matching_update(m, quad, (0, 3))
    report = check_matching(c, m2)
    assert report.ok()
    assert set(report.critical) == flipped_set(fan_triangulation(ngon, 0), 0, 2, 3, 4)
    assert critical_complex_homology(c, m2).betti_stripped() == (1,)


def test_flip_guards():
    m = fan_matching(4, 0)
    with pytest.raises(ParameterError):
        flip_matching_update(m, (0, 1, 2, 2), (0, 2))
    with pytest.raises(ParameterError):
        flip_matching_update(m, (0, 1, 2, 3), (0, 1))  # an edge, not a diagonal
    with pytest.raises(StructuralError):
        flip_matching_update(m, (0, 1, 2, 3), (1, 3))  # wrong diagonal is critical


def test_find_matching_collapses_a_cone():
    c = full_simplex_complex(4)
    m = find_matching(c, all_faces(c), forced_critical=[(0,)], seed=5)
    assert len(m.pairs) == 7
    report = check_matching(c, m)
    assert report.ok()
    assert report.critical == ((0,),)
    again = find_matching(c, all_faces(c), forced_critical=[(0,)], seed=5)
    assert again.pairs == m.pairs


def test_find_matching_cannot_collapse_a_sphere():
    c = vr_complex(combinatorial_metric(build_solid("octahedron")), 1)
    with pytest.raises(SearchFailure) as exc:
        find_matching(c, all_faces(c), max_attempts=4)
    assert exc.value.attempts == 4
    assert len(exc.value.surplus) >= 2
    assert homology(c).betti == (1, 0, 1)  # the obstruction is real


def test_find_matching_guards_and_trivia():
    c = full_simplex_complex(3)
    assert find_matching(c, []).pairs == ()
    with pytest.raises(StructuralError):
        find_matching(c, [(0, 9)])
    with pytest.raises(ParameterError):
        find_matching(c, [(0,), (1,)], forced_critical=[(2,)])
    with pytest.raises(ParameterError):
        find_matching(c, all_faces(c), max_attempts=0)


def test_flow_reproduces_boundary_of_critical_cell():
    # flowing the boundary of a critical triangle lands on critical cells only
    ngon = 6
    c = full_simplex_complex(ngon)
    m = fan_matching(ngon, 0)
    critical = set(check_matching(c, m).critical)
    for tri in [(0, 2, 3), (0, 4, 5)]:
        z = make_chain(1, dict(simplex_boundary(tri)))
        flowed = morse_flow(c, m, z)
        assert set(flowed.chain.support()) <= critical
