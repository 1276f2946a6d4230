"""Integer homology engine: boundary maps, normal forms, cycle coordinates."""

import random
from itertools import combinations

import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from ripstone.errors import ParameterError, PreconditionError, StructuralError
from ripstone.homology import (
    IntMatrix,
    boundary_chain,
    boundary_matrix,
    cycle_class,
    euler_characteristic,
    homology,
    make_chain,
    simplex_boundary,
    smith_normal_form,
)
from ripstone.polytopes import build_solid, combinatorial_metric
from ripstone.simplicial import from_faces, full_simplex_complex, vr_complex

RP2_FACES = [
    (0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 5), (0, 3, 4),
    (1, 2, 3), (1, 2, 4), (1, 3, 5), (2, 4, 5), (3, 4, 5),
]


def torus_faces():
    # 3 x 3 periodic grid, both diagonals cut the same way
    def v(i, j):
        return 3 * (i % 3) + (j % 3)

    faces = []
    for i in range(3):
        for j in range(3):
            a, b = v(i, j), v(i, j + 1)
            c, d = v(i + 1, j), v(i + 1, j + 1)
            faces.append(tuple(sorted((a, b, d))))
            faces.append(tuple(sorted((a, d, c))))
    return faces


def octa_fundamental_cycle(scale=1):
    # one vertex from each antipodal pair (0,1), (2,3), (4,5), signed by the
    # number of second choices
    terms = {}
    for a in (0, 1):
        for b in (2, 3):
            for c in (4, 5):
                sign = (-1) ** ((a == 1) + (b == 3) + (c == 5))
                terms[(a, b, c)] = scale * sign
    return make_chain(2, terms)


def test_boundary_signs_alternate_from_minus():
    assert simplex_boundary((1, 2)) == [((2,), -1), ((1,), 1)]
    assert simplex_boundary((1, 2, 3, 4)) == [
        ((2, 3, 4), -1),
        ((1, 3, 4), 1),
        ((1, 2, 4), -1),
        ((1, 2, 3), 1),
    ]
    assert simplex_boundary((7,)) == []


def test_boundary_of_boundary_vanishes():
    for s in [(0, 1, 2), (2, 5, 9, 11), (0, 1, 2, 3, 4)]:
        z = make_chain(len(s) - 2, dict(simplex_boundary(s)))
        assert boundary_chain(z).is_zero()


def test_snf_goldens():
    assert smith_normal_form(IntMatrix.from_dense([[2, 0], [0, 3]])).diagonal == [1, 6]
    a = IntMatrix.from_dense([[1, 1, 0], [1, 0, 1], [0, 1, 1]])
    assert smith_normal_form(a).diagonal == [1, 1, 2]


def test_snf_transforms_are_unimodular_and_diagonalize():
    rng = random.Random(20240917)
    for _ in range(25):
        rows = rng.randrange(1, 6)
        cols = rng.randrange(1, 7)
        dense = [[rng.randrange(-4, 5) for _ in range(cols)] for _ in range(rows)]
        res = smith_normal_form(IntMatrix.from_dense(dense))
        u = Matrix(res.left_transform)
        v = Matrix(res.right_transform)
        a = Matrix(rows, cols, lambda i, j: dense[i][j])
        prod = u * a * v
        for i in range(rows):
            for j in range(cols):
                want = res.diagonal[i] if i == j and i < len(res.diagonal) else 0
                assert prod[i, j] == want
        assert abs(u.det()) == 1
        assert abs(v.det()) == 1
        # divisibility chain over the nonzero part
        nz = [d for d in res.diagonal if d]
        assert all(b % a_ == 0 for a_, b in zip(nz, nz[1:]))
        # agree with the reference implementation
        oracle = sympy_snf(a, domain=ZZ)
        odiag = [abs(oracle[i, i]) for i in range(min(rows, cols))]
        assert res.diagonal == odiag


def test_projective_plane_has_two_torsion():
    h = homology(from_faces(RP2_FACES))
    assert h.betti == (1, 0, 0)
    assert h.torsion == ((), (2,), ())


def test_torus_betti():
    faces = torus_faces()
    assert len(set(faces)) == 18
    h = homology(from_faces(faces))
    assert h.betti == (1, 2, 1)
    assert all(t == () for t in h.torsion)


def test_reduced_homology_drops_a_component():
    c = from_faces(RP2_FACES)
    plain = homology(c)
    red = homology(c, reduced=True)
    assert red.reduced and not plain.reduced
    assert red.betti == (0, 0, 0)
    assert red.torsion == plain.torsion
    point = full_simplex_complex(1)
    assert homology(point, reduced=True).betti == (0,)


def test_homology_betti_against_rank_oracle():
    rng = random.Random(31337)
    for _ in range(30):
        n = rng.randrange(4, 8)
        top = rng.randrange(2, min(3, n - 2) + 1)
        pool = list(combinations(range(n), top + 1))
        rng.shuffle(pool)
        faces = pool[: rng.randrange(1, min(8, len(pool)) + 1)]
        faces += [(v,) for v in range(n)]
        c = from_faces(faces, vertex_count=n)
        counts = list(c.f_vector())
        ranks = [0] * (c.dim + 2)
        for k in range(1, c.dim + 1):
            m = boundary_matrix(c, k)
            ranks[k] = Matrix(m.to_dense()).rank() if m.entries else 0
        expected = tuple(
            counts[k] - ranks[k] - ranks[k + 1] for k in range(c.dim + 1)
        )
        assert homology(c).betti == expected


def test_euler_characteristic_matches_f_vector():
    for name in ("octahedron", "icosahedron"):
        c = vr_complex(combinatorial_metric(build_solid(name)), 1)
        alt = sum((-1) ** k * f for k, f in enumerate(c.f_vector()))
        assert euler_characteristic(c) == alt == 2


def test_octa_fundamental_cycle_generates_h2():
    c = vr_complex(combinatorial_metric(build_solid("octahedron")), 1)
    assert homology(c).betti == (1, 0, 1)
    z = octa_fundamental_cycle()
    assert boundary_chain(z).is_zero()
    coord = cycle_class(c, z)
    assert coord in ((1,), (-1,))
    assert cycle_class(c, octa_fundamental_cycle(scale=2)) == (2 * coord[0],)


def test_cycle_class_edge_cases():
    c = vr_complex(combinatorial_metric(build_solid("octahedron")), 1)
    assert cycle_class(c, make_chain(2, {})) == (0,)
    with pytest.raises(PreconditionError):
        cycle_class(c, make_chain(2, {(0, 2, 4): 1}))  # not a cycle
    with pytest.raises(StructuralError):
        cycle_class(c, make_chain(2, {(0, 1, 2): 1}))  # (0,1) is antipodal
    # boundaries map to the zero coordinate vector
    w = boundary_chain(make_chain(2, {(0, 2, 4): 1}))
    assert cycle_class(c, w) == (0, 0, 0, 0, 0, 0)[: len(cycle_class(c, w))]


def test_boundary_matrix_guards():
    c = full_simplex_complex(3)
    with pytest.raises(ParameterError):
        boundary_matrix(c, 0)
    with pytest.raises(ParameterError):
        boundary_matrix(c, 3)


def test_make_chain_drops_zero_terms():
    z = make_chain(1, {(0, 1): 0, (1, 2): 2})
    assert z.support() == [(1, 2)]
    assert not z.is_zero()
    assert make_chain(1, {}).is_zero()
