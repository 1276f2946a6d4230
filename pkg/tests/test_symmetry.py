"""Automorphism groups of the solid graphs and the tetrahedra action."""

import pytest
from sympy.combinatorics import Permutation, PermutationGroup

from ripstone.errors import ParameterError, StructuralError, VerificationError
from ripstone.patterns import diameter3_tetrahedra
from ripstone.polytopes import SOLIDS, build_solid, combinatorial_metric
from ripstone.symmetry import (
    apply_to_simplex,
    automorphisms,
    center,
    compose,
    conjugacy_classes,
    group_elements,
    identity_perm,
    inverse,
    perm_order,
    rotation_subgroup,
    tetrahedra_orbits,
    verify_remark,
)

GROUP_ORDERS = {
    "tetrahedron": 24,
    "cube": 48,
    "octahedron": 48,
    "dodecahedron": 120,
    "icosahedron": 120,
}


def dodeca_group():
    return automorphisms(build_solid("dodecahedron"))


def dodeca_tets():
    return diameter3_tetrahedra(combinatorial_metric(build_solid("dodecahedron")))


@pytest.mark.parametrize("name", SOLIDS)
def test_group_orders_with_oracle(name):
    g = automorphisms(build_solid(name))
    assert g.order == GROUP_ORDERS[name]
    oracle = PermutationGroup([Permutation(list(p)) for p in g.generators])
    assert oracle.order() == g.order


def test_perm_helpers():
    e = identity_perm(5)
    p = (1, 2, 3, 4, 0)
    q = (0, 2, 1, 3, 4)
    assert compose(p, e) == compose(e, p) == p
    assert compose(p, inverse(p)) == e
    # compose applies the right factor first
    assert compose(p, q)[0] == p[q[0]]
    assert perm_order(e) == 1
    assert perm_order(p) == 5
    assert perm_order(compose(p, p)) == 5
    assert apply_to_simplex((1, 0, 2), (0, 2)) == (1, 2)


def test_rotation_subgroup_is_simple_of_order_60():
    g = dodeca_group()
    h = rotation_subgroup(g)
    assert h.order == 60
    assert g.order // h.order == 2
    assert center(h) == (identity_perm(20),)
    elements = set(group_elements(h))
    assert all(compose(p, q) in elements for p in list(elements)[:8] for q in list(elements)[:8])
    oracle = PermutationGroup([Permutation(list(p)) for p in h.generators])
    # a perfect group of order 60 is simple
    assert oracle.derived_subgroup().order() == 60
    assert not oracle.is_solvable


def test_center_of_full_group_is_the_antipodal_flip():
    g = dodeca_group()
    z = center(g)
    assert len(z) == 2
    nontrivial = next(p for p in z if p != identity_perm(20))
    assert perm_order(nontrivial) == 2
    metric = combinatorial_metric(build_solid("dodecahedron"))
    assert all(metric.d(v, nontrivial[v]) == 5 for v in range(20))
    rotations = set(group_elements(rotation_subgroup(g)))
    assert nontrivial not in rotations


def test_tetrahedra_orbits():
    g = dodeca_group()
    h = rotation_subgroup(g)
    tets = dodeca_tets()
    rot_orbits = tetrahedra_orbits(h, tets)
    assert sorted(len(o) for o in rot_orbits) == [5, 5]
    full_orbits = tetrahedra_orbits(g, tets)
    assert [len(o) for o in full_orbits] == [10]
    # orbit-stabilizer: each tetrahedron has 12 rotational symmetries
    t0 = tets[0]
    stab = [p for p in group_elements(h) if apply_to_simplex(p, t0) == t0]
    assert len(stab) == 12
    with pytest.raises(ParameterError):
        tetrahedra_orbits(h, [t0, t0])
    with pytest.raises(StructuralError):
        tetrahedra_orbits(h, [t0])  # orbit leaves the declared family


def test_character_table_of_the_tetrahedra_action():
    data = verify_remark(dodeca_group(), dodeca_tets(), h3_rank=9)
    table = sorted(
        zip(data.class_sizes, data.element_orders, data.in_rotation, data.fixed_counts)
    )
    assert table == sorted(
        [
            (1, 1, True, 10),
            (1, 2, False, 0),
            (12, 5, True, 0),
            (12, 5, True, 0),
            (12, 10, False, 0),
            (12, 10, False, 0),
            (15, 2, True, 2),
            (15, 2, False, 0),
            (20, 3, True, 4),
            (20, 6, False, 0),
        ]
    )
    assert sum(data.class_sizes) == 120
    assert data.fixed_counts == data.predicted_counts
    assert data.h3_character == tuple(f - 1 for f in data.fixed_counts)
    # identity class leads
    assert data.class_sizes[0] == 1 and data.element_orders[0] == 1


def test_verify_remark_guards():
    g = dodeca_group()
    tets = dodeca_tets()
    with pytest.raises(VerificationError):
        verify_remark(g, tets, h3_rank=8)
    with pytest.raises(VerificationError):
        verify_remark(g, tets[:9], h3_rank=9)
    with pytest.raises(VerificationError):
        verify_remark(rotation_subgroup(g), tets, h3_rank=9)


def test_conjugacy_classes_partition_the_group():
    g = automorphisms(build_solid("tetrahedron"))
    classes = conjugacy_classes(g)
    assert sorted(len(c) for c in classes) == [1, 3, 6, 6, 8]
    seen = [p for cls in classes for p in cls]
    assert len(seen) == len(set(seen)) == 24
    assert classes[0] == (identity_perm(4),)


def test_octahedron_and_cube_groups_agree():
    cube = automorphisms(build_solid("cube"))
    octa = automorphisms(build_solid("octahedron"))
    assert cube.order == octa.order == 48
    assert sorted(len(c) for c in conjugacy_classes(cube)) == sorted(
        len(c) for c in conjugacy_classes(octa)
    )
