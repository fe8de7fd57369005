import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bredon_tc.dee import diagonal, fixed_points, make_H, trivial_subgroup
from bredon_tc.errors import SizeTooLarge
from bredon_tc.groups import FreeAbelian, Klein, ball, klein_named
from bredon_tc.intlinalg import AbelianGroup
from bredon_tc.joins import (
    boundary_matrix,
    build_join,
    euler_characteristic,
    fixed_subcomplex,
    homology,
    homology_euler,
    wedge_check,
)


def test_square():
    J = build_join("ab", 2)
    assert len(J.vertices()) == 4 and J.count(1) == 4 and J.dimension == 1
    assert homology(J) == [AbelianGroup(0), AbelianGroup(1)]


def test_point_join_is_simplex():
    for k in range(4):
        J = build_join([0], k + 1)
        assert J.count(k) == 1 and J.dimension == k
        assert all(g.is_zero for g in homology(J))


def test_k33():
    J = build_join(range(3), 2)
    assert J.count(0) == 6 and J.count(1) == 9
    edges = J.simplices(1)
    assert all(s[0][0] == 0 and s[1][0] == 1 for s in edges)
    assert homology(J)[1] == AbelianGroup(4)


def test_m3_k2():
    H = homology(build_join(range(3), 3))
    assert H == [AbelianGroup(0), AbelianGroup(0), AbelianGroup(8)]


def test_face_closed_and_counts():
    for m in range(1, 4):
        for c in range(1, 4):
            J = build_join(range(m), c)
            assert len(J.simplices(c - 1)) == m**c
            assert all(J.is_face_closed(d) for d in range(1, c))


def test_boundary_squares_to_zero():
    J = build_join(range(3), 3)
    from bredon_tc.intlinalg import matmul

    for d in range(1, 3):
        P = matmul(boundary_matrix(J, d - 1), boundary_matrix(J, d))
        assert all(x == 0 for row in P for x in row)


def test_size_caps():
    with pytest.raises(SizeTooLarge):
        build_join(range(10), 6)
    with pytest.raises(SizeTooLarge):
        homology(build_join(range(10), 4))
    with pytest.raises(ValueError):
        build_join([], 2)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("k", [0, 1, 2])
def test_wedge_formula(m, k):
    w = wedge_check(m, k)
    assert w.passed and w.groups[k].rank == (m - 1) ** (k + 1)
    assert all(not g.torsion for g in w.groups)


@settings(max_examples=20)
@given(st.integers(1, 5), st.integers(1, 3))
def test_euler_cross_check(m, c):
    J = build_join(range(m), c)
    assert euler_characteristic(J) == homology_euler(homology(J))


def test_fixed_subcomplex_examples():
    K = Klein()
    J = build_join(ball(K, 2), 2)
    assert fixed_subcomplex(J, trivial_subgroup(K)) == J
    x = klein_named("x")
    H = make_H(x, [])
    sub = fixed_subcomplex(J, H)
    coset = fixed_points(H)
    assert set(sub.labels) == {g for g in ball(K, 2) if coset.contains(g)}
    assert sub.copies == 2
    Z2 = FreeAbelian(2)
    J2 = build_join(ball(Z2, 1), 2)
    assert fixed_subcomplex(J2, diagonal(Z2)).labels == J2.labels


def test_fixed_subcomplex_is_join_of_fixed_vertices():
    K = Klein()
    J = build_join(ball(K, 2), 2)
    for H in (diagonal(K), make_H(klein_named("c"), [klein_named("x")])):
        sub = fixed_subcomplex(J, H)
        keep = set(sub.labels)
        full = [s for s in J.simplices(1) if all(J.labels[i] in keep for _, i in s)]
        assert len(sub.simplices(1)) == len(full)


def test_empty_homology():
    from bredon_tc.joins import JoinComplex

    assert homology(JoinComplex((), 2)) == []
