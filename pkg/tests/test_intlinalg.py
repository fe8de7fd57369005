from hypothesis import given
from hypothesis import strategies as st

from bredon_tc import intlinalg
from bredon_tc.intlinalg import AbelianGroup, determinant, invariant_factors, smith_form, solve, subquotient

from oracles import leibniz_det


def matrices(max_rows=5, max_cols=5, lo=-6, hi=6):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=m, max_size=m)
        )
    )


@given(matrices())
def test_smith_transforms(A):
    sf = smith_form(A)
    D = intlinalg.matmul(intlinalg.matmul(sf.U, A), sf.V)
    m, n = sf.shape
    for i in range(m):
        for j in range(n):
            want = sf.diagonal[i] if i == j and i < sf.rank else 0
            assert D[i][j] == want
    for a, b in zip(sf.diagonal, sf.diagonal[1:]):
        assert b % a == 0
    assert abs(determinant(sf.U)) == 1 and abs(determinant(sf.V)) == 1


@given(matrices())
def test_invariant_factors_paths_agree(A):
    exact = list(smith_form(A).diagonal)
    assert invariant_factors(A, use_jit=True) == exact
    assert invariant_factors(A, use_jit=False) == exact


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_leibniz(A):
    assert determinant(A) == leibniz_det(A)


@given(matrices(), st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_solve_consistent(A, x):
    n = len(A[0])
    b = intlinalg.matvec(A, x[:n])
    y = solve(A, b)
    assert y is not None and intlinalg.matvec(A, y) == b


def test_solve_detects_no_solution():
    assert solve([[2, 0], [0, 2]], [1, 0]) is None


def test_lattice_index_and_intersection():
    assert intlinalg.lattice_index([[2, 0], [0, 3]], [[1, 0], [0, 1]]) == 6
    assert intlinalg.lattice_index([[1, 0]], [[1, 0], [0, 1]]) is None
    B = intlinalg.lattice_intersection([[2, 0], [0, 1]], [[1, 0], [0, 3]], 2)
    assert intlinalg.lattice_index(B, [[2, 0], [0, 3]]) == 1


def test_subquotient_circle_with_sign():
    # Hom of the k=1 Koszul complex into Z with t acting by -1: 0 -> Z -(-2)-> Z
    assert subquotient([[[-2]]], [1, 1], [[], []]) == [AbelianGroup(0), AbelianGroup(0, (2,))]


def test_subquotient_torsion_coefficients():
    # Z/4 with t acting trivially: both groups are Z/4
    assert subquotient([[[0]]], [1, 1], [[[4]], [[4]]]) == [AbelianGroup(0, (4,)), AbelianGroup(0, (4,))]
    # Z/4 with t = -1: kernel of 2 on Z/4 and cokernel Z/2
    assert subquotient([[[-2]]], [1, 1], [[[4]], [[4]]]) == [AbelianGroup(0, (2,)), AbelianGroup(0, (2,))]


def test_homology_from_boundaries_circle():
    # triangle boundary: 3 vertices, 3 edges
    d1 = [[-1, 0, 1], [1, -1, 0], [0, 1, -1]]
    H = intlinalg.homology_from_boundaries([3, 3], {1: d1})
    assert H == [AbelianGroup(1), AbelianGroup(1)]


def test_abelian_group_str():
    assert str(AbelianGroup(0)) == "0"
    assert str(AbelianGroup(2, (2, 4))) == "Z^2 + Z/2 + Z/4"
