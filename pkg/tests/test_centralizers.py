import math
import random
from itertools import combinations

import pytest

from bredon_tc.centralizers import (
    CYCLIC,
    LATTICE2,
    TRIVIAL,
    WHOLE,
    CosetDescriptor,
    Cyclic,
    Lattice2,
    Trivial,
    Whole,
    center,
    centralizer,
    centralizer_bruteforce,
    coset_witness,
    double_centralizer,
    intersect,
    primitive_root,
    same_subgroup,
    subgroup_index,
)
from bredon_tc.errors import NotASubgroup, RadiusTooLarge
from bredon_tc.groups import Free, FreeAbelian, Heisenberg, Klein, ball, element, identity, klein_named, power

K = Klein()
F2 = Free(2)
A_K, B_K = element(K, 1, 0), element(K, 0, 1)
a, b = element(F2, 1), element(F2, 2)
CATALOG = [FreeAbelian(2), F2, K, Heisenberg()]


def test_klein_centralizer_of_x():
    x = klein_named("x")
    Z = centralizer(K, [x])
    assert Z.kind == LATTICE2
    assert same_subgroup(Z, Lattice2(A_K, power(B_K, 2)))
    # generated by x, y, z as well
    assert same_subgroup(Z, Lattice2(x, klein_named("z")))
    assert Z.contains(klein_named("y"))


def test_klein_centralizer_of_z_squared_is_whole():
    z = klein_named("z")
    assert centralizer(K, [z * z]).kind == WHOLE
    assert centralizer(K, []).kind == WHOLE


def test_free_centralizer_of_a():
    Z = centralizer(F2, [a])
    assert Z.kind == CYCLIC and same_subgroup(Z, Cyclic(a))
    brute = set(centralizer_bruteforce(F2, [a], 5))
    assert brute == {g for g in ball(F2, 5) if Z.contains(g)}


def test_abelian_always_whole():
    Z2 = FreeAbelian(2)
    for S in combinations(ball(Z2, 1), 2):
        assert centralizer(Z2, S).kind == WHOLE


def test_double_centralizer_examples():
    x = klein_named("x")
    assert same_subgroup(double_centralizer(K, [x]), Lattice2(A_K, power(B_K, 2)))
    D = double_centralizer(K, [])
    assert D.kind == CYCLIC and same_subgroup(D, Cyclic(power(B_K, 2)))
    assert same_subgroup(center(K), D)
    assert same_subgroup(double_centralizer(F2, [a]), Cyclic(a))


def test_bruteforce_examples():
    assert set(centralizer_bruteforce(F2, [a], 3)) == {power(a, n) for n in range(-3, 4)}
    x = klein_named("x")
    got = {g.data for g in centralizer_bruteforce(K, [x], 2)}
    want = {(0, 0), (1, 0), (-1, 0), (2, 0), (-2, 0), (0, 2), (0, -2)}
    # (±1, ±2) have word length 3
    assert got == want
    for G in CATALOG:
        assert centralizer_bruteforce(G, [], 2) == ball(G, 2)


def test_bruteforce_radius_cap():
    with pytest.raises(RadiusTooLarge):
        centralizer_bruteforce(F2, [a], 99)


def test_index_examples():
    assert subgroup_index(Whole(K), Lattice2(A_K, power(B_K, 2))) == 2
    g = element(F2, 1, 2)
    assert subgroup_index(Cyclic(g), Cyclic(power(g, 3))) == 3
    assert subgroup_index(Lattice2(A_K, power(B_K, 2)), Cyclic(A_K)) == math.inf
    assert subgroup_index(Whole(F2), Cyclic(a)) == math.inf
    assert subgroup_index(Whole(FreeAbelian(2)), Lattice2(element(FreeAbelian(2), 2, 0), element(FreeAbelian(2), 0, 3))) == 6
    assert subgroup_index(Cyclic(a), Trivial(F2)) == math.inf


def test_index_requires_containment():
    with pytest.raises(NotASubgroup):
        subgroup_index(Cyclic(a), Cyclic(b))


def test_coset_witness_for_klein():
    w = coset_witness(Whole(K), centralizer(K, [klein_named("x")]))
    assert w is not None and w.data[1] % 2 == 1
    assert coset_witness(Whole(K), Whole(K)) is None


def test_coset_descriptor_membership():
    x = klein_named("x")
    C = CosetDescriptor(center(K), x.inverse())
    for g in ball(K, 3):
        assert C.contains(g) == center(K).contains(g * x)


def test_descriptor_validation():
    with pytest.raises(NotASubgroup):
        Cyclic(identity(F2))
    with pytest.raises(NotASubgroup):
        Lattice2(A_K, B_K)  # do not commute
    with pytest.raises(NotASubgroup):
        Lattice2(A_K, power(A_K, 2))


def test_primitive_root_free():
    g = element(F2, 2, 1, 1, 2, 1, 1, -2)  # b (a a b a a) b^-1 ... conjugate of a power
    r, n = primitive_root(power(element(F2, 1, 2), 3))
    assert n in (3, -3) and same_subgroup(Cyclic(r), Cyclic(element(F2, 1, 2)))
    r, n = primitive_root(g)
    assert power(r, n) == g


@pytest.mark.parametrize("G", CATALOG, ids=str)
@pytest.mark.parametrize("radius", [4])
def test_oracle_agreement_ball1_pairs(G, radius):
    pool = ball(G, 1)
    B = ball(G, radius)
    for r in range(3):
        for S in combinations(pool, r):
            Z = centralizer(G, S)
            assert set(centralizer_bruteforce(G, S, radius)) == {g for g in B if Z.contains(g)}


@pytest.mark.parametrize("G", CATALOG, ids=str)
def test_bicommutant_stable(G):
    for S in combinations(ball(G, 2), 1):
        Z = centralizer(G, S)
        ZZZ = centralizer(G, double_centralizer(G, S).generating_set())
        assert same_subgroup(Z, ZZZ)


def test_free_dichotomy():
    elems = [g for g in ball(F2, 3) if not g.is_identity]
    for g1 in elems:
        for g2 in elems:
            Z1, Z2 = centralizer(F2, [g1]), centralizer(F2, [g2])
            assert same_subgroup(Z1, Z2) or intersect(Z1, Z2).kind == TRIVIAL


@pytest.mark.parametrize("G", CATALOG, ids=str)
def test_intersections_stay_in_four_variants(G):
    rng = random.Random(11)
    pool = list(ball(G, 2))
    B = ball(G, 3)
    for _ in range(60):
        Z1 = centralizer(G, rng.sample(pool, rng.randint(0, 2)))
        Z2 = centralizer(G, rng.sample(pool, rng.randint(0, 2)))
        I = intersect(Z1, Z2)
        assert I.kind in (WHOLE, TRIVIAL, CYCLIC, LATTICE2)
        for g in B:
            assert I.contains(g) == (Z1.contains(g) and Z2.contains(g))
