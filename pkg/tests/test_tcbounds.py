import pytest
from hypothesis import given
from hypothesis import strategies as st

from bredon_tc.errors import DegreeMismatch, RankMismatch, RankTooLarge
from bredon_tc.groups import Free, FreeAbelian, Heisenberg, Klein
from bredon_tc.tcbounds import (
    ExteriorClass,
    all_monomials,
    axb_certificate,
    is_essential,
    one,
    random_class,
    restrict_to_diagonal,
    tc_bounds,
    u,
    v,
    wedge,
    zero_divisor,
    zero_divisor_cup_length,
    zero_divisor_product,
)


def test_wedge_examples():
    assert wedge(u(2, 1), u(2, 1)).is_zero()
    p = wedge(zero_divisor(2, 1), zero_divisor(2, 2))
    # generators 0=u1, 1=u2, 2=v1, 3=v2
    assert p.coeffs == {(0, 1): 1, (0, 3): -1, (1, 2): 1, (2, 3): 1}
    assert wedge(zero_divisor(2, 1), zero_divisor(2, 1)).is_zero()
    assert wedge(v(2, 1), u(2, 1)) == -wedge(u(2, 1), v(2, 1))


def test_restrict_examples():
    assert restrict_to_diagonal(zero_divisor(3, 1)).is_zero()
    assert restrict_to_diagonal(u(3, 1)).coeffs == {(0,): 1}
    assert restrict_to_diagonal(zero_divisor_product(3, [1, 2, 3])).is_zero()
    assert restrict_to_diagonal(wedge(u(2, 1), v(2, 2))).coeffs == {(0, 1): 1}


@pytest.mark.parametrize("k", range(1, 9))
def test_zcl(k):
    assert zero_divisor_cup_length(k) == k
    P = zero_divisor_product(k, range(1, k + 1))
    assert not P.is_zero() and len(P.coeffs) == 2**k
    assert P.coeffs[tuple(range(k))] == 1
    for i in range(1, k + 1):
        assert wedge(P, zero_divisor(k, i)).is_zero()


def test_zcl_bounds():
    with pytest.raises(RankTooLarge):
        zero_divisor_cup_length(9)


def test_essential_examples():
    assert is_essential(zero_divisor(3, 1), 1)
    assert not is_essential(u(3, 1), 1)
    assert not restrict_to_diagonal(u(3, 1)).is_zero()
    assert is_essential(zero_divisor_product(3, [1, 2, 3]), 3)
    assert is_essential(3 * zero_divisor(2, 1) - zero_divisor(2, 2), 1)
    assert not is_essential(wedge(u(2, 1), v(2, 2)) - wedge(u(2, 2), v(2, 1)), 2)
    with pytest.raises(DegreeMismatch):
        is_essential(u(2, 1) + wedge(u(2, 1), u(2, 2)), 1)


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        wedge(u(2, 1), u(3, 1))


classes = st.integers(1, 3).flatmap(
    lambda k: st.tuples(
        st.just(2 * k),
        st.integers(0, 2 * k).flatmap(lambda d: st.tuples(st.just(d), st.lists(st.integers(-3, 3), min_size=40, max_size=40))),
    )
)


def mk(n, params):
    d, cs = params
    return random_class(n, d, cs)


@given(classes, st.data())
def test_graded_anticommutativity(c, data):
    n, s1 = c
    d2 = data.draw(st.integers(0, n))
    s2 = (d2, data.draw(st.lists(st.integers(-3, 3), min_size=40, max_size=40)))
    x, y = mk(n, s1), mk(n, s2)
    sign = (-1) ** (s1[0] * d2)
    assert wedge(x, y) == sign * wedge(y, x)


@given(classes, classes, classes)
def test_associative_and_bilinear(a, b, c):
    n = a[0]
    x, y, z = mk(n, a[1]), mk(n, (b[1][0] % (n + 1), b[1][1])), mk(n, (c[1][0] % (n + 1), c[1][1]))
    assert wedge(wedge(x, y), z) == wedge(x, wedge(y, z))
    assert wedge(x, y + z) == wedge(x, y) + wedge(x, z)
    assert wedge(one(n), x) == x


@given(st.integers(1, 3), st.data())
def test_odd_square_vanishes(k, data):
    cs = data.draw(st.lists(st.integers(-5, 5), min_size=2 * k, max_size=2 * k))
    x = random_class(2 * k, 1, cs)
    assert wedge(x, x).is_zero()


@given(st.integers(1, 3), st.data())
def test_essential_implies_zero_divisor(k, data):
    d = data.draw(st.integers(1, k))
    cs = data.draw(st.lists(st.integers(-2, 2), min_size=len(all_monomials(2 * k, d)), max_size=len(all_monomials(2 * k, d))))
    x = random_class(2 * k, d, cs)
    if is_essential(x, d):
        assert restrict_to_diagonal(x).is_zero()


def test_reports():
    r1 = tc_bounds(FreeAbelian(1))
    assert (r1.lower, r1.upper, r1.exact, r1.classical_upper) == (1, 3, None, 2)
    r2 = tc_bounds(FreeAbelian(2))
    assert (r2.lower, r2.upper, r2.exact) == (2, 3, None)
    for k in (3, 4):
        r = tc_bounds(FreeAbelian(k))
        assert r.exact == k and r.lower_tag and r.upper_tag
    for k in (2, 3):
        r = tc_bounds(Free(k))
        assert r.exact == 2 and r.lower_tag == "AxB" and r.certificates["AxB"]["valid"]
    rk = tc_bounds(Klein())
    assert (rk.lower, rk.upper, rk.exact) == (2, 4, None)
    rh = tc_bounds(Heisenberg())
    assert (rh.lower, rh.upper, rh.exact) == (3, 6, None)
    for r in (r1, r2, rk, rh):
        assert r.lower <= r.upper and r.citations


def test_exterior_class_normalizes():
    x = ExteriorClass(4, {(1, 0): 1, (0, 1): 1, (2, 2): 5})
    assert x.is_zero()
    assert ExteriorClass(4, {(1, 0): 1}).coeffs == {(0, 1): -1}
