import math
import random
from itertools import combinations, product

import pytest

from bredon_tc import dee
from bredon_tc.errors import RadiusTooLarge
from bredon_tc.groups import Free, FreeAbelian, Heisenberg, Klein, ball, element, identity, klein_named
from bredon_tc.principality import (
    NOT_PRINCIPAL,
    PRINCIPAL,
    condition_c,
    hall_identity_check,
    is_principal,
    property_n_witness_search,
    shape_census,
    transition_table,
    unknown_at_radius,
)

K = Klein()
x, c, z = klein_named("x"), klein_named("c"), klein_named("z")
CATALOG = [FreeAbelian(2), Free(2), K, Heisenberg()]


def test_klein_witness():
    w = property_n_witness_search(K, 3, 4)
    assert w.to_json() == {"a": "c", "S": ["x"], "n": 2}
    assert w.check()
    assert c * c == z


@pytest.mark.parametrize("G", [FreeAbelian(1), FreeAbelian(3), Heisenberg(), Free(2)], ids=str)
def test_no_witness(G):
    assert property_n_witness_search(G, 3, 4) is None


def test_search_bounds():
    with pytest.raises(RadiusTooLarge):
        property_n_witness_search(K, 99)
    with pytest.raises(ValueError):
        property_n_witness_search(K, 2, 7)


def test_condition_c_examples():
    r = condition_c(K, [], [x])
    assert r.kind == "FiniteNontrivial" and r.index == 2
    assert r.to_json()["witness"] == "c"
    a, b = element(Free(2), 1), element(Free(2), 2)
    r = condition_c(Free(2), [a], [b])
    assert r.kind == "Infinite" and r.index == math.inf
    Z3 = FreeAbelian(3)
    for S in combinations(ball(Z3, 1), 2):
        assert condition_c(Z3, S[:1], S[1:]).kind == "Trivial"


def test_verdicts():
    for G in [FreeAbelian(k) for k in range(1, 5)] + [Free(2), Free(3), Heisenberg()]:
        v = is_principal(G)
        assert v.verdict == PRINCIPAL and v.witness is None and v.case
    v = is_principal(K)
    assert v.verdict == NOT_PRINCIPAL and not v.is_principal
    assert v.witness.to_json() == {"a": "c", "S": ["x"], "n": 2}
    assert v.condition_b["index"] == 2 and v.condition_b["witness"] == "c"
    assert unknown_at_radius(3) == "UnknownAtRadius(3)"


def test_transition_table_klein():
    seen = {(t.source, t.target): t.index for t in transition_table(K)}
    assert 2 in seen.values()
    assert all(i in (1, 2, math.inf) for i in seen.values())
    for G in [Free(2), Heisenberg()]:
        assert all(t.index in (1, math.inf) for t in transition_table(G))


@pytest.mark.parametrize("G", CATALOG, ids=str)
def test_shape_census_clean(G):
    assert shape_census(G, radius=2, max_size=1) == []


def test_condition_b_iff_c():
    rng = random.Random(17)
    for G in CATALOG:
        pool = list(ball(G, 1))
        for _ in range(40):
            b1, b2 = rng.choice(pool), rng.choice(pool)
            S1, S2 = rng.sample(pool, rng.randint(0, 1)), rng.sample(pool, rng.randint(0, 1))
            rb = dee.relative_index(dee.make_H(b1, S1), dee.make_H(b2, S2))
            rc = condition_c(G, S1, S2 + [b2.inverse() * b1])
            assert rb.is_finite_nontrivial == (rc.kind == "FiniteNontrivial")
            if rb.is_finite_nontrivial:
                assert rb.index == rc.index


@pytest.mark.parametrize("G", [Free(2), Heisenberg(), FreeAbelian(2)], ids=str)
def test_property_n_implies_principal_on_samples(G):
    assert property_n_witness_search(G, 2, 4) is None
    subsets = [()] + [(g,) for g in ball(G, 2)]
    for S in subsets:
        for S2 in subsets:
            assert condition_c(G, S, S2).kind in ("Trivial", "Infinite")


def test_klein_breaks_condition_c_on_samples():
    subsets = [()] + [(g,) for g in ball(K, 1)]
    kinds = {condition_c(K, S, S2).kind for S in subsets for S2 in subsets}
    assert "FiniteNontrivial" in kinds


def test_hall_identity_small():
    for G in CATALOG:
        e = identity(G)
        for g, h in product(ball(G, 1), repeat=2):
            assert hall_identity_check(g, h, e)
    H = Heisenberg()
    a, b = element(H, 1, 0, 0), element(H, 0, 1, 0)
    assert hall_identity_check(a, b, a)


@pytest.mark.parametrize("G", CATALOG, ids=str)
def test_hall_identity_ball2(G):
    B = ball(G, 2)
    assert all(hall_identity_check(p, q, r) for p, q, r in product(B, repeat=3))


def test_verdict_json():
    j = is_principal(K).to_json()
    assert j["verdict"] == NOT_PRINCIPAL and j["witness"]["a"] == "c"
