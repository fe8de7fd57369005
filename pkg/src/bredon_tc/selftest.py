"""Invariant suite run by ``bredon-tc selftest``.

Checks run in a fixed order and stop at the first failure, so a broken group
law is reported by the earliest check that sees it.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Callable

from . import bredon, dee, joins, principality, tcbounds
from .centralizers import centralizer, centralizer_bruteforce, double_centralizer
from .groups import FreeAbelian, Free, GroupId, Heisenberg, Klein, ball, power

CATALOG: tuple[GroupId, ...] = (FreeAbelian(2), Free(2), Klein(), Heisenberg())


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    wall_time: float

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail, "wall_time": round(self.wall_time, 4)}


def check_hall_identity() -> str | None:
    for G in CATALOG:
        B = ball(G, 2)
        for x, y, z in product(B, repeat=3):
            if not principality.hall_identity_check(x, y, z):
                return f"{G}: ({x}, {y}, {z})"
    return None


def check_associativity() -> str | None:
    for G in CATALOG:
        B = ball(G, 2)
        for x, y, z in product(B, repeat=3):
            if (x * y) * z != x * (y * z):
                return f"{G}: ({x}, {y}, {z})"
    return None


def check_inverses() -> str | None:
    for G in CATALOG:
        for g in ball(G, 3):
            if not (g * g.inverse()).is_identity or not (g.inverse() * g).is_identity:
                return f"{G}: {g}"
    return None


def check_torsion_free() -> str | None:
    for G in CATALOG:
        for g in ball(G, 3):
            if not g.is_identity and any(power(g, n).is_identity for n in range(1, 7)):
                return f"{G}: {g}"
    return None


def check_centralizer_oracle(radius: int = 3) -> str | None:
    for G in CATALOG:
        pool = ball(G, 1)
        for r in range(3):
            for S in combinations(pool, r):
                Z = centralizer(G, S)
                brute = set(centralizer_bruteforce(G, S, radius))
                closed = {g for g in ball(G, radius) if Z.contains(g)}
                if brute != closed:
                    return f"{G}: S={[str(s) for s in S]}"
    return None


def check_bicommutant() -> str | None:
    for G in CATALOG:
        for S in combinations(ball(G, 1), 1):
            Z = centralizer(G, S)
            ZZZ = centralizer(G, double_centralizer(G, S).generating_set())
            if not all(ZZZ.contains(g) for g in Z.generating_set()):
                return f"{G}: S={[str(s) for s in S]}"
    return None


def check_dee_family(cases: int = 10, seed: int = 7) -> str | None:
    rng = random.Random(seed)
    for G in CATALOG:
        pool = list(ball(G, 1))
        test = dee.pairs(list(ball(G, 2)))
        for _ in range(cases):
            H1 = dee.make_H(rng.choice(pool), rng.sample(pool, rng.randint(0, 1)))
            H2 = dee.make_H(rng.choice(pool), rng.sample(pool, rng.randint(0, 1)))
            I = dee.intersect(H1, H2)
            for p in test:
                if dee.member(I, p) != (dee.member(H1, p) and dee.member(H2, p)):
                    return f"{G}: {H1} ∩ {H2} at {p}"
            fp = dee.fixed_points(H1)
            H_el = [p for p in test if dee.member(H1, p)]
            for g in ball(G, 2):
                if fp.contains(g) and not dee.fixed_by(H_el, g):
                    return f"{G}: fixed points of {H1} at {g}"
    return None


def check_principality() -> str | None:
    expected = {
        FreeAbelian(3): principality.PRINCIPAL,
        Free(2): principality.PRINCIPAL,
        Heisenberg(): principality.PRINCIPAL,
        Klein(): principality.NOT_PRINCIPAL,
    }
    for G, want in expected.items():
        v = principality.is_principal(G)
        if v.verdict != want:
            return f"{G}: {v.verdict}"
        if v.witness is not None and not v.witness.check():
            return f"{G}: witness fails"
    w = principality.property_n_witness_search(Klein(), 3, 2)
    if w is None or not w.check():
        return "Klein: no Property N witness"
    return None


def check_cdd() -> str | None:
    for k in range(1, 5):
        r = bredon.cd_d_report(k)
        if r.cd_d != k or not r.torsion_free or r.ranks != [comb(k, j) for j in range(k + 1)]:
            return f"k={k}: ranks {r.ranks}"
        if not bredon.dd_is_zero(bredon.cubical_resolution(k)):
            return f"k={k}: d o d != 0"
    return None


def check_phi() -> str | None:
    for k in range(1, 5):
        x = bredon.phi_on_constant_cohomology(k, bredon.top_bredon_class(k))
        if x != tcbounds.zero_divisor_product(k, range(1, k + 1)) or not tcbounds.is_essential(x, k):
            return f"k={k}"
        if not tcbounds.restrict_to_diagonal(x).is_zero():
            return f"k={k}: not a zero divisor"
    for k in range(1, 9):
        if tcbounds.zero_divisor_cup_length(k) != k:
            return f"zcl k={k}"
    return None


def check_joins() -> str | None:
    for m in range(1, 4):
        for k in range(3):
            if not joins.wedge_check(m, k).passed:
                return f"m={m}, k={k}"
    return None


CHECKS: tuple[tuple[str, Callable[[], str | None]], ...] = (
    ("hall_identity", check_hall_identity),
    ("associativity", check_associativity),
    ("inverses", check_inverses),
    ("torsion_free", check_torsion_free),
    ("centralizer_oracle", check_centralizer_oracle),
    ("bicommutant", check_bicommutant),
    ("dee_family", check_dee_family),
    ("principality", check_principality),
    ("cd_d", check_cdd),
    ("phi_zcl", check_phi),
    ("join_wedge", check_joins),
)


def run_selftest(stop_on_failure: bool = True) -> list[CheckResult]:
    results = []
    for name, fn in CHECKS:
        t0 = time.perf_counter()
        try:
            problem = fn()
        except Exception as exc:  # a crash counts as a failure of that check
            problem = f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, problem is None, problem or "ok", time.perf_counter() - t0))
        if problem is not None and stop_on_failure:
            break
    return results


def first_failure(results: list[CheckResult]) -> CheckResult | None:
    return next((r for r in results if not r.passed), None)


__all__ = ["CHECKS", "CheckResult", "first_failure", "run_selftest"]
