"""Principality of catalog groups.

A group is principal when every index ``[Z(S) : Z(S ∪ S')]`` is 1 or
infinite. For the catalog the centralizers come in finitely many shapes, so
the question reduces to a finite table of shape transitions. Each row of the
table is realized by explicit sets ``S, S'`` and its index is computed by the
descriptor algebra, not asserted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import dee
from .centralizers import (
    CYCLIC,
    INFINITE,
    LATTICE2,
    TRIVIAL,
    WHOLE,
    SubgroupDescriptor,
    centralizer,
    commute_matrix,
    coset_witness,
    subgroup_index,
)
from .errors import GroupMismatch, RadiusTooLarge
from .groups import (
    GroupElement,
    GroupId,
    ball,
    commutator,
    element,
    klein_name_of,
    klein_named,
    power,
    radius_cap,
)

MAX_POWER = 6

PRINCIPAL = "Principal"
NOT_PRINCIPAL = "NotPrincipal"


def unknown_at_radius(radius: int) -> str:
    return f"UnknownAtRadius({radius})"


# ---------------------------------------------------------------------------
# Property N
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PropertyNWitness:
    """``a^n`` commutes with every element of ``S`` but ``a`` does not."""

    a: GroupElement
    S: tuple[GroupElement, ...]
    n: int

    def check(self) -> bool:
        Z = centralizer(self.a.group, self.S)
        return Z.contains(power(self.a, self.n)) and not Z.contains(self.a)

    def to_json(self) -> dict:
        return {"a": _name(self.a), "S": [_name(s) for s in self.S], "n": self.n}


def _name(g: GroupElement) -> str:
    if g.group.kind == "klein":
        named = klein_name_of(g)
        if named:
            return named
    return str(g)


def _candidates(group: GroupId, radius: int) -> list[GroupElement]:
    B = ball(group, radius)
    if group.kind != "klein":
        return list(B)
    members = set(B)
    named = [klein_named(n) for n in ("x", "y", "z", "c", "d")]
    named = [g for g in named if g in members]
    return named + [g for g in B if g not in named]


def property_n_witness_search(group: GroupId, radius: int, max_power: int = 4, use_jit: bool | None = None) -> PropertyNWitness | None:
    """First ``(a, S, n)`` with ``a^n ∈ Z(S)`` and ``a ∉ Z(S)`` inside the bounds.

    Only singletons ``S = {s}`` are searched. That loses nothing: if a
    witness exists with ``|S| <= 2`` then some single ``s ∈ S`` commutes with
    ``a^n`` but not with ``a``. The scan order is ``n``, then ``a``, then
    ``s``, each over the candidate list (Klein's named elements first).
    """
    if radius > radius_cap():
        raise RadiusTooLarge(f"radius {radius} exceeds cap {radius_cap()}")
    if not 1 <= max_power <= MAX_POWER:
        raise ValueError(f"max_power must be in 1..{MAX_POWER}")
    if group.is_abelian:
        return None
    cands = _candidates(group, radius)
    base = commute_matrix(cands, cands, use_jit=use_jit)
    for n in range(2, max_power + 1):
        powers = [power(a, n) for a in cands]
        hit = commute_matrix(powers, cands, use_jit=use_jit) & ~base
        rows = np.flatnonzero(hit.any(axis=1))
        if len(rows):
            i = int(rows[0])
            j = int(np.flatnonzero(hit[i])[0])
            return PropertyNWitness(cands[i], (cands[j],), n)
    return None


# ---------------------------------------------------------------------------
# condition (c)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConditionC:
    kind: str  # "Trivial" | "Infinite" | "FiniteNontrivial"
    index: float | int
    witness: GroupElement | None = None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "index": "infinite" if self.index == INFINITE else self.index,
            "witness": None if self.witness is None else _name(self.witness),
        }


def condition_c(group: GroupId, S, S_prime) -> ConditionC:
    """Classify ``[Z(S) : Z(S ∪ S')]``."""
    S, S_prime = list(S), list(S_prime)
    A = centralizer(group, S)
    B = centralizer(group, S + S_prime)
    idx = subgroup_index(A, B)
    if idx == 1:
        return ConditionC("Trivial", 1)
    if idx == INFINITE:
        return ConditionC("Infinite", INFINITE)
    return ConditionC("FiniteNontrivial", idx, coset_witness(A, B))


# ---------------------------------------------------------------------------
# shape table
# ---------------------------------------------------------------------------


def shape(D: SubgroupDescriptor) -> str:
    """Shape of a centralizer descriptor, up to automorphisms of the group."""
    group = D.group
    if D.kind in (WHOLE, TRIVIAL):
        return D.kind
    g = D.gens[0]
    if group.kind == "free":
        return "cyclic-root"
    if group.kind == "heisenberg":
        if D.kind == CYCLIC and g.data[:2] == (0, 0):
            return "center"
        if D.kind == LATTICE2:
            return "plane"
    if group.kind == "klein":
        if D.kind == LATTICE2 and subgroup_index(D, centralizer(group, [klein_named("x")])) == 1:
            return "E"
        if D.kind == CYCLIC and g.data[1] % 2:
            return "odd-cyclic"
        if D.kind == CYCLIC and g.data == (0, 2):
            return "center"
    if group.kind == "z":
        return "lattice"
    return f"other:{D}"


@dataclass(frozen=True)
class Transition:
    source: str
    target: str
    index: float | int
    S: tuple[GroupElement, ...]
    S_prime: tuple[GroupElement, ...]

    def to_json(self) -> dict:
        return {
            "from": self.source,
            "to": self.target,
            "index": "infinite" if self.index == INFINITE else self.index,
            "S": [_name(s) for s in self.S],
            "S_prime": [_name(s) for s in self.S_prime],
        }


def _realizers(group: GroupId) -> list[tuple[list, list]]:
    """Pairs ``(S, S')`` realizing every shape transition ``Z(S) ⊇ Z(S ∪ S')``."""
    kind = group.kind
    e = lambda *d: element(group, *d)  # noqa: E731
    if group.is_abelian:
        return [([], [])]
    if kind == "free":
        a, b = e(1), e(2)
        return [
            ([], []),
            ([], [a]),
            ([], [a, b]),
            ([a], [power(a, 2)]),
            ([a], [b]),
        ]
    if kind == "heisenberg":
        a, b, c = e(1, 0, 0), e(0, 1, 0), e(0, 0, 1)
        return [
            ([], []),
            ([], [a]),
            ([], [a, b]),
            ([a], [power(a, 2) * c]),
            ([a], [b]),
            ([a, b], [c]),
        ]
    x, c, z = klein_named("x"), klein_named("c"), klein_named("z")
    return [
        ([], []),
        ([], [x]),
        ([], [c]),
        ([], [x, c]),
        ([x], [power(x, 3)]),
        ([x], [c]),
        ([c], [z]),
        ([c], [klein_named("d")]),
    ]


def transition_table(group: GroupId) -> list[Transition]:
    rows = []
    for S, Sp in _realizers(group):
        A = centralizer(group, S)
        B = centralizer(group, S + Sp)
        rows.append(Transition(shape(A), shape(B), subgroup_index(A, B), tuple(S), tuple(Sp)))
    return rows


# Why the tables are complete:
#   free: Z(S) is the whole group, the cyclic group of a primitive root, or
#     trivial; two distinct primitive roots generate trivially meeting groups.
#   heisenberg: every centralizer contains the center <c>; a noncentral
#     element has centralizer <(p0,q0,0), c> with (p0,q0) primitive, and two
#     such planes with different directions meet in <c>.
#   klein: a single centralizer is K, E=<a,b^2> or <(m,1)>; intersections of
#     these are again one of them or the center <b^2>.
CASE_ANALYSIS = {
    "z": "abelian: every centralizer is the whole group",
    "free": "free: shapes whole / cyclic-root / trivial",
    "heisenberg": "heisenberg: shapes whole / plane / center",
    "klein": "klein: shapes whole / E / odd-cyclic / center",
}


@dataclass(frozen=True)
class PrincipalityVerdict:
    verdict: str
    group: GroupId
    case: str | None = None
    transitions: tuple[Transition, ...] = ()
    witness: PropertyNWitness | None = None
    condition_b: dict | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def is_principal(self) -> bool:
        return self.verdict == PRINCIPAL

    def to_json(self) -> dict:
        out = {
            "verdict": self.verdict,
            "case": self.case,
            "transitions": [t.to_json() for t in self.transitions],
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.condition_b is not None:
            out["condition_b"] = self.condition_b
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _case_key(group: GroupId) -> str:
    return "z" if group.is_abelian else group.kind


def is_principal(group: GroupId) -> PrincipalityVerdict:
    """Exact verdict from the shape transition table."""
    key = _case_key(group)
    rows = tuple(transition_table(group))
    bad = [t for t in rows if t.index not in (1, INFINITE)]
    if not bad:
        return PrincipalityVerdict(PRINCIPAL, group, CASE_ANALYSIS[key], rows)
    t = bad[0]
    witness = None
    cond_b = None
    if group.kind == "klein":
        x = klein_named("x")
        witness = PropertyNWitness(klein_named("c"), (x,), 2)
        ri = dee.relative_index(dee.diagonal(group), dee.make_H(x))
        cond_b = {
            "H": "H[b=1, S={}]",
            "H_prime": "H[b=x, S={}]",
            "index": ri.index,
            "witness": _name(ri.witness),
        }
    notes = (f"index {t.index} on {t.source} -> {t.target}",)
    return PrincipalityVerdict(NOT_PRINCIPAL, group, CASE_ANALYSIS[key], rows, witness, cond_b, notes)


def shape_census(group: GroupId, radius: int = 2, max_size: int = 2) -> list[str]:
    """Sampled cross-check of the transition table.

    Returns a list of problems: shapes outside the table, or a transition
    whose index differs from the table's value for that shape pair.
    """
    table = {(t.source, t.target): t.index for t in transition_table(group)}
    known = {s for pair in table for s in pair}
    B = [g for g in ball(group, radius) if not g.is_identity]
    subsets: list[tuple] = [()]
    for r in range(1, max_size + 1):
        subsets += list(combinations(B, r))
    problems = []
    cache = {S: centralizer(group, S) for S in subsets}
    for S in subsets:
        A = cache[S]
        sa = shape(A)
        if sa not in known:
            problems.append(f"shape {sa} of Z({[str(s) for s in S]})")
        for g in B:
            Bd = centralizer(group, S + (g,))
            sb = shape(Bd)
            idx = subgroup_index(A, Bd)
            expected = table.get((sa, sb))
            if expected is None:
                if idx not in (1, INFINITE):
                    problems.append(f"untabled transition {sa}->{sb} with index {idx}")
                elif sb not in known:
                    problems.append(f"shape {sb}")
            elif expected != idx:
                problems.append(f"{sa}->{sb}: index {idx}, table {expected}")
    return problems


def hall_identity_check(x: GroupElement, y: GroupElement, z: GroupElement) -> bool:
    """``[xy, z] == [x, [y, z]] [y, z] [x, z]``."""
    if not (x.group == y.group == z.group):
        raise GroupMismatch("hall identity needs one group")
    yz = commutator(y, z)
    return commutator(x * y, z) == commutator(x, yz) * yz * commutator(x, z)


__all__ = [
    "ConditionC",
    "NOT_PRINCIPAL",
    "PRINCIPAL",
    "PrincipalityVerdict",
    "PropertyNWitness",
    "Transition",
    "condition_c",
    "hall_identity_check",
    "is_principal",
    "property_n_witness_search",
    "shape",
    "shape_census",
    "transition_table",
]
