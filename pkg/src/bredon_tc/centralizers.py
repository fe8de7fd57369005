"""Closed-form centralizers and the subgroup descriptors they live in.

Every centralizer ``Z(S)`` in a catalog group is one of four shapes:
the whole group, the trivial group, an infinite cyclic group, or a rank-2
lattice (two commuting, independent generators). Intersections and indices
are computed exactly on these shapes; anything outside the closed case table
raises :class:`UnknownDescriptorCase`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from . import _kernels, intlinalg
from .errors import ElementNotInGroup, GroupMismatch, NotASubgroup, UnknownDescriptorCase
from .groups import (
    GroupElement,
    GroupId,
    _generator_data,
    ball,
    commutes,
    free_inv,
    generators,
    identity,
    power,
)

INFINITE = math.inf

WHOLE, TRIVIAL, CYCLIC, LATTICE2 = "whole", "trivial", "cyclic", "lattice2"


# ---------------------------------------------------------------------------
# free-group word combinatorics
# ---------------------------------------------------------------------------


def cyclic_decomposition(word: tuple) -> tuple[tuple, tuple]:
    """Split ``w = u v u^-1`` with ``v`` cyclically reduced."""
    i = 0
    n = len(word)
    while n - 2 * i >= 2 and word[i] == -word[n - 1 - i]:
        i += 1
    return word[:i], word[i : n - i]


def primitive_root(g: GroupElement) -> tuple[GroupElement, int]:
    """``(r, e)`` with ``g = r^e``, ``e >= 1`` and ``r`` not a proper power.

    Only defined for nontrivial free-group elements.
    """
    if g.group.kind != "free" or g.is_identity:
        raise ValueError("primitive_root needs a nontrivial free-group word")
    u, v = cyclic_decomposition(g.data)
    n = len(v)
    for p in range(1, n + 1):
        if n % p == 0 and v[:p] * (n // p) == v:
            root = u + v[:p] + free_inv(u)
            return GroupElement._raw(g.group, root), n // p
    raise AssertionError("unreachable")


def _orient(g: GroupElement) -> GroupElement:
    """Pick a canonical generator among ``g`` and ``g^-1``."""
    h = g.inverse()
    return g if g.data >= h.data else h


# ---------------------------------------------------------------------------
# abelian coordinates
# ---------------------------------------------------------------------------
# psi is injective on the group and additive on every abelian subgroup that the
# lattice code below is applied to.


def _psi(g: GroupElement) -> list[int] | None:
    kind = g.group.kind
    if kind == "z":
        return list(g.data)
    if kind == "heisenberg":
        p, q, r = g.data
        return [p, q, 2 * r + p * q]
    if kind == "klein":
        m, n = g.data
        if n % 2:
            return None
        return [m, n // 2]
    return None


def _psi_inv(group: GroupId, v: Sequence[int]) -> GroupElement:
    kind = group.kind
    if kind == "z":
        return GroupElement._raw(group, tuple(v))
    if kind == "heisenberg":
        p, q, w = v
        if (w - p * q) % 2:
            raise ArithmeticError("vector outside the image of psi")
        return GroupElement._raw(group, (p, q, (w - p * q) // 2))
    if kind == "klein":
        return GroupElement._raw(group, (v[0], 2 * v[1]))
    raise UnknownDescriptorCase(f"no lattice coordinates on {group}")


def _psi_dim(group: GroupId) -> int:
    return {"z": group.rank, "heisenberg": 3, "klein": 2}[group.kind]


def cyclic_log(gen: GroupElement, g: GroupElement) -> int | None:
    """``N`` with ``gen^N = g``, or None."""
    if gen.group != g.group:
        raise GroupMismatch(f"{gen.group} vs {g.group}")
    if g.is_identity:
        return 0
    if gen.is_identity:
        return None
    kind = gen.group.kind
    cands: list[int] = []
    if kind == "free":
        u, v = cyclic_decomposition(gen.data)
        rest = len(g.data) - 2 * len(u)
        if rest > 0 and rest % len(v) == 0:
            cands = [rest // len(v), -(rest // len(v))]
    elif kind == "klein":
        m0, n0 = gen.data
        m, n = g.data
        if n0 and n % n0 == 0:
            cands = [n // n0]
        elif not n0 and not n and m % m0 == 0:
            cands = [m // m0]
    else:
        a, b = _psi(gen), _psi(g)
        i = next(i for i, x in enumerate(a) if x)
        if b[i] % a[i] == 0:
            cands = [b[i] // a[i]]
    for N in cands:
        if power(gen, N) == g:
            return N
    return None


def lattice_log(g1: GroupElement, g2: GroupElement, g: GroupElement) -> tuple[int, int] | None:
    """``(i, j)`` with ``g1^i g2^j = g`` for commuting independent ``g1, g2``."""
    vs = [_psi(g1), _psi(g2), _psi(g)]
    if any(v is None for v in vs):
        return None
    A = intlinalg.transpose([vs[0], vs[1]])
    x = intlinalg.solve(A, vs[2], ncols=2)
    if x is None:
        return None
    i, j = x
    if power(g1, i) * power(g2, j) != g:
        return None
    return i, j


# ---------------------------------------------------------------------------
# descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubgroupDescriptor:
    """Closed-form description of a centralizer-type subgroup."""

    kind: str
    group: GroupId
    gens: tuple[GroupElement, ...] = ()

    def contains(self, g: GroupElement) -> bool:
        if g.group != self.group:
            raise GroupMismatch(f"{g.group} vs {self.group}")
        if self.kind == WHOLE:
            return True
        if self.kind == TRIVIAL:
            return g.is_identity
        if self.kind == CYCLIC:
            return cyclic_log(self.gens[0], g) is not None
        return lattice_log(self.gens[0], self.gens[1], g) is not None

    __contains__ = contains

    def generating_set(self) -> list[GroupElement]:
        if self.kind == WHOLE:
            return generators(self.group)
        return list(self.gens)

    @property
    def rank(self) -> int | None:
        """Rank of a cyclic/lattice descriptor; None for the whole group."""
        return {TRIVIAL: 0, CYCLIC: 1, LATTICE2: 2}.get(self.kind)

    def __str__(self) -> str:
        if self.kind in (WHOLE, TRIVIAL):
            return self.kind.capitalize()
        inner = ", ".join(str(g) for g in self.gens)
        return f"{'Cyclic' if self.kind == CYCLIC else 'Lattice2'}({inner})"

    def to_json(self) -> dict:
        return {"kind": self.kind, "gens": [list(g.data) for g in self.gens], "text": str(self)}


def Whole(group: GroupId) -> SubgroupDescriptor:
    return SubgroupDescriptor(WHOLE, group)


def Trivial(group: GroupId) -> SubgroupDescriptor:
    return SubgroupDescriptor(TRIVIAL, group)


def Cyclic(gen: GroupElement) -> SubgroupDescriptor:
    if gen.is_identity:
        raise NotASubgroup("cyclic generator must be nontrivial")
    return SubgroupDescriptor(CYCLIC, gen.group, (_orient(gen),))


def Lattice2(g1: GroupElement, g2: GroupElement) -> SubgroupDescriptor:
    if g1.group != g2.group:
        raise GroupMismatch(f"{g1.group} vs {g2.group}")
    if not commutes(g1, g2):
        raise NotASubgroup("lattice generators must commute")
    a, b = _psi(g1), _psi(g2)
    if a is None or b is None or intlinalg.rank([a, b]) < 2:
        raise NotASubgroup("lattice generators must be independent")
    return SubgroupDescriptor(LATTICE2, g1.group, (g1, g2))


def _from_basis(group: GroupId, basis: list[list[int]]) -> SubgroupDescriptor:
    if not basis:
        return Trivial(group)
    gens = [_psi_inv(group, v) for v in basis]
    if len(gens) == 1:
        return Cyclic(gens[0])
    if len(gens) == 2:
        return Lattice2(*gens)
    raise UnknownDescriptorCase("intersection of rank > 2")


def contains_subgroup(A: SubgroupDescriptor, B: SubgroupDescriptor) -> bool:
    """True iff ``B ⊆ A`` (checked on generators of ``B``)."""
    if A.group != B.group:
        raise GroupMismatch(f"{A.group} vs {B.group}")
    return all(A.contains(g) for g in B.generating_set())


def same_subgroup(A: SubgroupDescriptor, B: SubgroupDescriptor) -> bool:
    return contains_subgroup(A, B) and contains_subgroup(B, A)


def _klein_in_E(D: SubgroupDescriptor) -> bool:
    return all(g.data[1] % 2 == 0 for g in D.gens)


def intersect(A: SubgroupDescriptor, B: SubgroupDescriptor) -> SubgroupDescriptor:
    """Exact intersection of two descriptors."""
    if A.group != B.group:
        raise GroupMismatch(f"{A.group} vs {B.group}")
    group = A.group
    if A.kind == WHOLE:
        return B
    if B.kind == WHOLE:
        return A
    if TRIVIAL in (A.kind, B.kind):
        return Trivial(group)
    kind = group.kind
    if kind == "free":
        if A.kind != CYCLIC or B.kind != CYCLIC:
            raise UnknownDescriptorCase("free groups have no rank-2 lattices")
        ra, ea = primitive_root(A.gens[0])
        rb, eb = primitive_root(B.gens[0])
        if rb == ra.inverse():
            rb = ra
        if ra != rb:
            return Trivial(group)
        return Cyclic(power(ra, math.lcm(ea, eb)))
    if kind == "klein":
        odd_a, odd_b = not _klein_in_E(A), not _klein_in_E(B)
        if odd_a and odd_b:
            (m1, n1), (m2, n2) = A.gens[0].data, B.gens[0].data
            L = math.lcm(abs(n1), abs(n2))
            if m1 == m2:
                return Cyclic(GroupElement._raw(group, (m1, L)))
            return Cyclic(GroupElement._raw(group, (0, 2 * L)))
        if odd_a:
            # <g> meets the index-2 lattice <a, b^2> in <g^2>
            return intersect(Cyclic(power(A.gens[0], 2)), B)
        if odd_b:
            return intersect(A, Cyclic(power(B.gens[0], 2)))
    if kind in ("z", "heisenberg", "klein"):
        dim = _psi_dim(group)
        basis = intlinalg.lattice_intersection(
            [_psi(g) for g in A.gens], [_psi(g) for g in B.gens], dim
        )
        return _canonical(_from_basis(group, basis))
    raise UnknownDescriptorCase(f"{A.kind} ∩ {B.kind} in {group}")


def _canonical(D: SubgroupDescriptor) -> SubgroupDescriptor:
    """Prefer the standard generators for the common shapes."""
    group = D.group
    if group.kind == "klein" and D.kind == LATTICE2:
        E = Lattice2(GroupElement._raw(group, (1, 0)), GroupElement._raw(group, (0, 2)))
        if same_subgroup(D, E):
            return E
    if group.kind == "heisenberg" and D.kind == LATTICE2:
        c = GroupElement._raw(group, (0, 0, 1))
        if D.contains(c):
            p, q = _direction(D)
            cand = Lattice2(GroupElement._raw(group, (p, q, 0)), c)
            if same_subgroup(cand, D):
                return cand
    if group.kind == "z" and D.kind == LATTICE2 and group.rank == 2:
        if intlinalg.lattice_index([_psi(g) for g in D.gens], intlinalg.identity(2)) == 1:
            return Whole(group)
    if group.is_abelian and group.rank == 1 and D.kind == CYCLIC:
        if cyclic_log(D.gens[0], generators(group)[0]) is not None:
            return Whole(group)
    return D


def _direction(D: SubgroupDescriptor) -> tuple[int, int]:
    """Primitive ``(p, q)`` direction shared by a Heisenberg lattice."""
    p, q = next((g.data[0], g.data[1]) for g in D.gens if (g.data[0], g.data[1]) != (0, 0))
    k = math.gcd(p, q)
    p, q = p // k, q // k
    return (-p, -q) if (p, q) < (0, 0) else (p, q)


# ---------------------------------------------------------------------------
# centralizers
# ---------------------------------------------------------------------------


def _single_centralizer(g: GroupElement) -> SubgroupDescriptor:
    group = g.group
    if group.is_abelian or g.is_identity:
        return Whole(group)
    kind = group.kind
    if kind == "free":
        return Cyclic(primitive_root(g)[0])
    if kind == "klein":
        m, n = g.data
        if n % 2 == 0:
            if m == 0:
                return Whole(group)
            return Lattice2(GroupElement._raw(group, (1, 0)), GroupElement._raw(group, (0, 2)))
        return Cyclic(GroupElement._raw(group, (m, 1)))
    p, q, _ = g.data
    if p == 0 and q == 0:
        return Whole(group)
    k = math.gcd(p, q)
    p0, q0 = p // k, q // k
    if (p0, q0) < (0, 0):
        p0, q0 = -p0, -q0
    return Lattice2(GroupElement._raw(group, (p0, q0, 0)), GroupElement._raw(group, (0, 0, 1)))


def _check_members(group: GroupId, S: Iterable[GroupElement]) -> list[GroupElement]:
    S = list(S)
    for s in S:
        if not isinstance(s, GroupElement) or s.group != group:
            raise ElementNotInGroup(f"{s!r} is not an element of {group}")
    return S


def centralizer(group: GroupId, S: Iterable[GroupElement]) -> SubgroupDescriptor:
    """``Z(S)``; the empty set gives the whole group."""
    S = _check_members(group, S)
    if group.is_abelian:
        return Whole(group)
    if group.kind == "free":
        nontrivial = [s for s in S if not s.is_identity]
        if not nontrivial:
            return Whole(group)
        r, _ = primitive_root(nontrivial[0])
        for s in nontrivial[1:]:
            rs, _ = primitive_root(s)
            if rs != r and rs != r.inverse():
                return Trivial(group)
        return Cyclic(r)
    return reduce(intersect, (_single_centralizer(s) for s in S), Whole(group))


def double_centralizer(group: GroupId, S: Iterable[GroupElement]) -> SubgroupDescriptor:
    """``Z(Z(S))`` computed from a generating set of ``Z(S)``."""
    return centralizer(group, centralizer(group, S).generating_set())


def center(group: GroupId) -> SubgroupDescriptor:
    return centralizer(group, generators(group))


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------


def _kind_code(group: GroupId) -> int:
    if group.is_abelian:
        return 0
    return {"klein": 1, "heisenberg": 2}[group.kind]


def pack_words(elements: Sequence[GroupElement]) -> tuple[np.ndarray, np.ndarray]:
    L = max((len(e.data) for e in elements), default=0)
    W = np.zeros((len(elements), max(L, 1)), dtype=np.int64)
    lens = np.zeros(len(elements), dtype=np.int64)
    for i, e in enumerate(elements):
        W[i, : len(e.data)] = e.data
        lens[i] = len(e.data)
    return W, lens


def commute_matrix(X: Sequence[GroupElement], Y: Sequence[GroupElement], use_jit: bool | None = None) -> np.ndarray:
    """Boolean table ``[x_i y_j == y_j x_i]`` via the batch kernels."""
    if not X or not Y:
        return np.ones((len(X), len(Y)), dtype=np.bool_)
    group = X[0].group
    if group.kind == "free" and group.rank > 1:
        XW, XL = pack_words(X)
        YW, YL = pack_words(Y)
        return _kernels.free_commute_table(XW, XL, YW, YL, use_jit=use_jit)
    code = _kind_code(group)
    if code == 0:
        return np.ones((len(X), len(Y)), dtype=np.bool_)
    Xa = np.array([e.data for e in X], dtype=np.int64)
    Ya = np.array([e.data for e in Y], dtype=np.int64)
    return _kernels.commute_table(code, Xa, Ya, use_jit=use_jit)


def centralizer_bruteforce(group: GroupId, S: Iterable[GroupElement], radius: int) -> tuple[GroupElement, ...]:
    """``{g in ball(radius) : g s = s g for all s in S}``, in ball order."""
    S = _check_members(group, S)
    B = ball(group, radius)
    if not S:
        return B
    table = commute_matrix(B, S)
    keep = table.all(axis=1)
    return tuple(g for g, k in zip(B, keep) if k)


# ---------------------------------------------------------------------------
# index
# ---------------------------------------------------------------------------


def _whole_index(B: SubgroupDescriptor) -> float | int:
    group = B.group
    kind = group.kind
    if B.kind == TRIVIAL:
        return INFINITE
    if group.is_abelian:
        k = group.rank
        if B.rank != k:
            return INFINITE
        if kind == "free":
            return abs(len(B.gens[0].data))
        return abs(intlinalg.determinant([_psi(g) for g in B.gens]))
    if kind == "klein" and B.kind == LATTICE2:
        return 2 * abs(intlinalg.determinant([_psi(g) for g in B.gens]))
    return INFINITE


def subgroup_index(A: SubgroupDescriptor, B: SubgroupDescriptor) -> float | int:
    """``[A : B]`` as a positive int or :data:`INFINITE`.

    Raises :class:`NotASubgroup` unless ``B ⊆ A``.
    """
    if not contains_subgroup(A, B):
        raise NotASubgroup(f"{B} is not contained in {A}")
    if contains_subgroup(B, A):
        return 1
    if B.kind == TRIVIAL:
        return INFINITE
    if A.kind == WHOLE:
        return _whole_index(B)
    if A.kind == CYCLIC and B.kind == CYCLIC:
        return abs(cyclic_log(A.gens[0], B.gens[0]))
    if A.kind == LATTICE2 and B.kind == CYCLIC:
        return INFINITE
    if A.kind == LATTICE2 and B.kind == LATTICE2:
        coords = [list(lattice_log(A.gens[0], A.gens[1], g)) for g in B.gens]
        return abs(intlinalg.determinant(coords))
    raise UnknownDescriptorCase(f"[{A.kind} : {B.kind}] in {A.group}")


def coset_witness(A: SubgroupDescriptor, B: SubgroupDescriptor) -> GroupElement | None:
    """A generator of ``A`` outside ``B`` (a nontrivial coset), or None."""
    for g in A.generating_set():
        if not B.contains(g):
            return g
    return None


@dataclass(frozen=True)
class CosetDescriptor:
    """Right coset ``subgroup · translator``."""

    subgroup: SubgroupDescriptor
    translator: GroupElement

    def contains(self, g: GroupElement) -> bool:
        return self.subgroup.contains(g * self.translator.inverse())

    __contains__ = contains

    def __str__(self) -> str:
        if self.translator.is_identity:
            return str(self.subgroup)
        return f"{self.subgroup}·({self.translator})"


__all__ = [
    "CosetDescriptor",
    "Cyclic",
    "INFINITE",
    "Lattice2",
    "SubgroupDescriptor",
    "Trivial",
    "Whole",
    "center",
    "centralizer",
    "centralizer_bruteforce",
    "commute_matrix",
    "contains_subgroup",
    "coset_witness",
    "cyclic_log",
    "double_centralizer",
    "intersect",
    "lattice_log",
    "primitive_root",
    "same_subgroup",
    "subgroup_index",
]
