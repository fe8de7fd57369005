"""The subgroup family of ``G = π × π`` generated by the diagonal.

Nontrivial members are ``H_{b,S} = {(a, b a b^-1) : a ∈ Z(S)}``; the trivial
subgroup is a separate, explicit member. Construction does not canonicalize
``(b, S)``; use :func:`equal` for semantic equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .centralizers import (
    INFINITE,
    CosetDescriptor,
    SubgroupDescriptor,
    TRIVIAL,
    Whole,
    centralizer,
    coset_witness,
    double_centralizer,
    same_subgroup,
    subgroup_index,
)
from .errors import ElementNotInGroup, EmptyTuple, GroupMismatch
from .groups import GroupElement, GroupId, identity


@dataclass(frozen=True)
class PairElement:
    """An element ``(g, h)`` of ``π × π``."""

    g: GroupElement
    h: GroupElement

    def __post_init__(self):
        if self.g.group != self.h.group:
            raise GroupMismatch(f"{self.g.group} vs {self.h.group}")

    @property
    def group(self) -> GroupId:
        return self.g.group

    def __mul__(self, other: "PairElement") -> "PairElement":
        return PairElement(self.g * other.g, self.h * other.h)

    def inverse(self) -> "PairElement":
        return PairElement(self.g.inverse(), self.h.inverse())

    def __str__(self) -> str:
        return f"({self.g}, {self.h})"


def _dedup(S: Iterable[GroupElement]) -> tuple[GroupElement, ...]:
    out: list[GroupElement] = []
    for s in S:
        if s not in out:
            out.append(s)
    return tuple(out)


@dataclass(frozen=True)
class DSubgroup:
    """``H_{b,S}``, or the trivial subgroup when ``trivial`` is set."""

    group: GroupId
    b: GroupElement | None = None
    S: tuple[GroupElement, ...] = ()
    zs: SubgroupDescriptor | None = field(default=None, compare=False)
    trivial: bool = False

    def __str__(self) -> str:
        if self.trivial:
            return "1"
        S = "{" + ", ".join(str(s) for s in self.S) + "}"
        return f"H[b={self.b}, S={S}]"

    def contains(self, p: PairElement) -> bool:
        return member(self, p)

    __contains__ = contains


def make_H(b: GroupElement, S: Iterable[GroupElement] = ()) -> DSubgroup:
    """``H_{b,S}`` with its centralizer cached."""
    S = _dedup(S)
    for s in S:
        if s.group != b.group:
            raise ElementNotInGroup(f"{s!r} is not in {b.group}")
    return DSubgroup(b.group, b, S, centralizer(b.group, S))


def trivial_subgroup(group: GroupId) -> DSubgroup:
    return DSubgroup(group, trivial=True)


def diagonal(group: GroupId) -> DSubgroup:
    return make_H(identity(group), ())


def _same_group(H1: DSubgroup, H2: DSubgroup) -> None:
    if H1.group != H2.group:
        raise GroupMismatch(f"{H1.group} vs {H2.group}")


def member(H: DSubgroup, p: PairElement) -> bool:
    if p.group != H.group:
        raise GroupMismatch(f"{p.group} vs {H.group}")
    if H.trivial:
        return p.g.is_identity and p.h.is_identity
    return p.h == H.b * p.g * H.b.inverse() and H.zs.contains(p.g)


def intersect(H1: DSubgroup, H2: DSubgroup) -> DSubgroup:
    """``H_{b1,S1} ∩ H_{b2,S2} = H_{b1, S1 ∪ S2 ∪ {b2^-1 b1}}``."""
    _same_group(H1, H2)
    if H1.trivial or H2.trivial:
        return trivial_subgroup(H1.group)
    H = make_H(H1.b, H1.S + H2.S + (H2.b.inverse() * H1.b,))
    if H.zs.kind == TRIVIAL:
        return trivial_subgroup(H1.group)
    return H


def equal(H1: DSubgroup, H2: DSubgroup) -> bool:
    """Semantic equality: same centralizer and ``b2^-1 b1 ∈ Z(Z(S1))``."""
    _same_group(H1, H2)
    t1 = H1.trivial or H1.zs.kind == TRIVIAL
    t2 = H2.trivial or H2.zs.kind == TRIVIAL
    if t1 or t2:
        return t1 and t2
    if not same_subgroup(H1.zs, H2.zs):
        return False
    return double_centralizer(H1.group, H1.S).contains(H2.b.inverse() * H1.b)


def fixed_points(H: DSubgroup) -> CosetDescriptor:
    """``π^H = Z(Z(S)) · b^-1``; the trivial subgroup fixes all of ``π``."""
    if H.trivial:
        return CosetDescriptor(Whole(H.group), identity(H.group))
    return CosetDescriptor(double_centralizer(H.group, H.S), H.b.inverse())


def fixed_by(H_elements: Iterable[PairElement], g: GroupElement) -> bool:
    """Direct check that every ``(x, y)`` fixes ``g`` under ``g -> x g y^-1``."""
    return all(p.g * g * p.h.inverse() == g for p in H_elements)


def isotropy_of_tuple(t: Sequence[GroupElement]) -> DSubgroup:
    """Stabilizer of ``(g1..gs)`` under ``(x, y)·g = x g y^-1``.

    It is ``H_{g1^-1, S}`` with ``S = {g1 g_j^-1 : j >= 2}``.
    """
    t = list(t)
    if not t:
        raise EmptyTuple("isotropy of an empty tuple")
    g1 = t[0]
    return make_H(g1.inverse(), [g1 * g.inverse() for g in t[1:]])


def conjugate(H: DSubgroup, p: PairElement) -> DSubgroup:
    """``p H p^-1 = H_{q b x^-1, x S x^-1}`` for ``p = (x, q)``."""
    if H.trivial:
        return H
    x, q = p.g, p.h
    return make_H(q * H.b * x.inverse(), [x * s * x.inverse() for s in H.S])


@dataclass(frozen=True)
class RelativeIndex:
    index: float | int
    witness: GroupElement | None = None

    @property
    def is_finite_nontrivial(self) -> bool:
        return self.index != 1 and self.index != INFINITE


def relative_index(H1: DSubgroup, H2: DSubgroup) -> RelativeIndex:
    """``[H1 : H1 ∩ H2]``, read off the first coordinates.

    A finite nontrivial index comes with a first coordinate ``a`` of an
    element of ``H1`` outside ``H2``.
    """
    _same_group(H1, H2)
    if H1.trivial or H1.zs.kind == TRIVIAL:
        return RelativeIndex(1)
    inter = intersect(H1, H2)
    if inter.trivial:
        return RelativeIndex(INFINITE)
    idx = subgroup_index(H1.zs, inter.zs)
    witness = coset_witness(H1.zs, inter.zs) if idx != 1 else None
    return RelativeIndex(idx, witness)


def pairs(elements: Sequence[GroupElement]) -> list[PairElement]:
    return [PairElement(g, h) for g in elements for h in elements]
