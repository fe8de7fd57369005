"""Torus cohomology, zero divisors and TC bound reports.

``H^*(T^k x T^k; Z)`` is the exterior algebra on ``u_1..u_k, v_1..v_k``;
generator ``u_i`` has index ``i - 1`` and ``v_i`` has index ``k + i - 1``.
A class is a dict from sorted index tuples to integer coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

from . import intlinalg
from .bredon import cd_d_report
from .centralizers import Cyclic, Lattice2, SubgroupDescriptor
from .errors import DegreeMismatch, RankMismatch, RankTooLarge
from .groups import GroupElement, GroupId, element

MAX_ZCL_RANK = 8


def _sort_sign(seq: Sequence[int]) -> int:
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inv % 2 else 1


@dataclass(frozen=True)
class ExteriorClass:
    """Integer element of the exterior algebra on ``ngens`` degree-one generators."""

    ngens: int
    coeffs: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mono, c in self.coeffs.items():
            mono = tuple(mono)
            if c and len(set(mono)) == len(mono):
                key = tuple(sorted(mono))
                clean[key] = clean.get(key, 0) + c * _sort_sign(mono)
        object.__setattr__(self, "coeffs", {m: c for m, c in sorted(clean.items()) if c})

    @property
    def k(self) -> int:
        return self.ngens // 2

    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees(self) -> set[int]:
        return {len(m) for m in self.coeffs}

    def __add__(self, other: "ExteriorClass") -> "ExteriorClass":
        _same_rank(self, other)
        d = dict(self.coeffs)
        for m, c in other.coeffs.items():
            d[m] = d.get(m, 0) + c
        return ExteriorClass(self.ngens, d)

    def __neg__(self) -> "ExteriorClass":
        return ExteriorClass(self.ngens, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other: "ExteriorClass") -> "ExteriorClass":
        return self + (-other)

    def __rmul__(self, n: int) -> "ExteriorClass":
        return ExteriorClass(self.ngens, {m: n * c for m, c in self.coeffs.items()})

    def __xor__(self, other: "ExteriorClass") -> "ExteriorClass":
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, ExteriorClass) and self.ngens == other.ngens and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ngens, tuple(self.coeffs.items())))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for m, c in self.coeffs.items():
            mono = "".join(_gen_name(self.ngens, g) for g in m) or "1"
            parts.append(f"{c}*{mono}" if c not in (1, -1) else ("-" if c < 0 else "") + mono)
        return " + ".join(parts).replace("+ -", "- ")


def _gen_name(ngens: int, g: int) -> str:
    k = ngens // 2
    return f"u{g + 1}" if g < k else f"v{g - k + 1}"


def _same_rank(x: ExteriorClass, y: ExteriorClass) -> None:
    if x.ngens != y.ngens:
        raise RankMismatch(f"{x.ngens} vs {y.ngens} generators")


def one(ngens: int) -> ExteriorClass:
    return ExteriorClass(ngens, {(): 1})


def u(k: int, i: int) -> ExteriorClass:
    """``u_i`` for ``1 <= i <= k``."""
    return ExteriorClass(2 * k, {(i - 1,): 1})


def v(k: int, i: int) -> ExteriorClass:
    return ExteriorClass(2 * k, {(k + i - 1,): 1})


def zero_divisor(k: int, i: int) -> ExteriorClass:
    """``u_i - v_i``."""
    return u(k, i) - v(k, i)


def wedge(x: ExteriorClass, y: ExteriorClass) -> ExteriorClass:
    """Cup product; a repeated generator kills a monomial."""
    _same_rank(x, y)
    d: dict[tuple[int, ...], int] = {}
    for m1, c1 in x.coeffs.items():
        s1 = set(m1)
        for m2, c2 in y.coeffs.items():
            if s1.intersection(m2):
                continue
            cat = m1 + m2
            key = tuple(sorted(cat))
            d[key] = d.get(key, 0) + _sort_sign(cat) * c1 * c2
    return ExteriorClass(x.ngens, d)


def wedge_all(classes: Sequence[ExteriorClass], ngens: int) -> ExteriorClass:
    out = one(ngens)
    for c in classes:
        out = wedge(out, c)
    return out


def restrict_to_diagonal(x: ExteriorClass) -> ExteriorClass:
    """Pull back along the diagonal: ``u_i, v_i -> ε_i``."""
    k = x.k
    d: dict[tuple[int, ...], int] = {}
    for m, c in x.coeffs.items():
        img = [g % k for g in m]
        if len(set(img)) < len(img):
            continue
        key = tuple(sorted(img))
        d[key] = d.get(key, 0) + _sort_sign(img) * c
    return ExteriorClass(k, d)


def zero_divisor_product(k: int, J: Sequence[int]) -> ExteriorClass:
    """``∏_{i in J} (u_i - v_i)`` in the order given, ``J`` one-based."""
    return wedge_all([zero_divisor(k, i) for i in J], 2 * k)


def zero_divisor_cup_length(k: int) -> int:
    """Longest nonzero product of the classes ``u_i - v_i``.

    Squares vanish and distinct factors anticommute, both checked here, so a
    product with a repeated factor is zero and only distinct index sets count.
    """
    if not 1 <= k <= MAX_ZCL_RANK:
        raise RankTooLarge(f"k must be in 1..{MAX_ZCL_RANK}")
    z = [zero_divisor(k, i) for i in range(1, k + 1)]
    for i in range(k):
        if not wedge(z[i], z[i]).is_zero():
            raise ArithmeticError(f"(u{i + 1} - v{i + 1})^2 != 0")
        for j in range(i + 1, k):
            if wedge(z[i], z[j]) != -wedge(z[j], z[i]):
                raise ArithmeticError("zero divisors do not anticommute")
    best = 0
    for m in range(1, k + 1):
        if not zero_divisor_product(k, range(1, m + 1)).is_zero():
            best = m
    return best


def _essential_generators(k: int, n: int) -> list[ExteriorClass]:
    return [zero_divisor_product(k, [i + 1 for i in J]) for J in combinations(range(k), n)]


def is_essential(x: ExteriorClass, n: int) -> bool:
    """Membership in the integer span of the degree-``n`` products of distinct zero divisors."""
    if x.degrees() - {n}:
        raise DegreeMismatch(f"class has degrees {sorted(x.degrees())}, expected {n}")
    k = x.k
    gens = _essential_generators(k, n)
    if not gens:
        return x.is_zero()
    monos = sorted({m for g in gens for m in g.coeffs} | set(x.coeffs))
    cols = [[g.coeffs.get(m, 0) for m in monos] for g in gens]
    A = intlinalg.transpose(cols)
    b = [x.coeffs.get(m, 0) for m in monos]
    return intlinalg.solve(A, b, ncols=len(gens)) is not None


# ---------------------------------------------------------------------------
# A x B lower bound
# ---------------------------------------------------------------------------


def _abelian_image(g: GroupElement) -> list[int]:
    """A homomorphism to a free abelian group, per catalog group."""
    kind = g.group.kind
    if kind == "z":
        return list(g.data)
    if kind == "free":
        out = [0] * g.group.rank
        for letter in g.data:
            out[abs(letter) - 1] += 1 if letter > 0 else -1
        return out
    if kind == "klein":
        return [g.data[1]]
    return [g.data[0], g.data[1]]


@dataclass(frozen=True)
class AxBCertificate:
    """Abelian subgroups ``A, B`` with ``gAg^-1 ∩ B = 1`` for every ``g``.

    The check uses a homomorphism ``f`` to a free abelian group: ``f`` kills
    conjugation, so ``f(gAg^-1 ∩ B) ⊆ f(A) ∩ f(B)``. When that intersection is
    zero and ``f`` is injective on ``A`` or on ``B``, the intersection is trivial.
    """

    A: SubgroupDescriptor
    B: SubgroupDescriptor
    rank_A: int
    rank_B: int
    valid: bool

    @property
    def cd(self) -> int:
        return self.rank_A + self.rank_B

    def to_json(self) -> dict:
        return {"A": str(self.A), "B": str(self.B), "cd": self.cd, "valid": self.valid}


def _free_abelian_rank(images: list[list[int]]) -> int:
    return intlinalg.rank(images) if images else 0


def axb_certificate(A: SubgroupDescriptor, B: SubgroupDescriptor) -> AxBCertificate:
    ga, gb = list(A.gens), list(B.gens)
    fa = [_abelian_image(g) for g in ga]
    fb = [_abelian_image(g) for g in gb]
    dim = len(fa[0])
    meet = intlinalg.lattice_intersection(
        intlinalg.lattice_basis(fa, dim), intlinalg.lattice_basis(fb, dim), dim
    )
    inj_a = _free_abelian_rank(fa) == len(ga)
    inj_b = _free_abelian_rank(fb) == len(gb)
    valid = not meet and (inj_a or inj_b)
    return AxBCertificate(A, B, len(ga), len(gb), valid)


def _axb_for(group: GroupId) -> AxBCertificate | None:
    e = lambda *d: element(group, *d)  # noqa: E731
    if group.kind == "free" and group.rank >= 2:
        return axb_certificate(Cyclic(e(1)), Cyclic(e(2)))
    if group.kind == "klein":
        return axb_certificate(Cyclic(e(1, 0)), Cyclic(e(0, 1)))
    if group.kind == "heisenberg":
        return axb_certificate(Cyclic(e(1, 0, 0)), Lattice2(e(0, 1, 0), e(0, 0, 1)))
    return None


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------


CITE_UPPER = "upper bound: TC(pi) <= max{3, cd_D(pi x pi)}"
CITE_CLASSICAL = "classical upper bound: TC(pi) <= cd(pi x pi)"
CITE_LOWER = "lower bound: TC(pi) >= n when the n-th power of the Bredon canonical class is nonzero"
CITE_AXB = "lower bound: TC(pi) >= cd(A x B) when gAg^-1 meets B trivially for all g"
CITE_CDD = "cd_D(Z^k x Z^k) = k"
CITE_Z1 = "Z is the only group with TC(pi) = 1"
CITE_MAX = "known: TC of the Klein bottle group equals cd(pi x pi) (cited, not derived)"


@dataclass(frozen=True)
class TcBoundReport:
    group: GroupId
    lower: int
    lower_tag: str
    upper: int
    upper_tag: str
    classical_upper: int
    exact: int | None = None
    notes: tuple[str, ...] = ()
    citations: tuple[str, ...] = ()
    certificates: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.lower > self.upper:
            raise ArithmeticError("lower bound exceeds upper bound")
        if (self.exact is not None) != (self.lower == self.upper):
            raise ArithmeticError("exact value set inconsistently")

    def to_json(self) -> dict:
        return {
            "lower": self.lower,
            "lower_tag": self.lower_tag,
            "upper": self.upper,
            "upper_tag": self.upper_tag,
            "classical_upper": self.classical_upper,
            "exact": self.exact,
            "notes": list(self.notes),
        }


def tc_bounds(group: GroupId) -> TcBoundReport:
    cd2 = 2 * group.cd
    if group.is_abelian:
        k = group.rank
        zcl = zero_divisor_cup_length(k)
        phi_ok = is_essential(zero_divisor_product(k, range(1, k + 1)), k)
        cdd = cd_d_report(k).cd_d
        upper = max(3, cdd)
        lower = zcl
        notes = []
        if k == 1:
            notes.append("true value TC = 1 is not recovered by these bounds")
        if k <= 2:
            notes.append(f"the classical bound cd(pi x pi) = {cd2} is smaller than max{{3, cd_D}}")
        return TcBoundReport(
            group, lower, "zcl/phi-image", upper, "max{3, cd_D}", cd2,
            lower if lower == upper else None, tuple(notes),
            (CITE_LOWER, CITE_UPPER, CITE_CDD) + ((CITE_Z1,) if k == 1 else ()),
            {"zcl": zcl, "phi_image_essential": phi_ok, "cd_D": cdd},
        )
    cert = _axb_for(group)
    lower = max(group.cd, cert.cd if cert.valid else 0)
    notes = []
    cites = [CITE_AXB, CITE_CLASSICAL]
    if group.kind == "free":
        notes.append("cd_D(F_k x F_k) is not used; the classical bound is applied")
    else:
        notes.append("interval only; no exact value is claimed")
    if group.kind == "klein":
        cites.append(CITE_MAX)
    return TcBoundReport(
        group, lower, "AxB", cd2, "cd(pi x pi)", cd2,
        lower if lower == cd2 else None, tuple(notes), tuple(cites),
        {"AxB": cert.to_json()},
    )


def all_monomials(ngens: int, degree: int) -> list[tuple[int, ...]]:
    return list(combinations(range(ngens), degree))


def random_class(ngens: int, degree: int, coeffs: Sequence[int]) -> ExteriorClass:
    monos = all_monomials(ngens, degree)
    return ExteriorClass(ngens, {m: c for m, c in zip(monos, coeffs)})

