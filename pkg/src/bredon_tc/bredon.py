"""Bredon cohomology of ``G = Z^k x Z^k`` for the family ``{1, Δ}``.

For ``π = Z^k`` the family has two members, so the orbit category has two
objects ``G/1`` and ``G/Δ``; the endomorphisms of ``G/Δ`` form ``W = G/Δ ≅ Z^k``
via ``(a, b) -> a - b``. The space ``R^k`` with ``(a, b)·x = a - b + x`` is a
model whose cubical cells all have isotropy ``Δ``, which gives a Koszul-shaped
free resolution over ``Z[W]``.

Laurent polynomials in ``Z[W]`` are dicts from exponent tuples to ints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Mapping, Sequence

from . import intlinalg
from .errors import DegreeTooLarge, IncompatibleRank, RankTooLarge
from .groups import GroupId, ball
from .intlinalg import AbelianGroup, Matrix

MAX_RESOLUTION_RANK = 6
MAX_PHI_RANK = 4

# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Laurent:
    """Finite integer combination of monomials ``t^e`` with ``e ∈ Z^n``."""

    nvars: int
    terms: tuple[tuple[tuple[int, ...], int], ...] = ()

    @staticmethod
    def from_dict(nvars: int, d: Mapping[tuple[int, ...], int]) -> "Laurent":
        return Laurent(nvars, tuple(sorted((e, c) for e, c in d.items() if c)))

    @staticmethod
    def zero(nvars: int) -> "Laurent":
        return Laurent(nvars)

    @staticmethod
    def monomial(nvars: int, exps: Sequence[int], coeff: int = 1) -> "Laurent":
        return Laurent.from_dict(nvars, {tuple(exps): coeff})

    @staticmethod
    def const(nvars: int, c: int) -> "Laurent":
        return Laurent.monomial(nvars, (0,) * nvars, c)

    @staticmethod
    def var(nvars: int, i: int, power: int = 1) -> "Laurent":
        e = [0] * nvars
        e[i] = power
        return Laurent.monomial(nvars, e)

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Laurent") -> "Laurent":
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = d.get(e, 0) + c
        return Laurent.from_dict(self.nvars, d)

    def __neg__(self) -> "Laurent":
        return Laurent(self.nvars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other) -> "Laurent":
        if isinstance(other, int):
            return Laurent.from_dict(self.nvars, {e: c * other for e, c in self.terms})
        d: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = d.get(e, 0) + c1 * c2
        return Laurent.from_dict(self.nvars, d)

    __rmul__ = __mul__

    def at_one(self) -> int:
        return sum(c for _, c in self.terms)

    def substitute(self, images: Sequence[Sequence[int]], nvars: int) -> "Laurent":
        """Ring map sending ``t_i`` to the monomial ``s^{images[i]}``."""
        d: dict[tuple[int, ...], int] = {}
        for e, c in self.terms:
            out = [0] * nvars
            for i, ei in enumerate(e):
                if ei:
                    for j, x in enumerate(images[i]):
                        out[j] += ei * x
            key = tuple(out)
            d[key] = d.get(key, 0) + c
        return Laurent.from_dict(nvars, d)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            mono = "*".join(f"t{i + 1}^{x}" if x != 1 else f"t{i + 1}" for i, x in enumerate(e) if x)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


LMatrix = list[list[Laurent]]


def lmatmul(A: LMatrix, B: LMatrix, nvars: int) -> LMatrix:
    if not A or not B:
        return [[Laurent.zero(nvars) for _ in range(len(B[0]) if B else 0)] for _ in A]
    out = []
    for row in A:
        new = []
        for j in range(len(B[0])):
            acc = Laurent.zero(nvars)
            for t, a in enumerate(row):
                if a.terms and B[t][j].terms:
                    acc = acc + a * B[t][j]
            new.append(acc)
        out.append(new)
    return out


def lmatrix_is_zero(A: LMatrix) -> bool:
    return all(x.is_zero() for row in A for x in row)


# ---------------------------------------------------------------------------
# orbit category and modules
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitCategoryZk:
    """Objects ``G/1`` and ``G/Δ``; ``End(G/Δ) = W ≅ Z^k``."""

    k: int

    objects = ("G/1", "G/D")

    def weyl_compose(self, w1: Sequence[int], w2: Sequence[int]) -> tuple[int, ...]:
        return tuple(a + b for a, b in zip(w1, w2))

    def weyl_image(self, g: Sequence[int], h: Sequence[int]) -> tuple[int, ...]:
        """Image of ``(g, h) ∈ G`` in ``W``."""
        return tuple(a - b for a, b in zip(g, h))

    def has_morphism(self, source: str, target: str) -> bool:
        return not (source == "G/D" and target == "G/1")


def _mat_inverse(T: Matrix) -> Matrix:
    n = len(T)
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        x = intlinalg.solve(T, e, ncols=n)
        if x is None:
            raise ValueError("action matrix is not invertible over Z")
        cols.append(x)
    return intlinalg.transpose(cols)


def _mat_power(T: Matrix, Tinv: Matrix, e: int) -> Matrix:
    n = len(T)
    out = intlinalg.identity(n)
    base = T if e >= 0 else Tinv
    for _ in range(abs(e)):
        out = intlinalg.matmul(out, base)
    return out


@dataclass(frozen=True)
class OrbitModule:
    """A module inflated from ``W``: an abelian group with ``k`` commuting automorphisms.

    The group is ``Z^rank ⊕ Z/t_1 ⊕ ...`` presented on ``rank + len(torsion)``
    generators. Its value at ``G/1`` is the same group with ``G`` acting through
    ``W``; ``Δ`` acts trivially there, so the restriction ``M(G/Δ) -> M(G/1)^Δ``
    is the identity and the module is principal.
    """

    k: int
    rank: int
    torsion: tuple[int, ...]
    actions: tuple[tuple[tuple[int, ...], ...], ...]
    _inverses: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        n = self.ngens
        if len(self.actions) != self.k:
            raise IncompatibleRank(f"need {self.k} action matrices, got {len(self.actions)}")
        for T in self.actions:
            if len(T) != n or any(len(r) != n for r in T):
                raise ValueError(f"action matrices must be {n}x{n}")
        mats = [self.matrix(i) for i in range(self.k)]
        for i in range(self.k):
            for j in range(i + 1, self.k):
                if intlinalg.matmul(mats[i], mats[j]) != intlinalg.matmul(mats[j], mats[i]):
                    raise ValueError("actions must commute")
        rels = self.relations()
        for T in mats:
            for r in rels:
                if intlinalg.solve(intlinalg.transpose(rels), intlinalg.matvec(T, r), ncols=len(rels)) is None:
                    raise ValueError("action does not preserve the torsion relations")
        object.__setattr__(self, "_inverses", tuple(tuple(map(tuple, _mat_inverse(T))) for T in mats))

    @property
    def ngens(self) -> int:
        return self.rank + len(self.torsion)

    def matrix(self, i: int) -> Matrix:
        return [list(r) for r in self.actions[i]]

    def inverse_matrix(self, i: int) -> Matrix:
        return [list(r) for r in self._inverses[i]]

    def relations(self) -> list[list[int]]:
        n = self.ngens
        rels = []
        for idx, t in enumerate(self.torsion):
            v = [0] * n
            v[self.rank + idx] = t
            rels.append(v)
        return rels

    def value(self, obj: str = "G/D") -> AbelianGroup:
        return AbelianGroup(self.rank, tuple(t for t in self.torsion if t > 1))

    def evaluate(self, p: Laurent) -> Matrix:
        """Matrix of ``p(T_1, ..., T_k)``."""
        n = self.ngens
        out = [[0] * n for _ in range(n)]
        for e, c in p.terms:
            M = intlinalg.identity(n)
            for i, ei in enumerate(e):
                if ei:
                    M = intlinalg.matmul(M, _mat_power(self.matrix(i), self.inverse_matrix(i), ei))
            for r in range(n):
                for s in range(n):
                    out[r][s] += c * M[r][s]
        return out


def constant_module(k: int) -> OrbitModule:
    """``Z`` at every orbit with trivial action."""
    return OrbitModule(k, 1, (), tuple(((1,),) for _ in range(k)))


def module_from_matrices(actions: Sequence[Matrix], rank: int | None = None, torsion: Sequence[int] = ()) -> OrbitModule:
    k = len(actions)
    n = len(actions[0]) if actions else (rank or 0)
    if rank is None:
        rank = n - len(torsion)
    return OrbitModule(k, rank, tuple(torsion), tuple(tuple(map(tuple, T)) for T in actions))


def yoneda_hom_free(M: OrbitModule) -> tuple[AbelianGroup, list[Matrix]]:
    """``Hom(free module on G/Δ, M)`` as a group with its ``W``-action.

    A map is fixed by the image of the generator, so this is ``M(G/Δ)`` and
    ``t_i`` acts by evaluating the Laurent variable at ``T_i``.
    """
    acts = [M.evaluate(Laurent.var(M.k, i)) for i in range(M.k)]
    return M.value(), acts


# ---------------------------------------------------------------------------
# resolution
# ---------------------------------------------------------------------------


def _subsets(n: int, j: int) -> list[tuple[int, ...]]:
    return list(combinations(range(n), j))


@dataclass(frozen=True)
class FreeODResolution:
    """Free resolution ``0 -> C_k -> ... -> C_0 -> Z̄`` on orbit type ``G/Δ``.

    ``differentials[j]`` is the matrix of ``C_j -> C_{j-1}`` (rows index the
    basis of ``C_{j-1}``), for ``j = 1..k``.
    """

    k: int
    ranks: tuple[int, ...]
    bases: tuple[tuple[tuple[int, ...], ...], ...]
    differentials: dict

    def d(self, j: int) -> LMatrix:
        return self.differentials[j]

    def augmentation(self) -> list[Laurent]:
        return [Laurent.const(self.k, 1)]


def koszul_differentials(n: int) -> dict[int, LMatrix]:
    """``d(e_J) = sum_pos (-1)^pos (t_{J[pos]} - 1) e_{J minus J[pos]}``."""
    out = {}
    one = Laurent.const(n, 1)
    for j in range(1, n + 1):
        rows = _subsets(n, j - 1)
        cols = _subsets(n, j)
        index = {J: i for i, J in enumerate(rows)}
        D = [[Laurent.zero(n) for _ in cols] for _ in rows]
        for c, J in enumerate(cols):
            for pos, i in enumerate(J):
                face = J[:pos] + J[pos + 1 :]
                entry = Laurent.var(n, i) - one
                D[index[face]][c] = entry if pos % 2 == 0 else -entry
        out[j] = D
    return out


def cubical_resolution(k: int) -> FreeODResolution:
    if not 1 <= k <= MAX_RESOLUTION_RANK:
        raise RankTooLarge(f"k must be in 1..{MAX_RESOLUTION_RANK}")
    diffs = koszul_differentials(k)
    for j in range(2, k + 1):
        if not lmatrix_is_zero(lmatmul(diffs[j - 1], diffs[j], k)):
            raise ArithmeticError(f"d o d != 0 in degree {j}")
    # the augmentation sends every t_i to 1, so it kills the image of d_1
    if any(x.at_one() for x in diffs[1][0]):
        raise ArithmeticError("augmentation does not vanish on boundaries")
    bases = tuple(tuple(_subsets(k, j)) for j in range(k + 1))
    return FreeODResolution(k, tuple(comb(k, j) for j in range(k + 1)), bases, diffs)


def dd_is_zero(res: FreeODResolution) -> bool:
    return all(lmatrix_is_zero(lmatmul(res.d(j - 1), res.d(j), res.k)) for j in range(2, res.k + 1))


# ---------------------------------------------------------------------------
# cohomology
# ---------------------------------------------------------------------------


def cochain_complex(res: FreeODResolution, M: OrbitModule) -> tuple[list[Matrix], list[int], list[list[list[int]]]]:
    """Integer data of ``Hom(C_*, M)``: coboundary lifts, ranks and relations."""
    if res.k != M.k:
        raise IncompatibleRank(f"resolution rank {res.k} vs module rank {M.k}")
    n = M.ngens
    dims = [r * n for r in res.ranks]
    maps: list[Matrix] = []
    for j in range(res.k):
        D = res.d(j + 1)  # C_{j+1} -> C_j, rows index C_j
        rows, cols = res.ranks[j + 1], res.ranks[j]
        big = [[0] * (cols * n) for _ in range(rows * n)]
        for r in range(rows):
            for c in range(cols):
                entry = D[c][r]
                if entry.is_zero():
                    continue
                block = M.evaluate(entry)
                for a in range(n):
                    for b in range(n):
                        big[r * n + a][c * n + b] = block[a][b]
        maps.append(big)
    rels = []
    base = M.relations()
    for r in res.ranks:
        block_rels = []
        for copy in range(r):
            for v in base:
                w = [0] * (r * n)
                w[copy * n : (copy + 1) * n] = v
                block_rels.append(w)
        rels.append(block_rels)
    return maps, dims, rels


def bredon_cohomology(res: FreeODResolution, M: OrbitModule) -> list[AbelianGroup]:
    maps, dims, rels = cochain_complex(res, M)
    return intlinalg.subquotient(maps, dims, rels)


@dataclass(frozen=True)
class CdDReport:
    k: int
    groups: tuple[AbelianGroup, ...]
    cd_d: int
    upper: int  # length of the free model

    @property
    def ranks(self) -> list[int]:
        return [g.rank for g in self.groups]

    @property
    def torsion_free(self) -> bool:
        return all(not g.torsion for g in self.groups)

    def __int__(self) -> int:
        return self.cd_d


def cd_d_report(k: int) -> CdDReport:
    """Top nonvanishing degree of ``H^*_D(G; Z̄)``, bounded above by the model length."""
    res = cubical_resolution(k)
    H = bredon_cohomology(res, constant_module(k))
    top = max(j for j, g in enumerate(H) if not g.is_zero)
    return CdDReport(k, tuple(H), top, len(res.ranks) - 1)


# ---------------------------------------------------------------------------
# comparison map
# ---------------------------------------------------------------------------


def _ring_images(k: int) -> list[list[int]]:
    # u_i -> t_i, v_i -> t_i^{-1}
    imgs = []
    for i in range(k):
        e = [0] * k
        e[i] = 1
        imgs.append(e)
    for i in range(k):
        e = [0] * k
        e[i] = -1
        imgs.append(e)
    return imgs


def _generator_image(k: int, g: int) -> tuple[int, Laurent]:
    """Image of ``e_g`` for source generator ``g`` (``u_i`` is ``i``, ``v_i`` is ``k + i``)."""
    if g < k:
        return g, Laurent.const(k, 1)
    i = g - k
    return i, -Laurent.var(k, i, -1)


def _sort_sign(seq: Sequence[int]) -> int:
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inv % 2 else 1


@dataclass(frozen=True)
class PhiChainMap:
    """Chain map from the Koszul resolution over ``Z[Z^{2k}]`` to the cubical one.

    ``maps[j][J][A]`` is the coefficient of ``e_J`` in the image of ``e_A``.
    """

    k: int
    source_bases: tuple
    target_bases: tuple
    maps: dict
    source_differentials: dict
    target_differentials: dict

    def image(self, A: tuple[int, ...]) -> dict[tuple[int, ...], Laurent]:
        j = len(A)
        col = self.source_bases[j].index(tuple(A))
        out = {}
        for r, J in enumerate(self.target_bases[j]):
            x = self.maps[j][r][col]
            if not x.is_zero():
                out[J] = x
        return out


def _wedge_image(k: int, A: Sequence[int]) -> tuple[tuple[int, ...], Laurent] | None:
    idx = []
    coeff = Laurent.const(k, 1)
    for g in A:
        i, c = _generator_image(k, g)
        idx.append(i)
        coeff = coeff * c
    if len(set(idx)) < len(idx):
        return None
    return tuple(sorted(idx)), coeff * _sort_sign(idx)


def phi_chain_map(k: int) -> PhiChainMap:
    if not 1 <= k <= MAX_PHI_RANK:
        raise RankTooLarge(f"k must be in 1..{MAX_PHI_RANK}")
    src = koszul_differentials(2 * k)
    tgt = koszul_differentials(k)
    sbases = tuple(tuple(_subsets(2 * k, j)) for j in range(2 * k + 1))
    tbases = tuple(tuple(_subsets(k, j)) for j in range(2 * k + 1))
    maps = {}
    for j in range(2 * k + 1):
        rows = tbases[j]
        index = {J: r for r, J in enumerate(rows)}
        M = [[Laurent.zero(k) for _ in sbases[j]] for _ in rows]
        for c, A in enumerate(sbases[j]):
            img = _wedge_image(k, A)
            if img is not None:
                M[index[img[0]]][c] = img[1]
        maps[j] = M
    phi = PhiChainMap(k, sbases, tbases, maps, src, tgt)
    if not phi_commutes(phi):
        raise ArithmeticError("comparison map does not commute with differentials")
    return phi


def phi_commutes(phi: PhiChainMap) -> bool:
    """``d_target o f_j == f_{j-1} o ρ(d_source)`` in every degree."""
    k = phi.k
    imgs = _ring_images(k)
    for j in range(1, 2 * k + 1):
        rho_d = [[x.substitute(imgs, k) for x in row] for row in phi.source_differentials[j]]
        right = lmatmul(phi.maps[j - 1], rho_d, k)
        if j <= k:
            left = lmatmul(phi.target_differentials[j], phi.maps[j], k)
        else:
            left = [[Laurent.zero(k) for _ in phi.source_bases[j]] for _ in phi.target_bases[j - 1]]
        if any((a - b).terms for ra, rb in zip(left, right) for a, b in zip(ra, rb)):
            return False
    return True


def phi_on_constant_cohomology(k: int, bredon_class: Mapping[tuple[int, ...], int]):
    """Pull a constant-coefficient Bredon cochain back along the comparison map.

    ``bredon_class`` maps index tuples ``J`` (the dual basis ``ε_J``) to
    integers; all keys must have the same size. The dual of the chain map at
    ``t = 1`` is evaluated column by column.
    """
    from .tcbounds import ExteriorClass

    degrees = {len(J) for J in bredon_class}
    if len(degrees) > 1:
        raise ValueError("class must be homogeneous")
    j = degrees.pop() if degrees else 0
    if j > k:
        raise DegreeTooLarge(f"degree {j} exceeds {k}")
    phi = phi_chain_map(k)
    rows = {J: r for r, J in enumerate(phi.target_bases[j])}
    coeffs: dict[tuple[int, ...], int] = {}
    for c, A in enumerate(phi.source_bases[j]):
        total = 0
        for J, a in bredon_class.items():
            J = tuple(sorted(J))
            total += a * phi.maps[j][rows[J]][c].at_one()
        if total:
            coeffs[A] = total
    return ExteriorClass(2 * k, coeffs)


def top_bredon_class(k: int) -> dict[tuple[int, ...], int]:
    return {tuple(range(k)): 1}


# ---------------------------------------------------------------------------
# the spliced sequence, at descriptor level
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MpiTerm:
    name: str
    principal_component: str
    tag: str
    certificate: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "principal_component": self.principal_component,
            "tag": self.tag,
            "certificate": list(self.certificate),
        }


@dataclass(frozen=True)
class MpiDescriptor:
    group: GroupId
    n: int
    terms: tuple[MpiTerm, ...]

    def to_json(self) -> dict:
        return {"group": str(self.group), "n": self.n, "terms": [t.to_json() for t in self.terms]}


def _isotropy_certificate(group: GroupId, r: int, limit: int = 4) -> tuple[str, ...]:
    """Isotropy of a few ``(r+1)``-tuples, each an explicit member of the family."""
    from .dee import isotropy_of_tuple

    B = ball(group, 1)[:limit]
    out = []
    for t in product(B, repeat=r + 1):
        H = isotropy_of_tuple(t)
        out.append(f"{tuple(str(g) for g in t)} -> {H}")
        if len(out) >= limit:
            break
    return tuple(out)


def mpi_descriptor(group: GroupId, n: int) -> MpiDescriptor:
    """Terms ``Ī^n, M̄_π⊗Ī^{n-1}, ..., M̄_π, Z̄`` of the spliced sequence, tagged."""
    from .principality import is_principal

    if n < 1:
        raise ValueError("n must be >= 1")
    principal = is_principal(group).is_principal
    top_tag = "principal" if principal else "principality unknown: group not principal"
    terms = [MpiTerm(f"I^{n}", f"I^{n}", top_tag)]
    for r in range(n - 1, -1, -1):
        name = "M_pi" if r == 0 else f"M_pi (x) I^{r}"
        comp = "Z[pi]" if r == 0 else f"Z[pi] (x) I^{r}"
        terms.append(MpiTerm(name, comp, "projective", _isotropy_certificate(group, r)))
    terms.append(MpiTerm("Z", "Z", "not free"))
    return MpiDescriptor(group, n, tuple(terms))

