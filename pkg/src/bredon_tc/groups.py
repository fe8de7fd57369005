"""Exact arithmetic in the catalog groups.

Four families are supported, each with a unique normal form:

* ``FreeAbelian(k)``: integer vectors of length ``k``.
* ``Free(k)``: freely reduced words; letter ``i`` is the ``i``-th generator and
  ``-i`` its inverse (``1 <= i <= k``).
* ``Klein()``: pairs ``(m, n)`` standing for ``a^m b^n`` in
  ``<a, b | b a b^-1 = a^-1>``.
* ``Heisenberg()``: triples ``(p, q, r)`` standing for ``a^p b^q c^r`` with
  ``c = [a, b]`` central.

Elements are immutable; the raw tuple laws (``*_mul``) are exposed for hot
loops that do not want the wrapper overhead.

>>> K = Klein()
>>> c, d = klein_named("c"), klein_named("d")
>>> (c * c) == (d * d)
True
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .errors import BredonTCError, ElementNotInGroup, GroupMismatch, RadiusTooLarge

DEFAULT_RADIUS_CAP = 8

KINDS = ("z", "free", "klein", "heisenberg")


def radius_cap() -> int:
    """Ball radius cap; ``BREDON_TC_RADIUS_CAP`` overrides the default 8."""
    raw = os.environ.get("BREDON_TC_RADIUS_CAP")
    if raw is None or not raw.strip():
        return DEFAULT_RADIUS_CAP
    return int(raw)


@dataclass(frozen=True, order=True)
class GroupId:
    kind: str
    rank: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BredonTCError(f"unknown group kind {self.kind!r}")
        if self.rank < 1:
            raise BredonTCError("rank must be >= 1")
        if self.kind in ("klein", "heisenberg") and self.rank != 1:
            raise BredonTCError(f"{self.kind} takes no rank")

    @property
    def cd(self) -> int:
        """Cohomological dimension of the group."""
        return {"z": self.rank, "free": 1, "klein": 2, "heisenberg": 3}[self.kind]

    @property
    def is_abelian(self) -> bool:
        return self.kind == "z" or (self.kind == "free" and self.rank == 1)

    @property
    def width(self) -> int:
        """Length of the coordinate tuple (words have variable length)."""
        return {"z": self.rank, "klein": 2, "heisenberg": 3}.get(self.kind, -1)

    def __str__(self) -> str:
        if self.kind == "z":
            return f"Z^{self.rank}"
        if self.kind == "free":
            return f"F_{self.rank}"
        return {"klein": "Klein", "heisenberg": "Heisenberg"}[self.kind]


def FreeAbelian(k: int) -> GroupId:
    return GroupId("z", k)


def Free(k: int) -> GroupId:
    return GroupId("free", k)


def Klein() -> GroupId:
    return GroupId("klein")


def Heisenberg() -> GroupId:
    return GroupId("heisenberg")


def parse_group(name: str, rank: int | None = None) -> GroupId:
    """Parse a CLI group name (``z``, ``free``, ``klein``, ``heisenberg``)."""
    name = name.strip().lower()
    if name in ("z", "free"):
        return GroupId(name, 1 if rank is None else rank)
    if name in ("klein", "heisenberg"):
        if rank not in (None, 1):
            raise BredonTCError(f"{name} takes no rank")
        return GroupId(name)
    raise BredonTCError(f"unknown group {name!r}")


# ---------------------------------------------------------------------------
# raw laws on tuples
# ---------------------------------------------------------------------------


def free_mul(x: tuple, y: tuple) -> tuple:
    i = 0
    n = min(len(x), len(y))
    while i < n and x[-1 - i] == -y[i]:
        i += 1
    return x[: len(x) - i] + y[i:]


def free_inv(x: tuple) -> tuple:
    return tuple(-c for c in reversed(x))


def zk_mul(x: tuple, y: tuple) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


def zk_inv(x: tuple) -> tuple:
    return tuple(-a for a in x)


def klein_mul(x: tuple, y: tuple) -> tuple:
    m, n = x
    mp, np_ = y
    return (m + (mp if n % 2 == 0 else -mp), n + np_)


def klein_inv(x: tuple) -> tuple:
    m, n = x
    return ((-m if n % 2 == 0 else m), -n)


def heis_mul(x: tuple, y: tuple) -> tuple:
    # a^p b^q c^r  <->  [[1, p, pq + r], [0, 1, q], [0, 0, 1]]
    p, q, r = x
    pp, qp, rp = y
    return (p + pp, q + qp, r + rp - q * pp)


def heis_inv(x: tuple) -> tuple:
    p, q, r = x
    return (-p, -q, -r - p * q)


@dataclass(frozen=True)
class _Law:
    mul: Callable[[tuple, tuple], tuple]
    inv: Callable[[tuple], tuple]


_LAWS = {
    "z": _Law(zk_mul, zk_inv),
    "free": _Law(free_mul, free_inv),
    "klein": _Law(klein_mul, klein_inv),
    "heisenberg": _Law(heis_mul, heis_inv),
}


def law(group: GroupId) -> _Law:
    return _LAWS[group.kind]


def _identity_data(group: GroupId) -> tuple:
    if group.kind == "free":
        return ()
    return (0,) * group.width


def _generator_data(group: GroupId) -> list[tuple]:
    if group.kind == "free":
        return [(i,) for i in range(1, group.rank + 1)]
    if group.kind == "z":
        return [tuple(1 if j == i else 0 for j in range(group.rank)) for i in range(group.rank)]
    if group.kind == "klein":
        return [(1, 0), (0, 1)]
    return [(1, 0, 0), (0, 1, 0)]


def _validate(group: GroupId, data: tuple) -> tuple:
    data = tuple(int(x) for x in data)
    if group.kind == "free":
        if any(c == 0 or abs(c) > group.rank for c in data):
            raise ElementNotInGroup(f"letters must lie in ±1..±{group.rank}")
        if any(data[i] == -data[i + 1] for i in range(len(data) - 1)):
            raise ElementNotInGroup("free word is not reduced")
    elif len(data) != group.width:
        raise ElementNotInGroup(f"{group} elements have {group.width} coordinates")
    return data


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True, order=True)
class GroupElement:
    """Normal form of an element; equality is field equality."""

    group: GroupId
    data: tuple

    def __post_init__(self):
        object.__setattr__(self, "data", _validate(self.group, self.data))

    @classmethod
    def _raw(cls, group: GroupId, data: tuple) -> "GroupElement":
        obj = object.__new__(cls)
        object.__setattr__(obj, "group", group)
        object.__setattr__(obj, "data", data)
        return obj

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def __pow__(self, n: int) -> "GroupElement":
        return power(self, n)

    def inverse(self) -> "GroupElement":
        return inverse(self)

    @property
    def is_identity(self) -> bool:
        return self.data == _identity_data(self.group)

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"<{self.group}: {format_element(self)}>"


def element(group: GroupId, *data) -> GroupElement:
    """Build an element from coordinates (or letters for free groups)."""
    if len(data) == 1 and isinstance(data[0], (tuple, list)):
        data = tuple(data[0])
    return GroupElement(group, tuple(data))


def identity(group: GroupId) -> GroupElement:
    return GroupElement._raw(group, _identity_data(group))


def generators(group: GroupId) -> list[GroupElement]:
    """The fixed generating set: standard basis, free basis, or ``{a, b}``."""
    return [GroupElement._raw(group, d) for d in _generator_data(group)]


def _check_same(g: GroupElement, h: GroupElement) -> None:
    if g.group != h.group:
        raise GroupMismatch(f"{g.group} vs {h.group}")


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    _check_same(g, h)
    return GroupElement._raw(g.group, _LAWS[g.group.kind].mul(g.data, h.data))


def inverse(g: GroupElement) -> GroupElement:
    return GroupElement._raw(g.group, _LAWS[g.group.kind].inv(g.data))


def power(g: GroupElement, n: int) -> GroupElement:
    n = int(n)
    mul = _LAWS[g.group.kind].mul
    base = g.data if n >= 0 else _LAWS[g.group.kind].inv(g.data)
    n = abs(n)
    acc = _identity_data(g.group)
    while n:
        if n & 1:
            acc = mul(acc, base)
        base = mul(base, base)
        n >>= 1
    return GroupElement._raw(g.group, acc)


def commutator(g: GroupElement, h: GroupElement) -> GroupElement:
    """``g h g^-1 h^-1``."""
    _check_same(g, h)
    lw = _LAWS[g.group.kind]
    d = lw.mul(lw.mul(g.data, h.data), lw.mul(lw.inv(g.data), lw.inv(h.data)))
    return GroupElement._raw(g.group, d)


def conjugate(g: GroupElement, by: GroupElement) -> GroupElement:
    """``by g by^-1``."""
    return by * g * by.inverse()


def commutes(g: GroupElement, h: GroupElement) -> bool:
    _check_same(g, h)
    mul = _LAWS[g.group.kind].mul
    return mul(g.data, h.data) == mul(h.data, g.data)


def product(elements: Iterable[GroupElement], group: GroupId) -> GroupElement:
    acc = identity(group)
    for e in elements:
        acc = acc * e
    return acc


def format_element(g: GroupElement) -> str:
    kind = g.group.kind
    if kind == "z":
        return "(" + ",".join(str(x) for x in g.data) + ")"
    if kind == "free":
        if not g.data:
            return "1"
        parts = []
        i = 0
        w = g.data
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            letter = _LETTERS[abs(w[i]) - 1] if g.group.rank <= 26 else f"x{abs(w[i])}"
            e = (j - i) * (1 if w[i] > 0 else -1)
            parts.append(letter if e == 1 else f"{letter}^{e}")
            i = j
        return " ".join(parts)
    names = "ab" if kind == "klein" else "abc"
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, g.data) if e]
    return " ".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# balls
# ---------------------------------------------------------------------------


@lru_cache(maxsize=64)
def _ball_layers(group: GroupId, radius: int) -> tuple[tuple[tuple, ...], ...]:
    lw = _LAWS[group.kind]
    gens = _generator_data(group)
    steps = gens + [lw.inv(g) for g in gens]
    start = _identity_data(group)
    seen = {start}
    layers = [(start,)]
    frontier = deque([start])
    for _ in range(radius):
        nxt = []
        for x in frontier:
            for s in steps:
                y = lw.mul(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        nxt.sort(key=_sort_key)
        layers.append(tuple(nxt))
        frontier = deque(nxt)
    return tuple(layers)


def _sort_key(d: tuple):
    return (len(d), tuple((abs(c), c < 0) for c in d))


def ball(group: GroupId, radius: int) -> tuple[GroupElement, ...]:
    """Elements of word length ``<= radius`` in the standard generators.

    The result is deduplicated by normal form and ordered by word length,
    then by a fixed key within each sphere.
    """
    if radius < 0:
        raise BredonTCError("radius must be nonnegative")
    if radius > radius_cap():
        raise RadiusTooLarge(f"radius {radius} exceeds cap {radius_cap()}")
    return tuple(GroupElement._raw(group, d) for layer in _ball_layers(group, radius) for d in layer)


def word_length(g: GroupElement, limit: int | None = None) -> int | None:
    """Word length of ``g`` in the standard generators, searched up to ``limit``."""
    if g.group.kind == "free":
        return len(g.data)
    if g.group.kind == "z":
        return sum(abs(x) for x in g.data)
    limit = radius_cap() if limit is None else limit
    for r, layer in enumerate(_ball_layers(g.group, limit)):
        if g.data in layer:
            return r
    return None


# ---------------------------------------------------------------------------
# Klein bottle group: named elements and four-form normal form
# ---------------------------------------------------------------------------

_KLEIN_NAMED = {
    "a": (1, 0),
    "b": (0, 1),
    "c": (0, 1),
    "d": (1, 1),
    "x": (-1, 2),
    "y": (1, 2),
    "z": (0, 2),
}


def klein_named(name: str) -> GroupElement:
    """The elements c, d, x = cd, y = dc, z = c^2 (and a, b) of the Klein group."""
    return GroupElement._raw(Klein(), _KLEIN_NAMED[name])


def klein_name_of(g: GroupElement) -> str | None:
    for name in "xyzcd":
        if _KLEIN_NAMED[name] == g.data:
            return name
    return None


@dataclass(frozen=True)
class KleinForm:
    """``x^k z^l``, ``y^k z^l``, ``x^k z^l c`` or ``y^k z^l d`` with ``k >= 0``."""

    family: str  # "x" or "y"
    k: int
    l: int
    tail: str = ""  # "", "c" (x family) or "d" (y family)

    def __str__(self) -> str:
        parts = []
        if self.k:
            parts.append(self.family if self.k == 1 else f"{self.family}^{self.k}")
        if self.l:
            parts.append("z" if self.l == 1 else f"z^{self.l}")
        if self.tail:
            parts.append(self.tail)
        return " ".join(parts) if parts else "1"

    def evaluate(self) -> GroupElement:
        base = klein_named(self.family) ** self.k * klein_named("z") ** self.l
        return base * klein_named(self.tail) if self.tail else base


def klein_four_form(g: GroupElement) -> KleinForm:
    """Rewrite ``a^m b^n`` in the x/y/z/c/d four-form normal form.

    With ``k >= 0`` the forms are unique except that ``x^0 z^l = y^0 z^l``;
    that overlap is canonicalized to the x family.
    """
    if g.group.kind != "klein":
        raise GroupMismatch("klein_four_form needs a Klein element")
    m, n = g.data
    if n % 2 == 0:
        # x^k z^l = (-k, 2k + 2l), y^k z^l = (k, 2k + 2l)
        if m <= 0:
            return KleinForm("x", -m, n // 2 + m)
        return KleinForm("y", m, n // 2 - m)
    # x^k z^l c = (-k, 2k + 2l + 1), y^k z^l d = (k + 1, 2k + 2l + 1)
    if m <= 0:
        return KleinForm("x", -m, (n - 1) // 2 + m, "c")
    return KleinForm("y", m - 1, (n - 1) // 2 - (m - 1), "d")
