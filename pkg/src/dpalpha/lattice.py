"""Picard lattices of smooth del Pezzo surfaces and exact intersection arithmetic.

Coordinates on a blow-up of the plane in n points are ``(d; m1, ..., mn)`` and
stand for the class ``d*H - sum(m_i * E_i)``.  With this sign convention the
pairing is ``diag(1, -1, ..., -1)`` applied to the coordinate vectors, the
exceptional curve ``E_i`` has coordinate ``m_i = -1`` and the canonical class is
``(-3; -1, ..., -1)``.  The quadric uses the rulings ``(a, b) = a*L1 + b*L2``.

Extended lattices produced by :func:`blow_up_lattice` keep the same convention:
every appended coordinate is the multiplicity at the new centre, so a strict
transform of ``A`` through the centre with multiplicity ``m`` simply appends
``m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence


class DimensionError(ValueError):
    """Classes living on different lattices were combined."""


@dataclass(frozen=True)
class Lattice:
    """A unimodular lattice with a fixed Gram matrix and canonical class."""

    name: str
    gram: tuple[tuple[int, ...], ...]
    canonical: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.gram)

    @cached_property
    def _diagonal(self) -> tuple[int, ...] | None:
        g = self.gram
        if all(g[i][j] == 0 for i in range(len(g)) for j in range(len(g)) if i != j):
            return tuple(g[i][i] for i in range(len(g)))
        return None

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        diag = self._diagonal
        if diag is not None:
            return sum(a * w * b for a, w, b in zip(u, diag, v))
        g = self.gram
        return sum(u[i] * g[i][j] * v[j] for i in range(len(u)) for j in range(len(v)) if g[i][j])

    def element(self, coords: Sequence[int]) -> "DivisorClass":
        return DivisorClass(self, tuple(int(c) for c in coords))

    @property
    def K(self) -> "DivisorClass":
        return DivisorClass(self, self.canonical)

    @property
    def zero(self) -> "DivisorClass":
        return DivisorClass(self, (0,) * self.rank)


@dataclass(frozen=True)
class SurfaceModel:
    """A marked del Pezzo surface: the plane blown up in ``n`` points, or the quadric."""

    kind: str
    n: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("blowup", "quadric"):
            raise ValueError(f"unknown surface kind {self.kind!r}")
        if self.kind == "blowup" and not 0 <= self.n <= 8:
            raise ValueError(f"blow-up of the plane needs 0 <= n <= 8, got {self.n}")
        if self.kind == "quadric" and self.n != 0:
            raise ValueError("quadric takes no n")

    @classmethod
    def blowup(cls, n: int) -> "SurfaceModel":
        return cls("blowup", n)

    @classmethod
    def quadric(cls) -> "SurfaceModel":
        return cls("quadric")

    @classmethod
    def of_degree(cls, degree: int) -> "SurfaceModel":
        """The blow-up model of the given degree (F1 for degree 8)."""
        return cls("blowup", 9 - degree)

    @property
    def degree(self) -> int:
        return 8 if self.kind == "quadric" else 9 - self.n

    @property
    def lattice(self) -> Lattice:
        if self.kind == "quadric":
            return Lattice("quadric", ((0, 1), (1, 0)), (-2, -2))
        r = self.n + 1
        gram = tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(r)) for i in range(r))
        return Lattice(f"blowup{self.n}", gram, (-3,) + (-1,) * self.n)

    def cls(self, *coords: int) -> "DivisorClass":
        return self.lattice.element(coords)

    def E(self, i: int) -> "DivisorClass":
        """Exceptional curve ``E_i`` (1-based)."""
        if self.kind != "blowup" or not 1 <= i <= self.n:
            raise ValueError(f"no exceptional curve E{i} on {self}")
        m = [0] * self.n
        m[i - 1] = -1
        return self.cls(0, *m)

    def plane(self, d: int, *ones: int) -> "DivisorClass":
        """``d*H`` minus the exceptional curves listed in ``ones`` (1-based)."""
        m = [0] * self.n
        for i in ones:
            m[i - 1] += 1
        return self.cls(d, *m)

    def __str__(self) -> str:
        return "quadric" if self.kind == "quadric" else f"blowup(n={self.n})"


@dataclass(frozen=True)
class DivisorClass:
    lattice: Lattice
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.lattice.rank:
            raise DimensionError(f"{len(self.coords)} coordinates on a rank {self.lattice.rank} lattice")

    def _check(self, other: "DivisorClass") -> None:
        if not isinstance(other, DivisorClass) or other.lattice != self.lattice:
            raise DimensionError("classes belong to different lattices")

    def dot(self, other: "DivisorClass") -> int:
        self._check(other)
        return self.lattice.pair(self.coords, other.coords)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.lattice, tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "DivisorClass":
        return DivisorClass(self.lattice, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    @property
    def self_intersection(self) -> int:
        return self.dot(self)

    def __str__(self) -> str:
        c = self.coords
        if self.lattice.name == "quadric":
            return f"({c[0]},{c[1]})"
        return f"({c[0]};{','.join(map(str, c[1:]))})" if len(c) > 1 else f"({c[0]})"


def intersect(a: DivisorClass, b: DivisorClass) -> int:
    return a.dot(b)


def canonical_class(s: SurfaceModel | Lattice) -> DivisorClass:
    lat = s.lattice if isinstance(s, SurfaceModel) else s
    return lat.K


def degree(c: DivisorClass) -> int:
    """Anticanonical degree ``-K.c``."""
    return -c.lattice.K.dot(c)


def arithmetic_genus(c: DivisorClass) -> Fraction:
    return Fraction(c.lattice.K.dot(c) + c.dot(c) + 2, 2)


def riemann_roch_lower_bound(c: DivisorClass) -> int:
    # c.(c - K)/2 + 1; the numerator is always even
    return (c.dot(c) - c.dot(c.lattice.K)) // 2 + 1


def blow_up_lattice(s: SurfaceModel | Lattice) -> Lattice:
    """Append one exceptional basis vector squaring to -1."""
    lat = s.lattice if isinstance(s, SurfaceModel) else s
    r = lat.rank
    gram = tuple(row + (0,) for row in lat.gram) + ((0,) * r + (-1,),)
    return Lattice(f"{lat.name}+1", gram, lat.canonical + (-1,))


def pullback(c: DivisorClass, lat: Lattice) -> DivisorClass:
    """Total transform of ``c`` into a lattice obtained by blow-ups."""
    return strict_transform(c, lat, ())


def strict_transform(c: DivisorClass, lat: Lattice, mults: Sequence[int]) -> DivisorClass:
    """Class of ``pi^*c - sum m_k E_k`` for the trailing exceptional vectors."""
    extra = lat.rank - c.lattice.rank
    tail = tuple(mults) + (0,) * (extra - len(mults))
    if len(tail) != extra:
        raise DimensionError("more multiplicities than new exceptional vectors")
    return DivisorClass(lat, c.coords + tail)
