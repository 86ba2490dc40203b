"""Curve germs as clusters of infinitely near points.

A branch is described by its multiplicity sequence at successive infinitely
near points; sequences are padded with 1s on demand.  Two branches share the
first ``depth`` points of their chains.  Proximity follows from the sequence:
the point at position i is proximate to the point at position j < i exactly
when ``j < i <= j + r_j``, where ``r_j`` is the least r with
``m_{j+1} + ... + m_{j+r} = m_j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd


class GermError(ValueError):
    pass


@dataclass(frozen=True)
class Branch:
    mult_sequence: tuple[int, ...] = (1,)
    kind: str = "smooth"
    m: int | None = None
    n: int | None = None

    def mult(self, k: int) -> int:
        return self.mult_sequence[k] if k < len(self.mult_sequence) else 1

    @property
    def is_smooth(self) -> bool:
        return all(x == 1 for x in self.mult_sequence)

    def satellite_span(self, j: int) -> int:
        """``r_j``: how many of the following points are proximate to position j."""
        need, r = self.mult(j), 0
        while need > 0:
            r += 1
            need -= self.mult(j + r)
        if need < 0:
            raise GermError(f"multiplicity sequence {self.mult_sequence} violates the proximity equality")
        return r

    def proximate_to(self, i: int) -> frozenset[int]:
        return frozenset(j for j in range(i) if i <= j + self.satellite_span(j))

    def delta(self) -> int:
        return sum(x * (x - 1) for x in self.mult_sequence) // 2


def smooth_branch() -> Branch:
    return Branch()


def quasi_homogeneous_branch(m: int, n: int) -> Branch:
    """Branch of x^m + y^n via the Euclidean algorithm on (m, n)."""
    if m < 2:
        raise GermError("m < 2 is a smooth branch; use smooth_branch()")
    if n <= m:
        raise GermError(f"need m < n, got ({m}, {n})")
    if gcd(m, n) != 1:
        raise GermError(f"x^{m} + y^{n} is reducible; list its branches separately")
    seq, a, b = [], m, n
    while a and b:
        if a <= b:
            seq.append(a)
            b -= a
        else:
            seq.append(b)
            a -= b
    return Branch(tuple(seq), "quasi_homogeneous", m, n)


@dataclass(frozen=True)
class Germ:
    """Branches through one point, keyed by id, with pairwise shared depths (default 1)."""

    branches: tuple[tuple[str, Branch], ...]
    contacts: dict[frozenset[str], int] = field(default_factory=dict, hash=False, compare=True)

    @classmethod
    def make(cls, branches: dict[str, Branch] | list[tuple[str, Branch]], contacts: dict[tuple[str, str], int] | None = None) -> "Germ":
        items = tuple(branches.items()) if isinstance(branches, dict) else tuple(branches)
        return cls(items, {frozenset(k): v for k, v in (contacts or {}).items()})

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(b for b, _ in self.branches)

    def branch(self, bid: str) -> Branch:
        for b, br in self.branches:
            if b == bid:
                return br
        raise GermError(f"unknown branch {bid!r}")

    def depth(self, a: str, b: str) -> int:
        self.branch(a)
        self.branch(b)
        return self.contacts.get(frozenset((a, b)), 1)


def local_intersection(g: Germ, a: str, b: str) -> int:
    """Noether's formula over the shared infinitely near points."""
    if a == b:
        raise GermError("local intersection of a branch with itself")
    ba, bb = g.branch(a), g.branch(b)
    return sum(ba.mult(k) * bb.mult(k) for k in range(g.depth(a, b)))


@dataclass(frozen=True)
class GermCheck:
    ok: bool
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_germ(g: Germ) -> GermCheck:
    ids = g.ids
    if len(set(ids)) != len(ids):
        return GermCheck(False, "duplicate branch id")
    for bid, br in g.branches:
        if not br.mult_sequence or any(x < 1 for x in br.mult_sequence):
            return GermCheck(False, f"branch {bid}: multiplicities must be positive")
        try:
            for j in range(len(br.mult_sequence)):
                br.satellite_span(j)
        except GermError as exc:
            return GermCheck(False, f"branch {bid}: {exc}")
    for key, d in g.contacts.items():
        if len(key) != 2 or not key <= set(ids):
            return GermCheck(False, f"contact {sorted(key)} names an unknown branch or a single branch")
        if d < 1:
            return GermCheck(False, f"contact {sorted(key)}: depth must be >= 1")
    for a, b, c in combinations(ids, 3):
        ds = sorted((g.depth(a, b), g.depth(a, c), g.depth(b, c)))
        if ds[0] != ds[1]:
            return GermCheck(False, f"branches {a}, {b}, {c}: depths {ds} do not form a tree")
    for a, b in combinations(ids, 2):
        ba, bb = g.branch(a), g.branch(b)
        for i in range(1, g.depth(a, b)):
            if ba.proximate_to(i) != bb.proximate_to(i):
                return GermCheck(False, f"branches {a}, {b}: shared point {i} is free on one and satellite on the other")
    return GermCheck(True)
