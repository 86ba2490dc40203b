"""Lines, low-degree curve classes and nef/ample tests on del Pezzo surfaces."""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

from .lattice import DivisorClass, SurfaceModel, arithmetic_genus, degree


class UnsupportedRange(ValueError):
    pass


class PreconditionError(ValueError):
    pass


# letter used for a line class of plane degree d on the degree-1 surface
LINE_TYPES = {0: "E", 1: "L", 2: "C", 3: "Q", 4: "R", 5: "T", 6: "Z"}


def _d_max(n: int, deg: int, self_int: int) -> int:
    """Largest d with (9-n)d^2 - 6*deg*d + deg^2 + n*self_int <= 0.

    This is Cauchy-Schwarz on (m_i): (sum m)^2 <= n * sum m^2 with
    sum m = 3d - deg and sum m^2 = d^2 - self_int.
    """
    a, b, c = 9 - n, -6 * deg, deg * deg + n * self_int
    disc = b * b - 4 * a * c
    if disc < 0:
        return 0
    return (-b + isqrt(disc)) // (2 * a) + 1


def _vectors(n: int, d: int, total: int, squares: int, lo: int = 0):
    """Non-increasing tuples of length n in [lo, d] with the given sum and sum of squares."""
    if n == 0:
        if total == 0 and squares == 0:
            yield ()
        return
    for first in range(min(d, total - lo * (n - 1)), lo - 1, -1):
        rest_t, rest_s = total - first, squares - first * first
        if rest_s < 0 or rest_t < lo * (n - 1):
            continue
        # remaining entries lie in [lo, first]
        if rest_t > first * (n - 1) or rest_s > first * first * (n - 1):
            continue
        for tail in _vectors(n - 1, first, rest_t, rest_s, lo):
            yield (first,) + tail


def _permutations(v: tuple[int, ...]):
    from itertools import permutations

    return set(permutations(v))


@lru_cache(maxsize=None)
def _classes(s: SurfaceModel, deg: int, self_int: int) -> tuple[DivisorClass, ...]:
    if s.kind == "quadric":
        out = []
        for a in range(deg // 2 + 1):
            b = deg // 2 - a
            if 2 * a + 2 * b == deg and 2 * a * b == self_int:
                out.append(s.cls(a, b))
        return tuple(sorted(out, key=lambda c: c.coords))
    n = s.n
    out = set()
    for d in range(1, _d_max(n, deg, self_int) + 1):
        for v in _vectors(n, d, 3 * d - deg, d * d - self_int):
            for p in _permutations(v):
                out.add(s.cls(d, *p))
    return tuple(sorted(out, key=lambda c: c.coords))


def enumerate_classes(s: SurfaceModel, deg: int, self_int: int) -> tuple[DivisorClass, ...]:
    """Classes (d; m) with d >= 1, m_i >= 0 of the given degree and self-intersection."""
    if not 1 <= deg <= 4:
        raise UnsupportedRange(f"degree {deg} outside the supported range 1..4")
    if s.kind == "blowup" and s.n == 0 and deg % 3:
        return ()
    return _classes(s, deg, self_int)


@lru_cache(maxsize=None)
def enumerate_lines(s: SurfaceModel) -> tuple[DivisorClass, ...]:
    """All (-1)-curves, sorted by coordinates."""
    if s.kind == "quadric" or s.n == 0:
        return ()
    es = tuple(s.E(i) for i in range(1, s.n + 1))
    rest = _classes(s, 1, -1)
    return tuple(sorted(es + rest, key=lambda c: c.coords))


def line_type(c: DivisorClass) -> str:
    return LINE_TYPES[c.coords[0]]


@lru_cache(maxsize=None)
def cone_generators(s: SurfaceModel) -> tuple[DivisorClass, ...]:
    """Generators of the cone of curves."""
    if s.kind == "quadric":
        return (s.cls(1, 0), s.cls(0, 1))
    if s.n == 0:
        return (s.cls(1),)
    if s.n == 1:
        return (s.E(1), s.plane(1, 1))
    return enumerate_lines(s)


def _surface_of(c: DivisorClass) -> SurfaceModel:
    name = c.lattice.name
    if name == "quadric":
        return SurfaceModel.quadric()
    if name.startswith("blowup") and name[6:].isdigit():
        return SurfaceModel.blowup(int(name[6:]))
    raise ValueError("class does not live on a del Pezzo lattice")


def is_nef(c: DivisorClass) -> bool:
    return all(c.dot(g) >= 0 for g in cone_generators(_surface_of(c)))


def is_ample(c: DivisorClass) -> bool:
    return c.dot(c) > 0 and all(c.dot(g) > 0 for g in cone_generators(_surface_of(c)))


def is_curve_candidate(c: DivisorClass) -> bool:
    """Smooth rational class that can carry an irreducible curve: a line, or nef and nonzero."""
    if arithmetic_genus(c) != 0 or all(x == 0 for x in c.coords):
        return False
    s = _surface_of(c)
    return c in enumerate_lines(s) or is_nef(c)


def ample_window_check(s: SurfaceModel, c: DivisorClass) -> bool:
    """Whether -(K + (1-b)c) is ample for every b in (0, 1].

    Against each cone generator the pairing is affine in b, and -K is ample,
    so the family stays ample on (0, 1] exactly when the b -> 0 limit -(K + c)
    is nef.
    """
    if arithmetic_genus(c) != 0:
        raise PreconditionError(f"class {c} is not rational")
    if c.lattice != s.lattice:
        raise PreconditionError("class is not on this surface")
    return is_nef(-(s.lattice.K + c))


def window_inequality(s: SurfaceModel, c: DivisorClass) -> bool:
    return 0 < degree(c) <= s.degree - 2


def rational_curve_classes(s: SurfaceModel, bound: int = 6) -> list[DivisorClass]:
    """Smooth rational curve candidates with all coordinates in [-bound, bound].

    Entries of the exceptional part are taken up to permutation, which is
    harmless because the line set is invariant under permuting the E_i.
    """
    from itertools import combinations_with_replacement, product

    rng = range(-bound, bound + 1)
    out = []
    if s.kind == "quadric":
        raw = product(rng, repeat=2)
        for a, b in raw:
            if -2 * a - 2 * b + 2 * a * b == -2 and is_curve_candidate(s.cls(a, b)):
                out.append(s.cls(a, b))
        return out
    for d in rng:
        for m in combinations_with_replacement(rng, s.n):
            # K.c + c^2 = -2
            if -3 * d + sum(m) + d * d - sum(x * x for x in m) != -2:
                continue
            c = s.cls(d, *m)
            if is_curve_candidate(c):
                out.append(c)
    return out


def window_mismatches(s: SurfaceModel, bound: int = 6) -> list[DivisorClass]:
    return [c for c in rational_curve_classes(s, bound) if ample_window_check(s, c) != window_inequality(s, c)]
