"""Exact log canonical thresholds as piecewise fractional-linear functions of β."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

from .resolution import CoeffForm, PairConfig, minimal_log_resolution

Q = Fraction
ONE = Q(1)


class DegeneratePairError(ValueError):
    """A λ-free coefficient exceeds 1 somewhere on (0, 1]."""


class UnboundedThresholdError(ValueError):
    """No divisor carries a positive λ weight."""


class DiscontinuityError(ValueError):
    pass


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Q(x)


@dataclass(frozen=True)
class FL:
    """``(p + q*b) / (r + s*b)`` kept as a primitive integer vector."""

    p: int
    q: int
    r: int
    s: int

    @classmethod
    def make(cls, p, q, r, s) -> "FL":
        p, q, r, s = map(_q, (p, q, r, s))
        if r == 0 and s == 0:
            raise ZeroDivisionError("zero denominator")
        if p * s == q * r:
            c = p / r if r else q / s
            p, q, r, s = c, Q(0), Q(1), Q(0)
        den = 1
        for x in (p, q, r, s):
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in (p, q, r, s)]
        g = 0
        for x in ints:
            g = gcd(g, x)
        ints = [x // g for x in ints]
        lead = ints[3] if ints[3] else ints[2]
        if lead < 0:
            ints = [-x for x in ints]
        return cls(*ints)

    @classmethod
    def const(cls, c) -> "FL":
        return cls.make(c, 0, 1, 0)

    @property
    def is_const(self) -> bool:
        return self.q == 0 and self.s == 0

    def __call__(self, beta) -> Fraction:
        beta = _q(beta)
        den = self.r + self.s * beta
        if den == 0:
            raise ZeroDivisionError(f"{self} has a pole at β={beta}")
        return (self.p + self.q * beta) / den

    def __str__(self) -> str:
        if self.is_const:
            return str(Q(self.p, self.r))
        return f"{_affine(self.p, self.q, True)}/{_affine(self.r, self.s, False)}"


def _affine(c0: int, c1: int, numerator: bool) -> str:
    parts = []
    if c0:
        parts.append(str(c0))
    if c1:
        coef = "" if c1 == 1 else "-" if c1 == -1 else str(c1)
        term = f"{coef}β"
        if parts:
            term = ("-" + term[1:] if term.startswith("-") else "+" + term)
        parts.append(term)
    body = "".join(parts) or "0"
    single = len(parts) == 1
    if numerator and single:
        return body
    if not numerator and single and not c1:
        return body
    return f"({body})"


def _crossings(f: FL, g: FL, lo: Fraction, hi: Fraction) -> list[Fraction]:
    """Rational β in (lo, hi) where f = g."""
    # (p1 + q1 b)(r2 + s2 b) - (p2 + q2 b)(r1 + s1 b) = a b^2 + bb b + c
    a = f.q * g.s - g.q * f.s
    bb = f.p * g.s + f.q * g.r - g.p * f.s - g.q * f.r
    c = f.p * g.r - g.p * f.r
    roots: list[Fraction] = []
    if a == 0:
        if bb != 0:
            roots = [Q(-c, bb)]
    else:
        disc = bb * bb - 4 * a * c
        if disc >= 0:
            sq = isqrt(disc)
            if sq * sq != disc:
                raise ValueError(f"{f} and {g} cross at an irrational β")
            roots = [Q(-bb + sq, 2 * a), Q(-bb - sq, 2 * a)]
    return sorted({x for x in roots if lo < x < hi})


@dataclass(frozen=True)
class PiecewiseFL:
    """Continuous function on (0, 1]: ``pieces[i]`` holds on ``[breakpoints[i-1], breakpoints[i]]``."""

    breakpoints: tuple[Fraction, ...]
    pieces: tuple[FL, ...]

    def __post_init__(self) -> None:
        bps = tuple(_q(b) for b in self.breakpoints)
        object.__setattr__(self, "breakpoints", bps)
        if not bps or bps[-1] != 1 or len(bps) != len(self.pieces):
            raise ValueError("breakpoints must end at 1 and match the pieces")
        prev = Q(0)
        for b in bps:
            if not prev < b:
                raise ValueError("breakpoints must increase strictly in (0, 1]")
            prev = b
        for i, b in enumerate(bps[:-1]):
            if self.pieces[i](b) != self.pieces[i + 1](b):
                raise DiscontinuityError(f"jump at β={b}: {self.pieces[i]} vs {self.pieces[i + 1]}")
        lo = Q(0)
        for f, hi in zip(self.pieces, bps):
            # denominator must not vanish on the closed piece (or at 0 for the first one)
            for x in (lo, hi):
                if f.r + f.s * x == 0 and not (x == 0 and lo == 0):
                    raise ValueError(f"{f} has a pole on its interval")
            if f.s and lo < Q(-f.r, f.s) < hi:
                raise ValueError(f"{f} has a pole on its interval")
            lo = hi

    @classmethod
    def build(cls, breakpoints: Sequence, pieces: Sequence[FL]) -> "PiecewiseFL":
        """Canonical form: adjacent identical pieces merged."""
        bps, fs = [], []
        for b, f in zip(breakpoints, pieces):
            if fs and fs[-1] == f:
                bps[-1] = _q(b)
            else:
                bps.append(_q(b))
                fs.append(f)
        return cls(tuple(bps), tuple(fs))

    @classmethod
    def const(cls, c) -> "PiecewiseFL":
        return cls((ONE,), (FL.const(c),))

    @classmethod
    def single(cls, f: FL) -> "PiecewiseFL":
        return cls((ONE,), (f,))

    def intervals(self) -> list[tuple[Fraction, Fraction, FL]]:
        lo, out = Q(0), []
        for b, f in zip(self.breakpoints, self.pieces):
            out.append((lo, b, f))
            lo = b
        return out

    def piece_at(self, beta) -> FL:
        beta = _q(beta)
        if not 0 < beta <= 1:
            raise ValueError(f"β={beta} outside (0, 1]")
        for b, f in zip(self.breakpoints, self.pieces):
            if beta <= b:
                return f
        raise AssertionError

    def __call__(self, beta) -> Fraction:
        return self.piece_at(beta)(beta)

    def __str__(self) -> str:
        out = []
        for i, (lo, hi, f) in enumerate(self.intervals()):
            left = "(" if i == 0 else "["
            out.append(f"{f} for β∈{left}{lo},{hi}]")
        return "; ".join(out)

    def to_json(self) -> dict:
        return {
            "pieces": [
                {"from": str(lo), "to": str(hi), "p": str(f.p), "q": str(f.q), "r": str(f.r), "s": str(f.s)}
                for lo, hi, f in self.intervals()
            ]
        }

    @classmethod
    def from_json(cls, doc: dict) -> "PiecewiseFL":
        ps = doc["pieces"]
        return cls.build([Q(x["to"]) for x in ps], [FL.make(*(Q(x[k]) for k in "pqrs")) for x in ps])


def piecewise_min(fs: Iterable[PiecewiseFL], cap=None) -> PiecewiseFL:
    fs = list(fs)
    if cap is not None:
        fs.append(PiecewiseFL.const(cap))
    if not fs:
        raise ValueError("minimum of no functions")
    cuts = sorted({b for f in fs for b in f.breakpoints})
    bps: list[Fraction] = []
    pieces: list[FL] = []
    lo = Q(0)
    for hi in cuts:
        mid = (lo + hi) / 2
        local = list(dict.fromkeys(f.piece_at(mid) for f in fs))
        sub = {hi}
        for i, f in enumerate(local):
            for g in local[i + 1 :]:
                sub.update(_crossings(f, g, lo, hi))
        a = lo
        for b in sorted(sub):
            m = (a + b) / 2
            best = min(local, key=lambda f: f(m))
            bps.append(b)
            pieces.append(best)
            a = b
        lo = hi
    return PiecewiseFL.build(bps, pieces)


def _numerator_nonnegative(p: Fraction, q: Fraction) -> bool:
    # p + q*b >= 0 on (0, 1]
    return p >= 0 and p + q >= 0


def dynamic_bounds(constraints: Iterable[CoeffForm]) -> list[PiecewiseFL]:
    """λ-bounds (1 - c0 - c1 b)/(c2 b) from constraints ``c0 + c1 b + c2 λ b <= 1``."""
    out = []
    for f in constraints:
        p, q = 1 - f.const, -f.beta
        if f.lambda_beta > 0:
            if not _numerator_nonnegative(p, q):
                raise DegeneratePairError(f"{f} exceeds 1 at λ=0 for some β in (0,1]")
            out.append(PiecewiseFL.single(FL.make(p, q, 0, f.lambda_beta)))
        elif f.lambda_beta == 0:
            if not _numerator_nonnegative(p, q):
                raise DegeneratePairError(f"λ-free coefficient {f} exceeds 1 on (0,1]")
        else:
            raise DegeneratePairError(f"negative λ weight in {f}")
    return out


def lct_dynamic(cfg: PairConfig) -> PiecewiseFL:
    """Largest λ making ``cfg`` log canonical, as a function of β (not capped at 1)."""
    bounds = dynamic_bounds(minimal_log_resolution(cfg).constraints())
    if not bounds:
        raise UnboundedThresholdError("no divisor carries a positive λβ weight")
    return piecewise_min(bounds)


def lct_numeric(cfg: PairConfig) -> Fraction:
    """Threshold at β = 1, where λβ becomes λ and the boundary drops out."""
    best = None
    for f in minimal_log_resolution(cfg).constraints():
        rest = f.const + f.beta
        if f.lambda_beta > 0:
            v = (1 - rest) / f.lambda_beta
            if v < 0:
                raise DegeneratePairError(f"{f} exceeds 1 at λ=0")
            best = v if best is None else min(best, v)
        elif rest > 1:
            raise DegeneratePairError(f"λ-free coefficient {f} exceeds 1")
    if best is None:
        raise UnboundedThresholdError("no divisor carries a positive λ weight")
    return best


def alpha_from_witnesses(witnesses: Iterable[PairConfig]) -> PiecewiseFL:
    return piecewise_min([lct_dynamic(w) for w in witnesses], cap=1)


def dominates(f: PiecewiseFL, g: PiecewiseFL) -> bool:
    """``f >= g`` on all of (0, 1]."""
    return piecewise_min([f, g]) == g


@dataclass(frozen=True)
class KEEInterval:
    """``(0, upper]`` if closed else ``(0, upper)``; empty when upper is 0."""

    upper: Fraction
    closed: bool

    def __str__(self) -> str:
        if self.upper == 0:
            return "∅"
        return f"(0,{self.upper}{']' if self.closed else ')'}"


def kee_interval(alpha: PiecewiseFL, threshold=Q(2, 3)) -> KEEInterval:
    """Maximal interval (0, b) or (0, b] on which alpha > threshold."""
    t = _q(threshold)
    for lo, hi, f in alpha.intervals():
        start = f(lo) if lo > 0 else None
        if start is not None and start <= t:
            return KEEInterval(lo, False)
        if f(hi) > t:
            continue
        if f.is_const:
            return KEEInterval(lo, False)
        # f is monotone on the piece, so it crosses t once in (lo, hi]
        num, den = t * f.r - f.p, f.q - t * f.s
        x = num / den if den else hi
        if lo == 0 and x <= 0:
            return KEEInterval(Q(0), False)
        return KEEInterval(x, False)
    return KEEInterval(ONE, True)
