"""Named witness configurations and the tables they reproduce.

Every configuration lists its curves with classes and coefficients and the
points where something non-transverse happens.  Configurations built with
``complete=True`` get the remaining intersections added as transverse points,
so the declared incidences account for every class pairing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .germs import Branch, Germ, local_intersection, quasi_homogeneous_branch, smooth_branch
from .lattice import DivisorClass, SurfaceModel
from .lct import (
    FL,
    KEEInterval,
    PiecewiseFL,
    alpha_from_witnesses,
    dominates,
    kee_interval,
    lct_dynamic,
    lct_numeric,
    piecewise_min,
)
from .resolution import CoeffForm, Curve, PairConfig, Point

Q = Fraction
S = smooth_branch()
CUSP = quasi_homogeneous_branch(2, 3)


class UnknownCase(KeyError):
    pass


def lam(w) -> CoeffForm:
    return CoeffForm.scaled(w)


BOUNDARY = CoeffForm.boundary()


def pt(pid: str, branches: dict[str, Branch] | list[str], contacts: dict[tuple[str, str], int] | None = None) -> Point:
    if not isinstance(branches, dict):
        branches = {b: S for b in branches}
    return Point(pid, Germ.make(branches, contacts))


def config(
    surface: SurfaceModel,
    curves: list[tuple],
    points: list[Point] = (),
    name: str = "",
    complete: bool = True,
) -> PairConfig:
    """Curves are ``(id, class, coeff[, smooth])``; complete configs get transverse residual points."""
    cs = tuple(Curve(c[0], c[1], c[2], c[3] if len(c) > 3 else True) for c in curves)
    pts = list(points)
    if complete:
        k = 0
        for a, b in combinations(cs, 2):
            seen = sum(local_intersection(p.germ, a.id, b.id) for p in pts if {a.id, b.id} <= set(p.germ.ids))
            for _ in range(a.cls.dot(b.cls) - seen):
                k += 1
                pts.append(pt(f"t{k}", [a.id, b.id]))
    return PairConfig(surface, cs, tuple(pts), complete, name)


def anticanonical(s: SurfaceModel) -> DivisorClass:
    return -s.lattice.K


def c_itself(s: SurfaceModel) -> PairConfig:
    """The boundary curve with its own λβ multiple."""
    return config(s, [("C", anticanonical(s), BOUNDARY + lam(1))], name="C itself")


def pw(*pieces: tuple) -> PiecewiseFL:
    """``pw((b1, f1), (b2, f2), ...)`` with each f a constant or a (p, q, r, s) tuple."""
    bps, fs = [], []
    for b, f in pieces:
        bps.append(Q(b))
        fs.append(FL.make(*f) if isinstance(f, tuple) else FL.const(f))
    return PiecewiseFL.build(bps, fs)


# ---------------------------------------------------------------- surfaces

P2 = SurfaceModel.blowup(0)
F1 = SurfaceModel.blowup(1)
QUADRIC = SurfaceModel.quadric()
X = {d: SurfaceModel.of_degree(d) for d in range(1, 8)}


def _with_c(s: SurfaceModel, curves: list[tuple]) -> list[tuple]:
    return [("C", anticanonical(s), BOUNDARY)] + curves


# ---------------------------------------------------------------- degree 9

def deg9_flex_line(boundary: bool = True) -> PairConfig:
    s = P2
    curves = [("L", s.cls(1), lam(3))]
    if not boundary:
        return config(s, curves, name="3L")
    return config(s, _with_c(s, curves), [pt("p", ["C", "L"], {("C", "L"): 3})], "3L, L flex tangent to C")


# ---------------------------------------------------------------- degree 8

def deg8_quadric_rulings(boundary: bool = True) -> PairConfig:
    s = QUADRIC
    curves = [("F1", s.cls(1, 0), lam(2)), ("F2", s.cls(0, 1), lam(2))]
    if not boundary:
        return config(s, curves, name="2F1+2F2")
    return config(
        s, _with_c(s, curves), [pt("p", ["C", "F1", "F2"], {("C", "F1"): 2})], "2F1+2F2, F1 tangent to C"
    )


def deg8_f1_fibre(tangent: bool, boundary: bool = True) -> PairConfig:
    s = F1
    curves = [("F", s.plane(1, 1), lam(3)), ("E", s.E(1), lam(2))]
    if not boundary:
        return config(s, curves, name="3F+2E")
    depth = 2 if tangent else 1
    return config(
        s, _with_c(s, curves), [pt("r", ["C", "F", "E"], {("C", "F"): depth})], f"3F+2E at r in C∩E, (F.C)_r={depth}"
    )


# ---------------------------------------------------------------- degree 7

def deg7_base(pseudo_eckardt: bool, boundary: bool = True) -> PairConfig:
    s = X[7]
    curves = [("L", s.plane(1, 1, 2), lam(3)), ("E1", s.E(1), lam(2)), ("E2", s.E(2), lam(2))]
    if not boundary:
        return config(s, curves, name="3L+2E1+2E2")
    pts = [pt("p", ["C", "L", "E1"])] if pseudo_eckardt else []
    return config(s, _with_c(s, curves), pts, "3L+2E1+2E2" + (", C through L∩E1" if pseudo_eckardt else ""))


def deg7_tangent_conic(depth: int = 2) -> PairConfig:
    s = X[7]
    curves = [("L1", s.plane(1, 1), lam(2)), ("E1", s.E(1), lam(2)), ("L", s.plane(1, 1, 2), lam(1))]
    return config(
        s, _with_c(s, curves), [pt("r", ["C", "L1", "E1"], {("C", "L1"): depth})], f"2L1+2E1+L, (L1.C)_r={depth}"
    )


def deg7_flex_line(depth: int = 3) -> PairConfig:
    s = X[7]
    curves = [("L", s.plane(1, 1, 2), lam(1)), ("R", s.plane(1), lam(2))]
    return config(s, _with_c(s, curves), [pt("r", ["C", "L", "R"], {("C", "R"): depth})], f"L+2R, (R.C)_r={depth}")


# ---------------------------------------------------------------- degree 6

def deg6_base(pseudo_eckardt: bool, boundary: bool = True) -> PairConfig:
    s = X[6]
    curves = [
        ("E1", s.E(1), lam(2)),
        ("L12", s.plane(1, 1, 2), lam(2)),
        ("L13", s.plane(1, 1, 3), lam(1)),
        ("E2", s.E(2), lam(1)),
    ]
    if not boundary:
        return config(s, curves, name="2E1+2L12+L13+E2")
    pts = [pt("p", ["C", "E1", "L12"])] if pseudo_eckardt else []
    return config(s, _with_c(s, curves), pts, "2E1+2L12+L13+E2" + (", C through E1∩L12" if pseudo_eckardt else ""))


def deg6_tangent_line(depth: int = 2) -> PairConfig:
    s = X[6]
    curves = [("Lq", s.plane(1, 1), lam(2)), ("L23", s.plane(1, 2, 3), lam(1)), ("E1", s.E(1), lam(1))]
    return config(
        s, _with_c(s, curves), [pt("p", ["C", "Lq", "E1"], {("C", "Lq"): depth})], f"2Lq+L23+E1, (Lq.C)_p={depth}"
    )


# ---------------------------------------------------------------- degree 5

def deg5_base(boundary: bool = True) -> PairConfig:
    s = X[5]
    curves = [
        ("E1", s.E(1), lam(2)),
        ("L12", s.plane(1, 1, 2), lam(1)),
        ("L13", s.plane(1, 1, 3), lam(1)),
        ("L14", s.plane(1, 1, 4), lam(1)),
    ]
    if not boundary:
        return config(s, curves, name="2E1+L12+L13+L14")
    return config(s, _with_c(s, curves), [], "2E1+L12+L13+L14")


# ---------------------------------------------------------------- degree 4

def deg4_triple_point(on_c: bool, boundary: bool = True) -> PairConfig:
    s = X[4]
    curves = [("E1", s.E(1), lam(1)), ("L12", s.plane(1, 1, 2), lam(1)), ("A2", s.plane(2, 1, 3, 4, 5), lam(1))]
    if not boundary:
        return config(s, curves, [pt("p", ["E1", "L12", "A2"])], "E1+L12+A2 through one point")
    names = ["C", "E1", "L12", "A2"] if on_c else ["E1", "L12", "A2"]
    return config(s, _with_c(s, curves), [pt("p", names)], "E1+L12+A2" + (", C through the triple point" if on_c else ""))


def deg4_tangent_conics(tangent_to_c: bool = True) -> PairConfig:
    s = X[4]
    curves = [("A1", s.plane(2, 2, 3, 4, 5), lam(1)), ("B1", s.plane(1, 1), lam(1))]
    d = 2 if tangent_to_c else 1
    return config(
        s,
        _with_c(s, curves),
        [pt("q", ["C", "A1", "B1"], {("A1", "B1"): 2, ("C", "A1"): d, ("C", "B1"): d})],
        f"A1+B1 tangent at q, (C.A1)_q={d}",
    )


# ---------------------------------------------------------------- degrees 3, 2, 1

def cusp_curve(s: SurfaceModel, contact: int | None, boundary: bool = True) -> PairConfig:
    """Cuspidal anticanonical curve; ``contact`` is the shared depth with C at the cusp (None: C avoids it)."""
    curves = [("T", anticanonical(s), lam(1), False)]
    if not boundary:
        return config(s, curves, [pt("p", {"T": CUSP})], "cuspidal T")
    if contact is None:
        return config(s, _with_c(s, curves), [pt("p", {"T": CUSP})], "cuspidal T, C off the cusp")
    pts = [pt("p", {"T": CUSP, "C": S}, {("T", "C"): contact})]
    return config(s, _with_c(s, curves), pts, f"cuspidal T, C through the cusp with depth {contact}")


def tacnode_pair(s: SurfaceModel, through: bool, boundary: bool = True) -> PairConfig:
    """E1 and the residual curve -K-E1 meeting with contact 2 at one point."""
    e = s.E(1)
    curves = [("L", e, lam(1)), ("M", anticanonical(s) - e, lam(1))]
    if not boundary:
        return config(s, curves, [pt("p", ["L", "M"], {("L", "M"): 2})], "tacnode L+M")
    names = ["L", "M", "C"] if through else ["L", "M"]
    return config(
        s,
        _with_c(s, curves),
        [pt("p", names, {("L", "M"): 2})],
        "tacnode L+M" + (", C through it" if through else ", C off it"),
    )


def eckardt_lines(on_c: bool, boundary: bool = True) -> PairConfig:
    s = X[3]
    curves = [("E1", s.E(1), lam(1)), ("L12", s.plane(1, 1, 2), lam(1)), ("A", s.plane(2, 1, 3, 4, 5, 6), lam(1))]
    if not boundary:
        return config(s, curves, [pt("p", ["E1", "L12", "A"])], "three lines through an Eckardt point")
    names = ["C", "E1", "L12", "A"] if on_c else ["E1", "L12", "A"]
    return config(s, _with_c(s, curves), [pt("p", names)], "Eckardt lines" + (", C through the point" if on_c else ""))


# ---------------------------------------------------------------- α table

@dataclass(frozen=True)
class AlphaRow:
    degree: int
    variant: str
    case: str
    label: str
    description: str
    expected: PiecewiseFL
    printed_kee: str
    build: Callable[[], list[PairConfig]]

    @property
    def tag(self) -> str:
        return f"{self.variant}/{self.case}"

    def surface(self) -> SurfaceModel:
        return QUADRIC if self.variant == "quadric" else SurfaceModel.of_degree(self.degree)

    def witnesses(self) -> list[PairConfig]:
        return [c_itself(self.surface())] + self.build()


def _deg3(*names: str) -> Callable[[], list[PairConfig]]:
    s = X[3]
    table = {
        "cusp-snc": lambda: cusp_curve(s, None),
        "cusp-normal2": lambda: cusp_curve(s, 1),
        "cusp-normal3": lambda: cusp_curve(s, 2),
        "tacnode-snc": lambda: tacnode_pair(s, False),
        "tacnode-normal": lambda: tacnode_pair(s, True),
        "3-lines": lambda: eckardt_lines(False),
        "4-lines": lambda: eckardt_lines(True),
    }
    return lambda: [table[n]() for n in names]


def _deg2(*names: str) -> Callable[[], list[PairConfig]]:
    s = X[2]
    table = {
        "cusp-snc": lambda: cusp_curve(s, None),
        "cusp-normal2": lambda: cusp_curve(s, 1),
        "tacnode-snc": lambda: tacnode_pair(s, False),
        "tacnode-normal": lambda: tacnode_pair(s, True),
    }
    return lambda: [table[n]() for n in names]


_D3_BASE = ("cusp-snc", "cusp-normal2", "tacnode-snc")
_D3_ALL = _D3_BASE + ("cusp-normal3", "tacnode-normal")

ALPHA_ROWS: tuple[AlphaRow, ...] = (
    AlphaRow(9, "generic", "generic", "ω", "C has a flex point", pw((Q(1, 6), 1), (Q(2, 3), (1, 3, 0, 9)), (1, (1, 0, 0, 3))), "(0,1/3)", lambda: [deg9_flex_line()]),
    AlphaRow(8, "quadric", "generic", "ω", "P1xP1", pw((Q(1, 4), 1), (1, (1, 2, 0, 6))), "(0,1/2)", lambda: [deg8_quadric_rulings()]),
    AlphaRow(8, "f1", "tangent", "ω2", "F1, the fibre through C∩E is tangent to C", pw((Q(1, 6), 1), (Q(5, 6), (1, 2, 0, 8)), (1, (1, 0, 0, 3))), "(0,3/10)", lambda: [deg8_f1_fibre(True)]),
    AlphaRow(8, "f1", "generic", "ω1", "F1, the fibre through C∩E is transverse to C", pw((Q(1, 4), 1), (Q(2, 3), (1, 1, 0, 5)), (1, (1, 0, 0, 3))), "(0,3/7)", lambda: [deg8_f1_fibre(False)]),
    AlphaRow(7, "generic", "pseudo-eckardt", "ω4", "C contains the intersection of two lines", pw((Q(1, 4), 1), (Q(2, 3), (1, 1, 0, 5)), (1, (1, 0, 0, 3))), "(0,3/10)", lambda: [deg7_base(True)]),
    AlphaRow(7, "generic", "tangent-conic", "ω3", "C is tangent to a conic through C∩E1", pw((Q(1, 4), 1), (Q(1, 2), (1, 2, 0, 6)), (1, (1, 0, 0, 3))), "(0,1/2)", lambda: [deg7_base(False), deg7_tangent_conic()]),
    AlphaRow(7, "generic", "flex-line", "ω2", "C has a flex tangent plane line", pw((Q(1, 4), 1), (Q(4, 9), (1, 3, 0, 7)), (1, (1, 0, 0, 3))), "(0,1/2)", lambda: [deg7_base(False), deg7_flex_line()]),
    AlphaRow(7, "generic", "generic", "ω1", "none of the above", pw((Q(1, 3), 1), (1, (1, 0, 0, 3))), "(0,1/2)", lambda: [deg7_base(False)]),
    AlphaRow(6, "generic", "pseudo-eckardt", "ω3", "C contains the intersection of two lines", pw((Q(1, 3), 1), (1, (1, 1, 0, 4))), "(0,3/5)", lambda: [deg6_base(True)]),
    AlphaRow(6, "generic", "tangent-conic", "ω2", "C is tangent to a conic through C∩E1", pw((Q(1, 3), 1), (Q(3, 4), (1, 2, 0, 5)), (1, (1, 0, 0, 2))), "(0,3/4)", lambda: [deg6_base(False), deg6_tangent_line()]),
    AlphaRow(6, "generic", "generic", "ω1", "none of the above", pw((Q(1, 2), 1), (1, (1, 0, 0, 2))), "(0,3/4)", lambda: [deg6_base(False)]),
    AlphaRow(5, "generic", "generic", "ω", "any C", pw((Q(1, 2), 1), (1, (1, 0, 0, 2))), "(0,3/4)", lambda: [deg5_base()]),
    AlphaRow(4, "generic", "pseudo-eckardt", "ω3", "C contains the intersection of two lines", pw((Q(1, 2), 1), (1, (1, 1, 0, 3))), "(0,1)", lambda: [deg4_triple_point(False), deg4_triple_point(True)]),
    AlphaRow(4, "generic", "tangent-conics", "ω2", "C is tangent to two conics at one point", pw((Q(1, 2), 1), (Q(5, 6), (1, 2, 0, 4)), (1, (2, 0, 0, 3))), "(0,1)", lambda: [deg4_triple_point(False), deg4_tangent_conics()]),
    AlphaRow(4, "generic", "generic", "ω1", "none of the above", pw((Q(2, 3), 1), (1, (2, 0, 0, 3))), "(0,1)", lambda: [deg4_triple_point(False)]),
    AlphaRow(3, "no-eckardt", "tacnode", "ω3", "C passes through a tacnode of a tacnodal curve", pw((Q(2, 3), 1), (1, (2, 1, 0, 4))), "(0,1)", _deg3(*_D3_ALL)),
    AlphaRow(3, "no-eckardt", "cusp-contact3", "ω2", "C meets a cuspidal curve at its cusp with contact 3", pw((Q(2, 3), 1), (Q(5, 6), (2, 3, 0, 6)), (1, (3, 0, 0, 4))), "(0,1]", _deg3(*_D3_BASE, "cusp-normal3")),
    AlphaRow(3, "no-eckardt", "generic", "ω1", "none of the above", pw((Q(3, 4), 1), (1, (3, 0, 0, 4))), "(0,1]", _deg3(*_D3_BASE)),
    AlphaRow(3, "eckardt", "eckardt-point", "ω5", "C passes through an Eckardt point", pw((Q(1, 2), 1), (1, (1, 1, 0, 3))), "(0,1]", _deg3(*_D3_ALL, "3-lines", "4-lines")),
    AlphaRow(3, "eckardt", "generic", "ω4", "C avoids the Eckardt points", pw((Q(2, 3), 1), (1, (2, 0, 0, 3))), "(0,1]", _deg3(*_D3_ALL, "3-lines")),
    AlphaRow(2, "no-tacnode", "cusp", "ω2", "C passes through the cusp of a cuspidal curve", pw((Q(3, 4), 1), (1, (3, 2, 0, 6))), "(0,1]", _deg2("cusp-snc", "cusp-normal2")),
    AlphaRow(2, "no-tacnode", "generic", "ω1", "none of the above", pw((Q(5, 6), 1), (1, (5, 0, 0, 6))), "(0,1]", _deg2("cusp-snc")),
    AlphaRow(2, "tacnode", "tacnode", "ω4", "C passes through a tacnode", pw((Q(2, 3), 1), (1, (2, 1, 0, 4))), "(0,1]", _deg2("tacnode-normal", "cusp-normal2")),
    AlphaRow(2, "tacnode", "generic", "ω3", "C avoids the tacnodes", pw((Q(3, 4), 1), (1, (3, 0, 0, 4))), "(0,1]", _deg2("tacnode-snc", "cusp-normal2")),
    AlphaRow(1, "cusp", "generic", "ω2", "|-K| contains a cuspidal curve", pw((Q(5, 6), 1), (1, (5, 0, 0, 6))), "(0,1]", lambda: [cusp_curve(X[1], None)]),
    AlphaRow(1, "no-cusp", "generic", "ω1", "|-K| has no cuspidal curves", pw((1, 1)), "(0,1]", lambda: []),
)


def alpha_cases(degree: int) -> list[str]:
    return [r.tag for r in ALPHA_ROWS if r.degree == degree]


def alpha_row(degree: int, tag: str) -> AlphaRow:
    rows = [r for r in ALPHA_ROWS if r.degree == degree]
    for r in rows:
        if tag == r.tag:
            return r
    # short forms: the case alone when the variant is "generic", or a variant with one case
    short = [r for r in rows if (r.variant == "generic" and r.case == tag)]
    short += [r for r in rows if r.variant == tag and sum(x.variant == tag for x in rows) == 1]
    short = list(dict.fromkeys(short))
    if len(short) == 1:
        return short[0]
    raise UnknownCase(f"degree {degree} has cases: {', '.join(alpha_cases(degree)) or 'none'}")


def alpha_witnesses(degree: int, variant: str, case: str) -> list[PairConfig]:
    return alpha_row(degree, f"{variant}/{case}").witnesses()


# ---------------------------------------------------------------- glct table

@dataclass(frozen=True)
class GlctCase:
    degree: int
    variant: str
    expected: Fraction
    build: Callable[[], list[PairConfig]]


GLCT_CASES: tuple[GlctCase, ...] = (
    GlctCase(9, "generic", Q(1, 3), lambda: [deg9_flex_line(False)]),
    GlctCase(8, "f1", Q(1, 3), lambda: [deg8_f1_fibre(False, False)]),
    GlctCase(8, "quadric", Q(1, 2), lambda: [deg8_quadric_rulings(False)]),
    GlctCase(7, "generic", Q(1, 3), lambda: [deg7_base(False, False)]),
    GlctCase(6, "generic", Q(1, 2), lambda: [deg6_base(False, False)]),
    GlctCase(5, "generic", Q(1, 2), lambda: [deg5_base(False)]),
    GlctCase(4, "generic", Q(2, 3), lambda: [deg4_triple_point(False, False)]),
    GlctCase(3, "eckardt", Q(2, 3), lambda: [eckardt_lines(False, False), tacnode_pair(X[3], False, False), cusp_curve(X[3], None, False)]),
    GlctCase(3, "no-eckardt", Q(3, 4), lambda: [tacnode_pair(X[3], False, False), cusp_curve(X[3], None, False)]),
    GlctCase(2, "tacnode", Q(3, 4), lambda: [tacnode_pair(X[2], False, False), cusp_curve(X[2], None, False)]),
    GlctCase(2, "no-tacnode", Q(5, 6), lambda: [cusp_curve(X[2], None, False)]),
    GlctCase(1, "cusp", Q(5, 6), lambda: [cusp_curve(X[1], None, False)]),
    GlctCase(1, "no-cusp", Q(1), lambda: []),
)


def glct_case(degree: int, variant: str) -> GlctCase:
    for c in GLCT_CASES:
        if c.degree == degree and c.variant == variant:
            return c
    valid = [c.variant for c in GLCT_CASES if c.degree == degree]
    raise UnknownCase(f"degree {degree} has glct cases: {', '.join(valid) or 'none'}")


def glct_witnesses(degree: int, variant: str) -> tuple[list[PairConfig], Fraction]:
    c = glct_case(degree, variant)
    return c.build(), c.expected


def glct_value(witnesses: list[PairConfig]) -> Fraction:
    return min([lct_numeric(w) for w in witnesses], default=Q(1))


# ---------------------------------------------------------------- local lemmas

@dataclass(frozen=True)
class Lemma:
    """``kind``: "equal" (lct_dynamic == target), "capped" (min(1, lct) == target) or "lc" (lct >= target)."""

    name: str
    kind: str
    target: PiecewiseFL
    build: Callable[[], PairConfig]
    note: str = ""

    def check(self) -> bool:
        f = lct_dynamic(self.build())
        if self.kind == "equal":
            return f == self.target
        if self.kind == "capped":
            return piecewise_min([f], cap=1) == self.target
        return dominates(f, self.target)


def _plane(curves: list[tuple], points: list[Point], name: str) -> Callable[[], PairConfig]:
    return lambda: config(P2, curves, points, name, complete=False)


_C = ("C", P2.cls(3), BOUNDARY)
_T = ("T", P2.cls(3), lam(1), False)
_L, _M = ("L", P2.cls(1), lam(1)), ("M", P2.cls(2), lam(1))
_LINES = [(f"L{i}", P2.cls(1), lam(1)) for i in (1, 2, 3)]


def _omega(degree: int, tag: str) -> PiecewiseFL:
    return alpha_row(degree, tag).expected


def _min1(*fs: tuple) -> PiecewiseFL:
    return piecewise_min([PiecewiseFL.single(FL.make(*f)) for f in fs], cap=1)


def _on(s: SurfaceModel, curves: list[tuple], points: list[Point], name: str) -> Callable[[], PairConfig]:
    return lambda: config(s, _with_c(s, curves), points, name)


def _lemmas() -> tuple[Lemma, ...]:
    s7, s6, s5, s4 = X[7], X[6], X[5], X[4]
    w = lam
    out = [
        Lemma("cusp-snc", "equal", pw((1, (5, 0, 0, 6))), _plane([_C, _T], [pt("p", {"T": CUSP})], "cusp, C off it")),
        Lemma("cusp-normal2", "equal", pw((1, (3, 2, 0, 6))), _plane([_C, _T], [pt("p", {"T": CUSP, "C": S})], "cusp, C transverse")),
        Lemma("cusp-normal3", "equal", pw((1, (2, 3, 0, 6))), _plane([_C, _T], [pt("p", {"T": CUSP, "C": S}, {("T", "C"): 2})], "cusp, C with contact 3")),
        Lemma("tacnode-snc", "equal", pw((1, (3, 0, 0, 4))), _plane([_C, _L, _M], [pt("p", ["L", "M"], {("L", "M"): 2})], "tacnode, C off it")),
        Lemma("tacnode-normal", "equal", pw((1, (2, 1, 0, 4))), _plane([_C, _L, _M], [pt("p", ["L", "M", "C"], {("L", "M"): 2})], "tacnode, C transverse")),
        Lemma("3-lines", "equal", pw((1, (2, 0, 0, 3))), _plane([_C] + _LINES, [pt("p", ["L1", "L2", "L3"])], "three concurrent lines")),
        Lemma("4-lines", "equal", pw((1, (1, 1, 0, 3))), _plane([_C] + _LINES, [pt("p", ["L1", "L2", "L3", "C"])], "three concurrent lines and C")),
        Lemma("f1-flex", "lc", _omega(8, "f1/generic"), _on(F1, [("H", F1.plane(1), w(2)), ("Lp", F1.plane(1, 1), w(1))], [pt("p", ["C", "H", "Lp"], {("C", "H"): 3})], "2H+Lp, H flex")),
        Lemma("deg7-lct1", "lc", _omega(7, "generic"), _on(s7, [("H1", s7.plane(1, 1), w(1)), ("H2", s7.plane(1, 2), w(1)), ("H", s7.plane(1), w(1))], [pt("q", ["C", "H1", "H2", "H"], {("C", "H"): 3})], "H1+H2+H, H flex")),
        Lemma("deg7-lct2", "lc", _omega(7, "generic"), _on(s7, [("H1", s7.plane(1, 1), w(2)), ("H2", s7.plane(1, 2), w(1)), ("E1", s7.E(1), w(1))], [pt("q", ["C", "H1", "H2"], {("C", "H1"): 2})], "2H1+H2+E1, H1 tangent")),
        Lemma("deg7-lct3", "lc", _omega(7, "generic"), _on(s7, [("H", s7.plane(1), w(2)), ("L", s7.plane(1, 1, 2), w(1))], [pt("q", ["C", "H"], {("C", "H"): 3})], "2H+L, H flex")),
        Lemma("deg7-lct5-flex", "lc", _omega(7, "flex-line"), lambda: deg7_flex_line(3)),
        Lemma("deg7-lct5-tangent", "lc", _omega(7, "generic"), lambda: deg7_flex_line(2)),
        Lemma("deg7-lct6-tangent", "lc", _omega(7, "tangent-conic"), lambda: deg7_tangent_conic(2)),
        Lemma("deg7-lct6-transverse", "lc", _omega(7, "generic"), lambda: deg7_tangent_conic(1)),
        Lemma("deg6-lct0", "lc", _omega(6, "generic"), _on(s6, [("L13", s6.plane(1, 1, 3), w(1)), ("L2", s6.plane(1, 2), w(2)), ("E2", s6.E(2), w(1))], [pt("q", ["C", "L2"], {("C", "L2"): 2})], "L13+2L2+E2, L2 tangent")),
        Lemma("deg6-lct1", "lc", _omega(6, "generic"), _on(s6, [(f"B{i}", s6.plane(1, i), w(1)) for i in (1, 2, 3)], [pt("q", ["C", "B1", "B2", "B3"], {("C", "B1"): 2})], "B1+B2+B3 concurrent, B1 tangent")),
        Lemma("deg6-lct2", "lc", _omega(6, "generic"), _on(s6, [("G", s6.plane(2, 1, 2, 3), w(1)), ("H", s6.plane(1), w(1))], [pt("q", ["C", "G", "H"], {("G", "H"): 2, ("C", "G"): 2, ("C", "H"): 3})], "G+H, H flex")),
        Lemma("deg6-lct3-conic", "lc", _omega(6, "generic"), _on(s6, [("E1", s6.E(1), w(1)), ("Lq", s6.plane(1, 1), w(1)), ("Cq", s6.plane(2, 1, 2, 3), w(1))], [pt("q", ["C", "E1", "Lq", "Cq"], {("C", "Cq"): 2})], "E1+Lq+Cq, Cq tangent")),
        Lemma("deg6-lct3-line", "lc", _omega(6, "generic"), _on(s6, [("E1", s6.E(1), w(1)), ("Lq", s6.plane(1, 1), w(1)), ("Cq", s6.plane(2, 1, 2, 3), w(1))], [pt("q", ["C", "E1", "Lq", "Cq"], {("C", "Lq"): 2})], "E1+Lq+Cq, Lq tangent")),
        Lemma("deg6-lct4", "lc", _omega(6, "tangent-conic"), lambda: deg6_tangent_line(2)),
        Lemma("deg6-lct5", "lc", _omega(6, "generic"), _on(s6, [("Lq", s6.plane(1, 1), w(1)), ("L12", s6.plane(1, 1, 2), w(1)), ("L13", s6.plane(1, 1, 3), w(1)), ("E1", s6.E(1), w(2))], [pt("q", ["C", "Lq", "E1"], {("C", "Lq"): 2})], "Lq+L12+L13+2E1, Lq tangent")),
    ]
    # degree 5: A = (2;1,1,1,1), B_i = H - E_i, R = H, R_i = 2H - sum_{j != i} E_j
    A = s5.plane(2, 1, 2, 3, 4)
    B = {i: s5.plane(1, i) for i in range(1, 5)}
    R = s5.plane(1)
    Ri = {i: s5.plane(2, *[j for j in range(1, 5) if j != i]) for i in range(1, 5)}
    half, third = Q(1, 2), Q(1, 3)
    om5 = _omega(5, "generic")
    out += [
        Lemma("deg5-lemma", "lc", om5, _on(s5, [("A", A, w(1)), ("B1", B[1], w(1)), ("E1", s5.E(1), w(1))], [pt("q", ["C", "A", "B1", "E1"], {("C", "B1"): 2})], "A+B1+E1, B1 tangent"),
              "the stated bound min(1, 2/(3β)) is discontinuous at 1/2; checked at min(1, 1/(2β))"),
        Lemma("deg5-case1", "lc", om5, _on(s5, [(f"B{i}", B[i], w(half)) for i in range(1, 5)] + [("A", A, w(half))], [pt("q", ["C", "B1", "B2", "B3", "B4", "A"], {("C", "B1"): 2})], "(B1+..+B4+A)/2, B1 tangent")),
        Lemma("deg5-case1a", "lc", om5, _on(s5, [(f"R{i}", Ri[i], w(third)) for i in range(1, 5)] + [("R", R, w(third))],
              [pt("q", ["C", "R", "R1", "R2", "R3", "R4"], {**{(a, b): 2 for a, b in combinations(["C", "R", "R1", "R2", "R3", "R4"], 2)}, ("C", "R"): 3})], "(R+R1+..+R4)/3, R flex")),
        Lemma("deg5-case1b", "lc", om5, _on(s5, [("R1", Ri[1], w(1)), ("B1", B[1], w(1))], [pt("q", ["C", "R1", "B1"], {("C", "R1"): 3, ("C", "B1"): 2, ("R1", "B1"): 2})], "R1+B1")),
        Lemma("deg5-case2", "lc", om5, _on(s5, [("A", A, w(1)), ("B1", B[1], w(1)), ("E1", s5.E(1), w(1))], [pt("q", ["C", "A", "B1", "E1"], {("C", "A"): 2})], "A+B1+E1, A tangent")),
        Lemma("deg5-case2a", "lc", om5, _on(s5, [("E1", s5.E(1), w(half))] + [(f"R{i}", Ri[i], w(half)) for i in (2, 3, 4)],
              [pt("q", ["C", "E1", "R2", "R3", "R4"], {("C", "R2"): 3, ("C", "R3"): 2, ("C", "R4"): 2, ("R2", "R3"): 2, ("R2", "R4"): 2, ("R3", "R4"): 2})], "E1/2+(R2+R3+R4)/2, R2 flex")),
    ]
    # degree 4: lines E_i, L_ij, C0 = (2;1^5); conics B_i, A_i; cubics Q_i, R_ijk
    om4 = _omega(4, "generic")
    E1 = s4.E(1)
    B1, A = s4.plane(1, 1), {i: s4.plane(2, *[j for j in range(1, 6) if j != i]) for i in range(1, 6)}
    C0 = s4.plane(2, 1, 2, 3, 4, 5)
    Q1 = s4.plane(3, 1, 1, 2, 3, 4, 5)
    Q5 = s4.plane(3, 1, 2, 3, 4, 5, 5)
    Rijk = {k: s4.plane(2, 1, k, 5) for k in (2, 3, 4)}
    fifth = Q(1, 5)
    out += [
        Lemma("deg4-lct1", "capped", om4, lambda: deg4_triple_point(False)),
        Lemma("deg4-lct2-tangent", "capped", _min1((1, 2, 0, 4)), lambda: deg4_tangent_conics(True)),
        Lemma("deg4-lct2-transverse", "lc", om4, lambda: deg4_tangent_conics(False),
              "the threshold is min(1, (2+β)/(4β)), not the constant 1 stated for this case"),
        Lemma("deg4-lct3", "capped", _omega(4, "pseudo-eckardt"), lambda: deg4_triple_point(True)),
        Lemma("deg4-lct3-tangent", "capped", _omega(4, "pseudo-eckardt"), _on(s4, [("E1", E1, w(1)), ("L12", s4.plane(1, 1, 2), w(1)), ("Q", A[2], w(1))], [pt("p", ["C", "E1", "L12", "Q"], {("C", "Q"): 2})], "E1+L12+A2 through p, A2 tangent to C")),
        Lemma("deg4-lct4", "lc", om4, lambda: cusp_curve(s4, 2)),
        Lemma("deg4-lct5", "lc", om4, _on(s4, [("B1", B1, w(third))] + [(f"A{i}", A[i], w(third)) for i in (2, 3, 4, 5)] + [("E1", E1, w(2 * third))],
              [pt("q", ["C", "B1", "A2", "A3", "A4", "A5", "E1"], {("C", "B1"): 2})], "G with B1 tangent")),
        Lemma("deg4-lct6-tangent", "lc", om4, _on(s4, [("Q1", Q1, w(1)), ("E1", E1, w(1))], [pt("q", ["C", "Q1", "E1"], {("Q1", "E1"): 2})], "Q1+E1, Q1 tangent to E1")),
        Lemma("deg4-lct6-flex", "lc", om4, _on(s4, [("Q1", Q1, w(1)), ("E1", E1, w(1))], [pt("q", ["C", "Q1", "E1"], {("C", "Q1"): 3})], "Q1+E1, contact 3 with C")),
        Lemma("deg4-lct7", "lc", om4, _on(s4, [("C0", C0, w(half))] + [(f"L1{j}", s4.plane(1, 1, j), w(half)) for j in (2, 3, 4, 5)] + [("E1", E1, w(3 * half))],
              [pt("q", ["C", "E1", "C0"])], "B through E1∩C0")),
        Lemma("deg4-lct8", "lc", om4, _on(s4, [("A5", A[5], w(3 * fifth))] + [(f"R1{k}5", Rijk[k], w(fifth)) for k in (2, 3, 4)] + [("Q5", Q5, w(fifth)), ("E1", E1, w(2 * fifth))],
              [pt("q", ["C", "A5", "R125", "R135", "R145", "Q5", "E1"],
                  {**{(a, b): 2 for a, b in combinations(["C", "A5", "R125", "R135", "R145", "Q5"], 2)}, ("C", "Q5"): 3})], "H with Q5 flex")),
    ]
    return tuple(out)


LEMMAS = _lemmas()


# ---------------------------------------------------------------- tables

@dataclass(frozen=True)
class RowResult:
    row: AlphaRow
    computed: PiecewiseFL
    kee: KEEInterval

    @property
    def matches(self) -> bool:
        return self.computed == self.row.expected

    @property
    def kee_agrees(self) -> bool:
        return str(self.kee) == self.row.printed_kee


def evaluate_row(row: AlphaRow) -> RowResult:
    a = alpha_from_witnesses(row.witnesses())
    return RowResult(row, a, kee_interval(a))


def emit_tables(fmt: str = "md") -> str:
    results = [evaluate_row(r) for r in ALPHA_ROWS]
    if fmt == "json":
        doc = [
            {
                "degree": r.row.degree,
                "variant": r.row.variant,
                "case": r.row.case,
                "label": r.row.label,
                "description": r.row.description,
                "alpha": r.computed.to_json(),
                "kee": str(r.kee),
                "printed_kee": r.row.printed_kee,
                "matches": r.matches,
            }
            for r in results
        ]
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if fmt not in ("md", "markdown"):
        raise ValueError(f"unknown format {fmt!r}")
    lines = []
    for d in range(9, 0, -1):
        rows = [r for r in results if r.row.degree == d]
        lines += [f"## Degree {d}", "", "| surface | case | | α(S,(1-β)C) | α > 2/3 | printed |", "|---|---|---|---|---|---|"]
        for r in rows:
            note = "" if r.kee_agrees else " (differs)"
            lines.append(
                f"| {r.row.variant} | {r.row.description} | {r.row.label} | {r.computed} | {r.kee} | {r.row.printed_kee}{note} |"
            )
        lines.append("")
    return "\n".join(lines)
