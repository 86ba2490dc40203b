"""Minimal log resolution of weighted curve configurations.

Every divisor through a point, strict transform or exceptional, is treated
the same way: it has a coefficient, a multiplicity sequence from the current
point on, and pairwise shared depths with the other divisors there.  An
exceptional divisor is a smooth branch whose shared depth with a curve branch
counts the points of that branch lying on it, which is how proximity is
carried across blow-ups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .germs import Branch, Germ, GermError, local_intersection, validate_germ
from .lattice import DivisorClass, Lattice, SurfaceModel, arithmetic_genus, blow_up_lattice

Q = Fraction


class ConfigError(ValueError):
    pass


class BlowUpError(ValueError):
    pass


@dataclass(frozen=True)
class CoeffForm:
    """``const + beta*b + lambda_beta*l*b`` with rational parts."""

    const: Fraction = Q(0)
    beta: Fraction = Q(0)
    lambda_beta: Fraction = Q(0)

    def __post_init__(self) -> None:
        for name in ("const", "beta", "lambda_beta"):
            object.__setattr__(self, name, Q(getattr(self, name)))

    @classmethod
    def boundary(cls) -> "CoeffForm":
        return cls(1, -1, 0)

    @classmethod
    def scaled(cls, w) -> "CoeffForm":
        return cls(0, 0, w)

    @classmethod
    def plain(cls, c) -> "CoeffForm":
        return cls(c, 0, 0)

    def __add__(self, other: "CoeffForm") -> "CoeffForm":
        return CoeffForm(self.const + other.const, self.beta + other.beta, self.lambda_beta + other.lambda_beta)

    def __sub__(self, other: "CoeffForm") -> "CoeffForm":
        return self + other * -1

    def __mul__(self, k) -> "CoeffForm":
        k = Q(k)
        return CoeffForm(self.const * k, self.beta * k, self.lambda_beta * k)

    __rmul__ = __mul__

    def evaluate(self, beta, lam) -> Fraction:
        beta, lam = Q(beta), Q(lam)
        return self.const + self.beta * beta + self.lambda_beta * lam * beta

    def __str__(self) -> str:
        terms = [(self.lambda_beta, "λβ"), (self.beta, "β"), (self.const, "")]
        if self.lambda_beta == 0:
            terms = [terms[2], terms[1]]
        out = ""
        for c, sym in terms:
            if c == 0:
                continue
            mag = abs(c)
            body = (str(mag) if mag != 1 or not sym else "") + sym
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out or "0"


@dataclass(frozen=True)
class Curve:
    id: str
    cls: DivisorClass
    coeff: CoeffForm
    smooth: bool = True


@dataclass(frozen=True)
class Point:
    id: str
    germ: Germ


@dataclass(frozen=True)
class PairConfig:
    surface: SurfaceModel
    curves: tuple[Curve, ...]
    points: tuple[Point, ...] = ()
    complete: bool = False
    name: str = ""

    def curve(self, cid: str) -> Curve:
        for c in self.curves:
            if c.id == cid:
                return c
        raise ConfigError(f"unknown curve {cid!r}")

    def point(self, pid: str) -> Point:
        for p in self.points:
            if p.id == pid:
                return p
        raise ConfigError(f"unknown point {pid!r}")

    def with_coeffs(self, coeffs: dict[str, CoeffForm]) -> "PairConfig":
        curves = tuple(Curve(c.id, c.cls, coeffs.get(c.id, c.coeff), c.smooth) for c in self.curves)
        return PairConfig(self.surface, curves, self.points, self.complete, self.name)


def config_diagnostics(cfg: PairConfig) -> list[str]:
    """Every violated consistency condition, in a fixed order."""
    out: list[str] = []
    lat = cfg.surface.lattice
    ids = [c.id for c in cfg.curves]
    if len(set(ids)) != len(ids):
        out.append("duplicate curve id")
    for c in cfg.curves:
        if c.cls.lattice != lat:
            out.append(f"curve {c.id}: class is not on {cfg.surface}")
            continue
        f = c.coeff
        if f.lambda_beta < 0:
            out.append(f"curve {c.id}: negative λβ weight")
        # the λ-free part is affine in β, so checking both ends of (0,1] suffices
        for b in (Q(0), Q(1)):
            v = f.const + f.beta * b
            if v > 1:
                out.append(f"curve {c.id}: boundary coefficient {v} > 1 at β={b}")
            if v < 0:
                out.append(f"curve {c.id}: negative coefficient {v} at β={b}")
    if out:
        return out
    pids = [p.id for p in cfg.points]
    if len(set(pids)) != len(pids):
        out.append("duplicate point id")
    delta = {c.id: 0 for c in cfg.curves}
    for p in cfg.points:
        chk = validate_germ(p.germ)
        if not chk:
            out.append(f"point {p.id}: {chk.message}")
            continue
        if not p.germ.branches:
            out.append(f"point {p.id}: no branches")
        for bid, br in p.germ.branches:
            if bid not in delta:
                out.append(f"point {p.id}: branch on unknown curve {bid!r}")
                continue
            if cfg.curve(bid).smooth and not br.is_smooth:
                out.append(f"point {p.id}: curve {bid} is declared smooth but has a singular branch")
            delta[bid] += br.delta()
    if out:
        return out
    for c in cfg.curves:
        if delta[c.id] > arithmetic_genus(c.cls):
            out.append(f"curve {c.id}: singularities exceed arithmetic genus {arithmetic_genus(c.cls)}")
    for a, b in combinations(cfg.curves, 2):
        local = sum(local_intersection(p.germ, a.id, b.id) for p in cfg.points if {a.id, b.id} <= set(p.germ.ids))
        total = a.cls.dot(b.cls)
        if local > total:
            out.append(f"curves {a.id}, {b.id}: local intersections {local} exceed {a.cls}.{b.cls} = {total}")
        elif cfg.complete and local != total:
            out.append(f"curves {a.id}, {b.id}: declared local intersections {local} != {total} in a complete configuration")
    return out


def validate_config(cfg: PairConfig) -> None:
    diags = config_diagnostics(cfg)
    if diags:
        raise ConfigError("; ".join(diags))


@dataclass(frozen=True)
class LocalItem:
    name: str
    coeff: CoeffForm
    seq: tuple[int, ...]
    exceptional: bool = False

    @property
    def mult(self) -> int:
        return self.seq[0] if self.seq else 1

    def advanced(self) -> tuple[int, ...]:
        return self.seq[1:] or (1,)


@dataclass
class LocalConfig:
    """Divisors through one (possibly infinitely near) point."""

    point: str
    label: str
    items: tuple[LocalItem, ...]
    depths: dict[frozenset[str], int] = field(default_factory=dict)

    def depth(self, a: str, b: str) -> int:
        return self.depths.get(frozenset((a, b)), 1)

    def is_snc(self) -> bool:
        if any(it.mult > 1 for it in self.items):
            return False
        if len(self.items) >= 3:
            return False
        if len(self.items) == 2:
            return self.depth(self.items[0].name, self.items[1].name) == 1
        return True


def local_config(cfg: PairConfig, point_id: str) -> LocalConfig:
    p = cfg.point(point_id)
    items = tuple(LocalItem(bid, cfg.curve(bid).coeff, br.mult_sequence) for bid, br in p.germ.branches)
    depths = {frozenset((a, b)): p.germ.depth(a, b) for a, b in combinations(p.germ.ids, 2)}
    return LocalConfig(p.id, p.id, items, depths)


@dataclass(frozen=True)
class BlowUp:
    coeff: CoeffForm
    exceptional: str
    multiplicities: dict[str, int]
    children: tuple[LocalConfig, ...]


def blow_up_once(loc: LocalConfig, exceptional: str = "F") -> BlowUp:
    """Blow up the point of ``loc``; children are the next points carrying curve branches."""
    if not loc.items:
        raise BlowUpError(f"nothing passes through {loc.label}")
    coeff = CoeffForm.plain(-1)
    for it in loc.items:
        coeff = coeff + it.coeff * it.mult
    new = LocalItem(exceptional, coeff, (1,), True)
    curves = [it for it in loc.items if not it.exceptional]
    excs = [it for it in loc.items if it.exceptional]
    groups: list[list[LocalItem]] = []
    for it in curves:
        for g in groups:
            if loc.depth(g[0].name, it.name) >= 2:
                g.append(it)
                break
        else:
            groups.append([it])
    children = []
    for k, g in enumerate(groups, 1):
        depths: dict[frozenset[str], int] = {}
        for a, b in combinations(g, 2):
            depths[frozenset((a.name, b.name))] = loc.depth(a.name, b.name) - 1
        for it in g:
            depths[frozenset((it.name, exceptional))] = Branch(it.seq or (1,)).satellite_span(0)
        kept = []
        for e in excs:
            on = {loc.depth(e.name, it.name) >= 2 for it in g}
            if len(on) != 1:
                raise GermError(f"{e.name} meets the branches at {loc.label}.{k} inconsistently")
            if on.pop():
                kept.append(e)
                for it in g:
                    depths[frozenset((it.name, e.name))] = max(loc.depth(e.name, it.name) - 1, 1)
        items = tuple(LocalItem(it.name, it.coeff, it.advanced()) for it in g) + tuple(kept) + (new,)
        children.append(LocalConfig(loc.point, f"{loc.label}.{k}", items, depths))
    mults = {it.name: it.mult for it in loc.items}
    return BlowUp(coeff, exceptional, mults, tuple(children))


@dataclass(frozen=True)
class BlowUpRecord:
    label: str
    point: str
    exceptional: str
    coeff: CoeffForm
    multiplicities: dict[str, int]


@dataclass(frozen=True)
class ResolutionResult:
    config: PairConfig
    records: tuple[BlowUpRecord, ...]
    lattice: Lattice
    curve_classes: dict[str, DivisorClass]
    exceptional_classes: dict[str, DivisorClass]

    @property
    def blow_up_count(self) -> int:
        return len(self.records)

    @property
    def exceptional_coeffs(self) -> tuple[CoeffForm, ...]:
        return tuple(r.coeff for r in self.records)

    def constraints(self, at: str | None = None) -> tuple[CoeffForm, ...]:
        """Coefficients that must stay <= 1, optionally only those over one point."""
        if at is None:
            return tuple(c.coeff for c in self.config.curves) + self.exceptional_coeffs
        names = set(self.config.point(at).germ.ids)
        return tuple(c.coeff for c in self.config.curves if c.id in names) + tuple(
            r.coeff for r in self.records if r.point == at
        )


def minimal_log_resolution(cfg: PairConfig) -> ResolutionResult:
    validate_config(cfg)
    lattice = cfg.surface.lattice
    classes = {c.id: c.cls for c in cfg.curves}
    exc: dict[str, DivisorClass] = {}
    records: list[BlowUpRecord] = []
    for p in cfg.points:
        stack = [local_config(cfg, p.id)]
        while stack:
            loc = stack.pop()
            if loc.is_snc():
                continue
            name = f"F{len(records) + 1}"
            bu = blow_up_once(loc, name)
            lattice = blow_up_lattice(lattice)
            classes = {k: DivisorClass(lattice, v.coords + (bu.multiplicities.get(k, 0),)) for k, v in classes.items()}
            exc = {k: DivisorClass(lattice, v.coords + (bu.multiplicities.get(k, 0),)) for k, v in exc.items()}
            exc[name] = DivisorClass(lattice, (0,) * (lattice.rank - 1) + (-1,))
            records.append(BlowUpRecord(loc.label, p.id, name, bu.coeff, bu.multiplicities))
            stack.extend(reversed(bu.children))
    return ResolutionResult(cfg, tuple(records), lattice, classes, exc)


def is_log_canonical(cfg: PairConfig, beta, lam, at: str | None = None) -> bool:
    res = minimal_log_resolution(cfg)
    return all(f.evaluate(beta, lam) <= 1 for f in res.constraints(at))
