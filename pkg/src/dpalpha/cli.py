"""Command-line front end and JSON configuration format."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import catalog
from .curves import enumerate_classes, enumerate_lines
from .germs import Branch, Germ, GermError, quasi_homogeneous_branch, smooth_branch
from .lattice import SurfaceModel
from .lct import DegeneratePairError, UnboundedThresholdError, lct_dynamic, lct_numeric
from .resolution import CoeffForm, ConfigError, Curve, PairConfig, Point, minimal_log_resolution


class SchemaError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _rational(v: Any, path: str) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise SchemaError(path, f"expected an integer or a 'p/q' string, got {v!r}")
    try:
        return Fraction(v)
    except (ValueError, ZeroDivisionError):
        raise SchemaError(path, f"not a rational: {v!r}") from None


def _int(v: Any, path: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise SchemaError(path, f"expected an integer, got {v!r}")
    return v


def _get(d: Any, key: str, path: str, default: Any = ...) -> Any:
    if not isinstance(d, dict):
        raise SchemaError(path, "expected an object")
    if key not in d:
        if default is ...:
            raise SchemaError(f"{path}.{key}", "missing")
        return default
    return d[key]


def _list(v: Any, path: str) -> list:
    if not isinstance(v, list):
        raise SchemaError(path, "expected a list")
    return v


def parse_surface(doc: Any, path: str = "surface") -> SurfaceModel:
    kind = _get(doc, "kind", path)
    if kind == "quadric":
        return SurfaceModel.quadric()
    if kind == "blowup":
        n = _int(_get(doc, "n", path), f"{path}.n")
        if not 0 <= n <= 8:
            raise SchemaError(f"{path}.n", "must be in 0..8")
        return SurfaceModel.blowup(n)
    raise SchemaError(f"{path}.kind", f"expected 'blowup' or 'quadric', got {kind!r}")


def parse_branch(doc: Any, path: str) -> tuple[str, Branch]:
    curve = _get(doc, "curve", path)
    if not isinstance(curve, str):
        raise SchemaError(f"{path}.curve", "expected a curve id")
    kind = _get(doc, "type", path, "smooth")
    if kind == "smooth":
        return curve, smooth_branch()
    if kind == "quasi_homogeneous":
        m = _int(_get(doc, "m", path), f"{path}.m")
        n = _int(_get(doc, "n", path), f"{path}.n")
        try:
            return curve, quasi_homogeneous_branch(m, n)
        except GermError as exc:
            raise SchemaError(path, str(exc)) from None
    raise SchemaError(f"{path}.type", f"expected 'smooth' or 'quasi_homogeneous', got {kind!r}")


def parse_config(doc: Any) -> PairConfig:
    s = parse_surface(_get(doc, "surface", "$"), "$.surface")
    curves = []
    for i, c in enumerate(_list(_get(doc, "curves", "$"), "$.curves")):
        p = f"$.curves[{i}]"
        cid = _get(c, "id", p)
        if not isinstance(cid, str):
            raise SchemaError(f"{p}.id", "expected a string")
        coords = [_int(x, f"{p}.class[{k}]") for k, x in enumerate(_list(_get(c, "class", p), f"{p}.class"))]
        if len(coords) != s.lattice.rank:
            raise SchemaError(f"{p}.class", f"expected {s.lattice.rank} coordinates on {s}")
        cf = _get(c, "coeff", p)
        coeff = CoeffForm(*(_rational(_get(cf, k, f"{p}.coeff", 0), f"{p}.coeff.{k}") for k in ("const", "beta", "lambda_beta")))
        smooth = _get(c, "smooth", p, True)
        if not isinstance(smooth, bool):
            raise SchemaError(f"{p}.smooth", "expected a boolean")
        curves.append(Curve(cid, s.cls(*coords), coeff, smooth))
    points = []
    for i, q in enumerate(_list(_get(doc, "points", "$", []), "$.points")):
        p = f"$.points[{i}]"
        pid = _get(q, "id", p)
        branches = [parse_branch(b, f"{p}.branches[{k}]") for k, b in enumerate(_list(_get(q, "branches", p), f"{p}.branches"))]
        contacts = {}
        for k, ct in enumerate(_list(_get(q, "contacts", p, []), f"{p}.contacts")):
            cp = f"{p}.contacts[{k}]"
            contacts[(_get(ct, "a", cp), _get(ct, "b", cp))] = _int(_get(ct, "depth", cp), f"{cp}.depth")
        points.append(Point(str(pid), Germ.make(branches, contacts)))
    complete = _get(doc, "complete", "$", False)
    if not isinstance(complete, bool):
        raise SchemaError("$.complete", "expected a boolean")
    return PairConfig(s, tuple(curves), tuple(points), complete, str(_get(doc, "name", "$", "")))


def dump_config(cfg: PairConfig) -> dict:
    def rat(x: Fraction) -> str:
        return str(x)

    surface = {"kind": "quadric"} if cfg.surface.kind == "quadric" else {"kind": "blowup", "n": cfg.surface.n}
    points = []
    for p in cfg.points:
        branches = []
        for bid, br in p.germ.branches:
            b: dict[str, Any] = {"curve": bid, "type": br.kind}
            if br.kind == "quasi_homogeneous":
                b.update(m=br.m, n=br.n)
            branches.append(b)
        contacts = [{"a": sorted(k)[0], "b": sorted(k)[1], "depth": d} for k, d in p.germ.contacts.items()]
        points.append({"id": p.id, "branches": branches, "contacts": contacts})
    return {
        "name": cfg.name,
        "surface": surface,
        "curves": [
            {
                "id": c.id,
                "class": list(c.cls.coords),
                "coeff": {"const": rat(c.coeff.const), "beta": rat(c.coeff.beta), "lambda_beta": rat(c.coeff.lambda_beta)},
                "smooth": c.smooth,
            }
            for c in cfg.curves
        ],
        "points": points,
        "complete": cfg.complete,
    }


def load_config(path: str | Path) -> PairConfig:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from None
    return parse_config(doc)


def _surface_arg(text: str) -> SurfaceModel:
    if text in ("quadric", "q"):
        return SurfaceModel.quadric()
    return SurfaceModel.blowup(int(text))


def _cmd_lines(a, out) -> int:
    s = _surface_arg(a.n)
    ls = enumerate_lines(s)
    for c in ls:
        print(c, file=out)
    print(f"count: {len(ls)}", file=out)
    return 0


def _cmd_classes(a, out) -> int:
    cs = enumerate_classes(_surface_arg(a.n), a.deg, a.selfint)
    for c in cs:
        print(c, file=out)
    print(f"count: {len(cs)}", file=out)
    return 0


def _cmd_resolve(a, out) -> int:
    res = minimal_log_resolution(load_config(a.config))
    for r in res.records:
        mults = ", ".join(f"{k}:{v}" for k, v in r.multiplicities.items())
        print(f"{r.exceptional} at {r.label} [{mults}]: {r.coeff}", file=out)
    print(f"blow-ups: {res.blow_up_count}", file=out)
    return 0


def _cmd_lct(a, out) -> int:
    cfg = load_config(a.config)
    if a.dynamic or a.beta is not None:
        f = lct_dynamic(cfg)
        print(f(Fraction(a.beta)) if a.beta is not None else f, file=out)
    else:
        print(lct_numeric(cfg), file=out)
    return 0


def _cmd_alpha(a, out) -> int:
    row = catalog.alpha_row(a.degree, a.case)
    res = catalog.evaluate_row(row)
    print(f"{res.computed}; KEE: {res.kee}", file=out)
    return 0


def _cmd_tables(a, out) -> int:
    out.write(catalog.emit_tables(a.format))
    return 0


def _cmd_check(a, out) -> int:
    failures = 0

    def line(ok: bool, text: str) -> None:
        nonlocal failures
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} {text}", file=out)

    for row in catalog.ALPHA_ROWS:
        res = catalog.evaluate_row(row)
        line(res.matches, f"alpha {row.degree} {row.tag} {row.label}: {res.computed}")
        if not res.kee_agrees:
            print(f"NOTE alpha {row.degree} {row.tag}: KEE computed {res.kee}, printed {row.printed_kee}", file=out)
    for c in catalog.GLCT_CASES:
        v = catalog.glct_value(c.build())
        line(v == c.expected, f"glct {c.degree} {c.variant}: {v}")
    for lem in catalog.LEMMAS:
        line(lem.check(), f"lemma {lem.name} ({lem.kind})")
        if lem.note:
            print(f"NOTE lemma {lem.name}: {lem.note}", file=out)
    print(f"{failures} failure(s)", file=out)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dpalpha", description="Exact thresholds on del Pezzo surfaces")
    sub = p.add_subparsers(dest="cmd", required=True)
    s = sub.add_parser("lines", help="list the (-1)-curves")
    s.add_argument("n", help="number of blown-up points, or 'quadric'")
    s.set_defaults(fn=_cmd_lines)
    s = sub.add_parser("classes", help="classes of given degree and self-intersection")
    s.add_argument("n")
    s.add_argument("deg", type=int)
    s.add_argument("selfint", type=int)
    s.set_defaults(fn=_cmd_classes)
    s = sub.add_parser("resolve", help="blow-up log of a configuration")
    s.add_argument("config")
    s.set_defaults(fn=_cmd_resolve)
    s = sub.add_parser("lct", help="log canonical threshold of a configuration")
    s.add_argument("config")
    s.add_argument("--beta", help="evaluate the dynamic threshold at this β")
    s.add_argument("--dynamic", action="store_true", help="print the threshold as a function of β")
    s.set_defaults(fn=_cmd_lct)
    s = sub.add_parser("alpha", help="α(S,(1-β)C) for a catalog case")
    s.add_argument("degree", type=int)
    s.add_argument("case")
    s.set_defaults(fn=_cmd_alpha)
    s = sub.add_parser("tables", help="regenerate the α tables")
    s.add_argument("--format", choices=["md", "json"], default="md")
    s.set_defaults(fn=_cmd_tables)
    s = sub.add_parser("check", help="verify every catalog equality")
    s.set_defaults(fn=_cmd_check)
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args, out)
    except (SchemaError, ConfigError, GermError, DegeneratePairError, UnboundedThresholdError, catalog.UnknownCase, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
