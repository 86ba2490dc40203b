from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpalpha.catalog import BOUNDARY, CUSP, P2, S, config, lam, pt
from dpalpha.lattice import SurfaceModel
from dpalpha.resolution import (
    CoeffForm,
    ConfigError,
    Curve,
    PairConfig,
    config_diagnostics,
    is_log_canonical,
    local_config,
    minimal_log_resolution,
)
from strategies import weights

Q = Fraction


def cusp_cfg(**kw):
    return config(P2, [("T", P2.cls(3), lam(1), False)], [pt("p", {"T": CUSP})], complete=False, **kw)


def test_cusp_coefficients():
    res = minimal_log_resolution(cusp_cfg())
    assert [str(c) for c in res.exceptional_coeffs] == ["2λβ - 1", "3λβ - 2", "6λβ - 4"]
    assert res.exceptional_coeffs == (CoeffForm(-1, 0, 2), CoeffForm(-2, 0, 3), CoeffForm(-4, 0, 6))
    assert [r.label for r in res.records] == ["p", "p.1", "p.1.1"]
    assert str(res.curve_classes["T"]) == "(3;2,1,1)"
    assert [str(res.exceptional_classes[f"F{i}"]) for i in (1, 2, 3)] == ["(0;-1,1,1)", "(0;0,-1,1)", "(0;0,0,-1)"]


def test_cusp_final_configuration_is_snc():
    res = minimal_log_resolution(cusp_cfg())
    T, F = res.curve_classes["T"], res.exceptional_classes
    assert T.self_intersection == 9 - 4 - 1 - 1
    assert [F[f"F{i}"].self_intersection for i in (1, 2, 3)] == [-3, -2, -1]
    assert [T.dot(F[f"F{i}"]) for i in (1, 2, 3)] == [0, 0, 1]
    assert F["F1"].dot(F["F3"]) == F["F2"].dot(F["F3"]) == 1
    assert F["F1"].dot(F["F2"]) == 0


def test_tacnode_and_boundary():
    cfg = config(P2, [("C", P2.cls(3), BOUNDARY), ("L", P2.cls(1), lam(1)), ("M", P2.cls(2), lam(1))],
                 [pt("p", ["L", "M", "C"], {("L", "M"): 2})], complete=False)
    res = minimal_log_resolution(cfg)
    assert [str(c) for c in res.exceptional_coeffs] == ["2λβ - β", "4λβ - β - 1"]


@pytest.mark.parametrize(
    "branches, contacts, count",
    [
        (["A", "B"], {}, 0),
        (["A", "B", "C"], {}, 1),
        (["A", "B"], {("A", "B"): 2}, 2),
        (["A", "B"], {("A", "B"): 4}, 4),
        (["A", "B", "C"], {("A", "B"): 2, ("A", "C"): 2, ("B", "C"): 2}, 2),
    ],
)
def test_blow_up_counts(branches, contacts, count):
    curves = [(b, P2.cls(4), lam(1)) for b in branches]
    res = minimal_log_resolution(config(P2, curves, [pt("p", branches, contacts)], complete=False))
    assert res.blow_up_count == count


def test_local_snc():
    cfg = config(P2, [("A", P2.cls(1), lam(1)), ("B", P2.cls(1), lam(1))], [pt("p", ["A", "B"])], complete=False)
    assert local_config(cfg, "p").is_snc()
    assert not local_config(cusp_cfg(), "p").is_snc()


def test_diagnostics():
    bad_genus = config(P2, [("T", P2.cls(2), lam(1), False)], [pt("p", {"T": CUSP})], complete=False)
    assert any("arithmetic genus" in d for d in config_diagnostics(bad_genus))
    smooth_flag = config(P2, [("T", P2.cls(3), lam(1))], [pt("p", {"T": CUSP})], complete=False)
    assert any("declared smooth" in d for d in config_diagnostics(smooth_flag))
    too_many = config(P2, [("A", P2.cls(1), lam(1)), ("B", P2.cls(1), lam(1))], [pt("p", ["A", "B"], {("A", "B"): 2})], complete=False)
    assert any("exceed" in d for d in config_diagnostics(too_many))
    incomplete = PairConfig(P2, (Curve("A", P2.cls(1), lam(1)), Curve("B", P2.cls(2), lam(1))), (), complete=True)
    assert any("complete" in d for d in config_diagnostics(incomplete))
    neg = PairConfig(P2, (Curve("A", P2.cls(1), CoeffForm(0, 0, -1)),))
    assert config_diagnostics(neg) == ["curve A: negative λβ weight"]
    wrong = PairConfig(P2, (Curve("A", SurfaceModel.blowup(1).E(1), lam(1)),))
    assert config_diagnostics(wrong)
    with pytest.raises(ConfigError):
        minimal_log_resolution(bad_genus)


def test_complete_flag_accepts_full_intersections():
    cfg = config(P2, [("A", P2.cls(1), lam(1)), ("B", P2.cls(2), lam(1))], [pt("p", ["A", "B"], {("A", "B"): 2})])
    assert cfg.complete and config_diagnostics(cfg) == []
    cfg2 = config(P2, [("A", P2.cls(1), lam(1)), ("B", P2.cls(2), lam(1))], [pt("p", ["A", "B"])])
    assert [p.id for p in cfg2.points] == ["p", "t1"]


def test_coeff_form_str():
    assert str(CoeffForm.boundary()) == "1 - β"
    assert str(CoeffForm(0, 0, 1)) == "λβ"
    assert str(CoeffForm(-1, -3, 6)) == "6λβ - 3β - 1"
    assert str(CoeffForm()) == "0"


# Convexity: the log-canonical coefficient vectors on a fixed support form a convex set.

SUPPORTS = [
    ([("T", P2.cls(3), False), ("L", P2.cls(1), True)], [pt("p", {"T": CUSP, "L": S}, {("T", "L"): 2})]),
    ([("A", P2.cls(1), True), ("B", P2.cls(2), True), ("C", P2.cls(1), True)], [pt("p", ["A", "B", "C"], {("A", "B"): 2})]),
    ([(f"L{i}", P2.cls(1), True) for i in range(4)], [pt("p", [f"L{i}" for i in range(4)])]),
]


def support_with(k, coeffs):
    curves, points = SUPPORTS[k]
    return config(P2, [(c, cls, CoeffForm.plain(w), sm) for (c, cls, sm), w in zip(curves, coeffs)], points, complete=False)


def coefficient_vectors(k):
    size = len(SUPPORTS[k][0])
    return st.lists(st.fractions(0, 1, max_denominator=12), min_size=size, max_size=size)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, len(SUPPORTS) - 1).flatmap(lambda k: st.tuples(st.just(k), coefficient_vectors(k), coefficient_vectors(k))),
       st.fractions(0, 1, max_denominator=10))
def test_convexity(kab, t):
    k, a, b = kab
    mix = [t * x + (1 - t) * y for x, y in zip(a, b)]
    if is_log_canonical(support_with(k, a), 1, 0) and is_log_canonical(support_with(k, b), 1, 0):
        assert is_log_canonical(support_with(k, mix), 1, 0)


@settings(max_examples=50, deadline=None)
@given(weights(), weights())
def test_scaling_monotone(w1, w2):
    lo, hi = sorted((w1, w2))
    cfg = cusp_cfg()
    if is_log_canonical(cfg, 1, hi):
        assert is_log_canonical(cfg, 1, lo)
