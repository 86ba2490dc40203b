from collections import Counter
from math import comb

import pytest
from hypothesis import given, settings

from dpalpha.curves import (
    PreconditionError,
    UnsupportedRange,
    ample_window_check,
    enumerate_classes,
    enumerate_lines,
    is_ample,
    is_nef,
    line_type,
    window_inequality,
    window_mismatches,
)
from dpalpha.lattice import SurfaceModel, canonical_class
from strategies import surfaces

LINE_COUNTS = [0, 1, 3, 6, 10, 16, 27, 56, 240]


def expected_types(n):
    """Line-type counts per degree d of the plane model."""
    out = {"E": n, "L": comb(n, 2), "C": comb(n, 5), "Q": 7 * comb(n, 7)}
    if n == 8:
        out.update(R=56, T=28, Z=8)
    return {k: v for k, v in out.items() if v}


@pytest.mark.parametrize("n", range(9))
def test_line_counts(n):
    assert len(enumerate_lines(SurfaceModel.blowup(n))) == LINE_COUNTS[n]


@pytest.mark.parametrize("n", range(9))
def test_line_types(n):
    ls = enumerate_lines(SurfaceModel.blowup(n))
    assert dict(Counter(line_type(c) for c in ls)) == expected_types(n)


def test_line_shapes_degree_one():
    s = SurfaceModel.blowup(8)
    by = {}
    for c in enumerate_lines(s):
        by.setdefault(line_type(c), set()).add(tuple(sorted(c.coords[1:])))
    assert by["Q"] == {(0, 1, 1, 1, 1, 1, 1, 2)}
    assert by["R"] == {(1, 1, 1, 1, 1, 2, 2, 2)}
    assert by["T"] == {(1, 1, 2, 2, 2, 2, 2, 2)}
    assert by["Z"] == {(2, 2, 2, 2, 2, 2, 2, 3)}


def test_quadric_has_no_lines():
    assert enumerate_lines(SurfaceModel.quadric()) == ()


@pytest.mark.parametrize("n", range(9))
def test_lines_are_minus_one_curves(n):
    s = SurfaceModel.blowup(n)
    for c in enumerate_lines(s):
        assert c.self_intersection == -1
        assert -canonical_class(s).dot(c) == 1


def test_enumerate_classes_conics():
    assert len(enumerate_classes(SurfaceModel.blowup(5), 2, 0)) == 10
    assert len(enumerate_classes(SurfaceModel.blowup(4), 2, 0)) == 5


def test_enumerate_classes_cubics_degree_five():
    got = {str(c) for c in enumerate_classes(SurfaceModel.blowup(4), 3, 1)}
    assert got == {"(1;0,0,0,0)", "(2;1,1,1,0)", "(2;1,1,0,1)", "(2;1,0,1,1)", "(2;0,1,1,1)"}


def test_enumerate_classes_range():
    with pytest.raises(UnsupportedRange):
        enumerate_classes(SurfaceModel.blowup(3), 5, 1)


def test_nef_and_ample():
    s = SurfaceModel.blowup(6)
    assert is_ample(-canonical_class(s))
    assert not is_nef(s.E(1))
    assert is_nef(s.plane(1, 1)) and not is_ample(s.plane(1, 1))
    q = SurfaceModel.quadric()
    assert is_ample(q.cls(1, 1)) and not is_ample(q.cls(1, 0))


def test_window_precondition():
    s = SurfaceModel.blowup(3)
    with pytest.raises(PreconditionError):
        ample_window_check(s, s.cls(3, 0, 0, 0))


def test_window_examples():
    s = SurfaceModel.blowup(2)
    assert ample_window_check(s, s.plane(1)) and window_inequality(s, s.plane(1))
    assert not ample_window_check(s, s.plane(2)) and not window_inequality(s, s.plane(2))


@pytest.mark.parametrize("s", [SurfaceModel.blowup(n) for n in range(7)] + [SurfaceModel.quadric()], ids=str)
def test_window_exhaustive(s):
    assert window_mismatches(s, 6) == []


@settings(max_examples=40, deadline=None)
@given(surfaces(max_n=6))
def test_anticanonical_ample(s):
    assert is_ample(-canonical_class(s))
