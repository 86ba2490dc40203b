"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from dpalpha.lattice import SurfaceModel


def surfaces(max_n=8, quadric=True):
    blowups = st.integers(0, max_n).map(SurfaceModel.blowup)
    return st.one_of(blowups, st.just(SurfaceModel.quadric())) if quadric else blowups


def classes_on(lattice, bound=6):
    return st.lists(st.integers(-bound, bound), min_size=lattice.rank, max_size=lattice.rank).map(lattice.element)


def surface_and_classes(count=2, bound=6, max_n=7):
    return surfaces(max_n, quadric=False).flatmap(
        lambda s: st.tuples(st.just(s), *[classes_on(s.lattice, bound) for _ in range(count)])
    )


def rationals(lo=0, hi=1, max_den=60, open_lo=True):
    def build(pair):
        num, den = pair
        return Fraction(lo) + (Fraction(hi) - Fraction(lo)) * Fraction(num, den)

    lo_num = 1 if open_lo else 0
    return st.integers(1, max_den).flatmap(lambda d: st.tuples(st.integers(lo_num, d), st.just(d))).map(build)


def betas():
    return rationals(0, 1)


def weights(max_num=4, max_den=6):
    return st.tuples(st.integers(0, max_num), st.integers(1, max_den)).map(lambda t: Fraction(*t))


def coprime_pairs(lo=2, hi=7):
    from math import gcd

    return st.tuples(st.integers(lo, hi), st.integers(lo, hi)).filter(lambda t: t[0] < t[1] and gcd(*t) == 1)
