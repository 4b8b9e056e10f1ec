"""Interval core: containment, inclusion monotonicity, width control."""

import math

import mpmath
import numpy as np
import pytest

from wilkercert.errors import DivisionByZeroInterval, DomainError
from wilkercert.interval import (
    PI_HALF,
    Interval,
    iv_elem,
    iv_pow,
    ulps_apart,
)

MP_FN = {
    "sin": mpmath.sin,
    "cos": mpmath.cos,
    "tan": mpmath.tan,
    "sinh": mpmath.sinh,
    "cosh": mpmath.cosh,
    "tanh": mpmath.tanh,
    "exp": mpmath.exp,
    "log": mpmath.log,
}

OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def test_arith_examples():
    r = Interval(1, 2) + Interval(3, 4)
    assert r.lo <= 4.0 and r.hi >= 6.0 and r.width() <= 2.0 + 1e-12
    assert r.lo == 4.0 and r.hi == 6.0          # exact endpoint arithmetic

    r = Interval(-1, 2) * Interval(3, 3)
    assert r.lo <= -3.0 <= r.hi and r.lo <= 6.0 <= r.hi
    assert ulps_apart(r.lo, -3.0) <= 1 and ulps_apart(6.0, r.hi) <= 1

    with pytest.raises(DivisionByZeroInterval):
        Interval(1, 1) / Interval(0, 1)


def test_elem_examples():
    r = iv_elem("sin", Interval(0.0, PI_HALF.hi))
    assert r.lo <= 0.0 and r.hi >= 1.0

    assert iv_elem("cos", Interval(0.0, 0.0)) == Interval(1.0, 1.0)

    with pytest.raises(DomainError):
        iv_elem("log", Interval(-1.0, 1.0))
    with pytest.raises(DomainError):
        iv_elem("tan", Interval(1.0, 2.0))


def test_pow_examples():
    assert iv_pow(Interval(1, 1), -3.7) == Interval(1.0, 1.0)
    assert iv_pow(Interval(1, 1), 0.0) == Interval(1.0, 1.0)

    r = iv_pow(Interval(4, 4), 0.5)
    assert r.lo <= 2.0 <= r.hi and r.width() <= 1e-12

    r = iv_pow(Interval(2, 3), -1.0)
    assert r.lo <= 1 / 3 and r.hi >= 0.5

    with pytest.raises(DomainError):
        iv_pow(Interval(-1, 2), 0.5)


def _rand_interval(rng, lo=-10.0, hi=10.0):
    a, b = sorted(rng.uniform(lo, hi, size=2))
    return Interval(a, b)


def test_containment_fuzz_arith(rng):
    """10^4 random point inputs per operation stay inside the result."""
    mpmath.mp.dps = 40
    for _ in range(10_000):
        a = _rand_interval(rng)
        b = _rand_interval(rng)
        xa = float(rng.uniform(a.lo, a.hi))
        xb = float(rng.uniform(b.lo, b.hi))
        for name, op in OPS.items():
            if name == "div" and b.lo <= 0 <= b.hi:
                continue
            res = op(a, b)
            exact = op(mpmath.mpf(xa), mpmath.mpf(xb))
            assert res.lo <= exact <= res.hi, (name, a, b, xa, xb)


def test_containment_fuzz_elem(rng):
    mpmath.mp.dps = 40
    for _ in range(10_000):
        for name in MP_FN:
            if name == "log":
                x = Interval(*sorted(rng.uniform(1e-3, 50.0, size=2)))
            elif name == "tan":
                x = Interval(*sorted(rng.uniform(-1.5, 1.5, size=2)))
            elif name in ("exp",):
                x = Interval(*sorted(rng.uniform(-30.0, 30.0, size=2)))
            else:
                x = _rand_interval(rng, -30.0, 30.0)
            pt = float(rng.uniform(x.lo, x.hi))
            res = iv_elem(name, x)
            exact = MP_FN[name](mpmath.mpf(pt))
            assert res.lo <= exact <= res.hi, (name, x, pt)


def test_containment_fuzz_pow(rng):
    mpmath.mp.dps = 40
    for _ in range(10_000):
        x = Interval(*sorted(rng.uniform(1e-3, 20.0, size=2)))
        p = float(rng.uniform(-5.0, 5.0))
        pt = float(rng.uniform(x.lo, x.hi))
        res = iv_pow(x, p)
        exact = mpmath.mpf(pt) ** mpmath.mpf(p)
        assert res.lo <= exact <= res.hi, (x, p, pt)


def test_inclusion_monotonicity(rng):
    for _ in range(2000):
        outer = _rand_interval(rng, 0.1, 5.0)
        a = float(rng.uniform(outer.lo, outer.hi))
        b = float(rng.uniform(a, outer.hi))
        inner = Interval(a, b)
        for name in ("sin", "cos", "sinh", "cosh", "tanh", "exp", "log"):
            ri = iv_elem(name, inner)
            ro = iv_elem(name, outer)
            assert ro.lo <= ri.lo and ri.hi <= ro.hi, (name, inner, outer)
        other = _rand_interval(rng, 0.1, 5.0)
        for name, op in OPS.items():
            ri, ro = op(inner, other), op(outer, other)
            assert ro.lo <= ri.lo and ri.hi <= ro.hi, (name, inner, outer)


def test_width_control_point_intervals(rng):
    """Point-interval results stay within 4 ulps."""
    for _ in range(2000):
        x = float(rng.uniform(0.01, 10.0))
        p = Interval.point(x)
        for name in ("sin", "cos", "sinh", "tanh", "exp", "log"):
            r = iv_elem(name, p)
            assert ulps_apart(r.lo, r.hi) <= 4, (name, x)
        q = Interval.point(float(rng.uniform(0.01, 10.0)))
        for name, op in OPS.items():
            r = op(p, q)
            assert ulps_apart(r.lo, r.hi) <= 4, (name, x)


def test_from_fraction_roundtrip():
    from fractions import Fraction

    for q in (Fraction(1, 3), Fraction(-4, 5), Fraction(22, 7), Fraction(1, 10**30)):
        iv = Interval.from_fraction(q)
        assert iv.lo <= q <= iv.hi
        assert ulps_apart(iv.lo, iv.hi) <= 1
    exact = Interval.from_fraction(Fraction(3, 8))
    assert exact.lo == exact.hi == 0.375


def test_unbounded_marker_propagates():
    r = Interval(1.0, math.inf) + Interval(2.0, 3.0)
    assert r.hi == math.inf and r.lo <= 3.0
    r = Interval(2.0, math.inf) * Interval(0.0, 1.0)
    assert r.lo <= 0.0 and r.hi == math.inf
