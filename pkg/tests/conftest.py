"""Shared oracles and helpers.

Oracles here are deliberately independent of the library's evaluation paths:
extended-precision mpmath formulas, longdouble grid sweeps, and Richardson
extrapolation.  Expected values asserted in the tests were produced by these
oracles and frozen.
"""

import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from wilkercert.kernels import Params


def mpf_to_fraction(x) -> Fraction:
    """Exact rational value of a finite mpmath float."""
    sign, man, exp, _ = x._mpf_
    if man == 0 and exp != 0:
        raise ValueError(f"non-finite mpf {x}")
    r = Fraction(man) * Fraction(2) ** exp
    return -r if sign else r


def mp_f(x, k, p, dps=40):
    """Direct extended-precision f(x; k, p), no series, no intervals."""
    with mpmath.workdps(dps):
        x = mpmath.mpf(x)
        k = mpmath.mpf(k)
        p = mpmath.mpf(p)
        s = mpmath.sin(x) / x
        t = mpmath.tan(x) / x
        return 2 / (k + 2) * s ** (k * p) + k / (k + 2) * t**p - 1


def mp_u(x, k, p, dps=40):
    with mpmath.workdps(dps):
        x = mpmath.mpf(x)
        k = mpmath.mpf(k)
        p = mpmath.mpf(p)
        s = mpmath.sinh(x) / x
        t = mpmath.tanh(x) / x
        return 2 / (k + 2) * s ** (k * p) + k / (k + 2) * t**p - 1


def richardson_c4(fn, dps=50, j_lo=4, j_hi=14):
    """Extrapolate lim fn(x)/x^4 over x = 2^-j; fn takes an mpf and returns one.

    The sequence a_j = fn(2^-j) 16^j is polynomial in h = 4^-j, so one Neville
    pass per column cancels successive orders.
    """
    with mpmath.workdps(dps):
        rows = [fn(mpmath.mpf(2) ** -j) * mpmath.mpf(16) ** j for j in range(j_lo, j_hi)]
        fac = mpmath.mpf(1)
        while len(rows) > 1:
            fac *= 4
            rows = [(fac * rows[i + 1] - rows[i]) / (fac - 1) for i in range(len(rows) - 1)]
        return rows[0]


def longdouble_sweep(family, k, p, lo, hi, n=100_000):
    """Extended-precision (80-bit) grid values of f or u on [lo, hi]."""
    x = np.linspace(lo, hi, n).astype(np.longdouble)
    k = np.longdouble(k)
    p = np.longdouble(p)
    if family == "trig":
        s = np.sin(x) / x
        t = np.tan(x) / x
    else:
        s = np.sinh(x) / x
        t = np.tanh(x) / x
    with np.errstate(over="ignore"):
        vals = 2 / (k + 2) * s ** (k * p) + k / (k + 2) * t**p - 1
    return x, vals


@pytest.fixture
def rng():
    return np.random.default_rng(20130406)


def random_params(rng, n):
    """n valid (k, p) pairs spanning both k-ranges, away from degeneracies."""
    out = []
    while len(out) < n:
        if rng.random() < 0.7:
            k = float(rng.uniform(1.0, 8.0))
        else:
            k = float(rng.uniform(-8.0, -2.2))
        p = float(rng.uniform(-2.0, 2.0))
        if abs(p) < 0.05:
            continue
        out.append(Params(k, p))
    return out
