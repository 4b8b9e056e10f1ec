"""Rigorous truncated power series with explicit tail bounds.

Coefficient arithmetic is exact (fractions.Fraction), so the deep structural
cancellations of this problem family (the Wilker combinations vanish to fourth
order at the origin, the A..G products to ninth) are *exact* rather than
numerically accidental.  Tail bounds are propagated conservatively, giving a
mathematically sound enclosure on the whole evaluation range.

A SeriesBound with coefficients c[0..N], tail t and radius R represents any
function F with

    |F(y) - sum_i c_i y^i| <= t * y^(N+1)    for all y in [0, R].

The variable is always nonnegative (either x itself on (0, 1/4] or y = x^2),
which keeps the tail algebra one-sided and simple.

Closed forms used for the log-ratio series (from the classical product
expansions of sin, cos, sinh, cosh):

    ln(sin x / x)   = - sum_m  z_m x^(2m) / m
    ln(cos x)       = - sum_m (4^m - 1) z_m x^(2m) / m
    ln(sinh x / x)  = - sum_m (-1)^m z_m x^(2m) / m
    ln(cosh x)      =   sum_m (-1)^(m+1) (4^m - 1) z_m x^(2m) / m

with z_m = zeta(2m) / pi^(2m), an exact rational for every m.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .interval import Interval

F = Fraction

# zeta(2m) / pi^(2m) for m = 1..9, exact.
ZETA_OVER_PI = {
    1: F(1, 6),
    2: F(1, 90),
    3: F(1, 945),
    4: F(1, 9450),
    5: F(1, 93555),
    6: F(691, 638512875),
    7: F(2, 18243225),
    8: F(3617, 325641566250),
    9: F(43867, 38979295480125),
}

PI2_LO = F(98696, 10000)        # 9.8696 < pi^2

# Default truncation orders and radii.
Y_ORDER = 6                      # y-series kept to y^6 (x^12)
Y_RADIUS = F(1, 16)              # y = x^2 <= 1/16, i.e. x <= 1/4
X_ORDER = 40                     # x-series for the A..G products
X_RADIUS = F(1, 4)

SWITCH_RADIUS = 0.25             # series/direct switch point in x


class SeriesBound:
    __slots__ = ("coeffs", "tail", "radius", "_iv_cache", "_fl_cache")

    def __init__(self, coeffs, tail, radius):
        self.coeffs = tuple(F(c) for c in coeffs)
        self.tail = F(tail)
        self.radius = F(radius)
        if self.tail < 0:
            raise ValueError("tail bound must be nonnegative")
        self._iv_cache = None
        self._fl_cache = None

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    # -- bookkeeping --------------------------------------------------------

    def truncated(self, n: int) -> "SeriesBound":
        """Fold coefficients above degree n into the tail."""
        if n >= self.order:
            return self
        tail = self.tail * self.radius ** (self.order - n)
        for j in range(n + 1, self.order + 1):
            tail += abs(self.coeffs[j]) * self.radius ** (j - n - 1)
        return SeriesBound(self.coeffs[: n + 1], tail, self.radius)

    def sup_abs(self) -> Fraction:
        """Upper bound of |F| on [0, radius]."""
        s = sum(abs(c) * self.radius**i for i, c in enumerate(self.coeffs))
        return s + self.tail * self.radius ** (self.order + 1)

    def sup_over_y(self) -> Fraction:
        """Upper bound of |F(y)/y| on (0, radius]; requires c_0 == 0."""
        if self.coeffs[0] != 0:
            raise ValueError("sup_over_y needs a vanishing constant term")
        s = sum(abs(c) * self.radius ** (i - 1) for i, c in enumerate(self.coeffs) if i >= 1)
        return s + self.tail * self.radius**self.order

    def shift_down(self, m: int) -> "SeriesBound":
        """Divide by y^m; the first m coefficients must vanish exactly."""
        if any(c != 0 for c in self.coeffs[:m]):
            raise ValueError(f"cannot shift: low-order coefficients nonzero")
        return SeriesBound(self.coeffs[m:], self.tail, self.radius)

    # -- exact arithmetic -----------------------------------------------------

    def _aligned(self, other: "SeriesBound"):
        if self.radius != other.radius:
            raise ValueError("radius mismatch")
        n = min(self.order, other.order)
        return self.truncated(n), other.truncated(n)

    def __add__(self, other: "SeriesBound") -> "SeriesBound":
        a, b = self._aligned(other)
        return SeriesBound(
            [x + y for x, y in zip(a.coeffs, b.coeffs)], a.tail + b.tail, a.radius
        )

    def __sub__(self, other: "SeriesBound") -> "SeriesBound":
        a, b = self._aligned(other)
        return SeriesBound(
            [x - y for x, y in zip(a.coeffs, b.coeffs)], a.tail + b.tail, a.radius
        )

    def scaled(self, c) -> "SeriesBound":
        c = F(c)
        return SeriesBound([c * x for x in self.coeffs], abs(c) * self.tail, self.radius)

    def __mul__(self, other: "SeriesBound") -> "SeriesBound":
        a, b = self._aligned(other)
        n, r = a.order, a.radius
        out = [F(0)] * (n + 1)
        tail = F(0)
        for i, ca in enumerate(a.coeffs):
            if ca == 0:
                continue
            for j, cb in enumerate(b.coeffs):
                if cb == 0:
                    continue
                if i + j <= n:
                    out[i + j] += ca * cb
                else:
                    tail += abs(ca * cb) * r ** (i + j - n - 1)
        a_sup = a.sup_abs()
        b_sup = b.sup_abs()
        tail += a.tail * b_sup + b.tail * a_sup + a.tail * b.tail * r ** (n + 1)
        return SeriesBound(out, tail, r)

    def exp_m1(self) -> "SeriesBound":
        """exp(F) - 1 for a series with F(0) = 0."""
        if self.coeffs[0] != 0:
            raise ValueError("exp_m1 needs a vanishing constant term")
        n, r = self.order, self.radius
        sup = self.sup_abs()
        per_y = self.sup_over_y()
        terms = n + 2
        out = SeriesBound([F(0)] * (n + 1), F(0), r)
        power = self
        fact = F(1)
        for j in range(1, terms + 1):
            fact *= j
            out = out + power.scaled(F(1, int(fact)))
            if j < terms:
                power = power * self
        # Lagrange remainder of the exponential series, graded in y.
        exp_bound = F(3) ** max(1, math.ceil(sup))
        rem = per_y ** (terms + 1) / (fact * (terms + 1)) * exp_bound
        rem_tail = rem * r ** (terms - n)
        return SeriesBound(out.coeffs, out.tail + rem_tail, r)

    # -- evaluation -----------------------------------------------------------

    def eval_frac(self, ylo: Fraction, yhi: Fraction) -> tuple[Fraction, Fraction]:
        """Exact rational enclosure of F over [ylo, yhi] (0 <= ylo <= yhi <= R)."""
        ylo, yhi = F(ylo), F(yhi)
        if not (0 <= ylo <= yhi <= self.radius):
            raise DomainError(f"evaluation range [{ylo}, {yhi}] outside [0, {self.radius}]")
        vlo = vhi = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            ps = (vlo * ylo, vlo * yhi, vhi * ylo, vhi * yhi)
            vlo, vhi = min(ps) + c, max(ps) + c
        t = self.tail * yhi ** (self.order + 1)
        return vlo - t, vhi + t

    def _iv_coeffs(self):
        if self._iv_cache is None:
            coeffs = tuple(Interval.from_fraction(c) for c in self.coeffs)
            tail = Interval.from_fraction(self.tail).hi
            self._iv_cache = (coeffs, tail)
        return self._iv_cache

    def eval_interval(self, y: Interval) -> Interval:
        """Outward float enclosure of F over the interval y."""
        if y.lo < 0.0 or y.hi > float(self.radius) * (1 + 1e-12):
            raise DomainError(f"evaluation range {y} outside [0, {float(self.radius)}]")
        coeffs, tail = self._iv_coeffs()
        acc = coeffs[-1]
        for c in reversed(coeffs[:-1]):
            acc = acc * y + c
        yp = iv_ipow(y, self.order + 1)
        t = tail * yp.hi
        return acc + Interval(-t, t)

    def float_coeffs(self):
        """Nearest-float coefficients plus tail magnitude, for point/grid use."""
        if self._fl_cache is None:
            self._fl_cache = (
                tuple(float(c) for c in self.coeffs),
                float(self.tail),
            )
        return self._fl_cache

    def eval_point(self, y: float) -> float:
        """Fast best-effort float value (not an enclosure)."""
        coeffs, _ = self.float_coeffs()
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * y + c
        return acc


def iv_ipow(x: Interval, n: int) -> Interval:
    """x**n for nonnegative x by binary powering."""
    out = Interval(1.0, 1.0)
    base = x
    while n:
        if n & 1:
            out = out * base
        base = base * base
        n >>= 1
    return out


# -- log-ratio series in y = x^2 ---------------------------------------------


def _tail_geometric(first_term: Fraction, ratio: Fraction) -> Fraction:
    if ratio >= 1:
        raise ValueError("tail ratio must be < 1")
    return first_term / (1 - ratio)


@lru_cache(maxsize=None)
def log_ratio_series(kind: str, n: int = Y_ORDER, radius: Fraction = Y_RADIUS) -> SeriesBound:
    """ln(sin x/x), ln(cos x), ln(tan x/x) and hyperbolic twins, in y = x^2."""
    if n + 1 not in ZETA_OVER_PI:
        raise ValueError(f"zeta table too short for order {n}")
    coeffs = [F(0)]
    for m in range(1, n + 1):
        z = ZETA_OVER_PI[m]
        if kind == "lnsinc":
            c = -z / m
        elif kind == "lncos":
            c = -(4**m - 1) * z / m
        elif kind == "lntanc":
            c = (4**m - 2) * z / m
        elif kind == "lnsinhc":
            c = -((-1) ** m) * z / m
        elif kind == "lncosh":
            c = (-1) ** (m + 1) * (4**m - 1) * z / m
        elif kind == "lntanhc":
            c = (-1) ** m * (4**m - 2) * z / m
        else:
            raise ValueError(f"unknown log-ratio series {kind!r}")
        coeffs.append(c)
    # First omitted magnitude; successive term ratio <= 4.5*R/pi^2 < 1 covers
    # both the plain and the (4^m - 2)-weighted families for m >= 2.
    z_next = ZETA_OVER_PI[n + 1]
    first = (4 ** (n + 1)) * z_next / (n + 1)
    tail = _tail_geometric(first, F(9, 2) * radius / PI2_LO)
    return SeriesBound(coeffs, tail, radius)


# -- entire-function series in x ----------------------------------------------


@lru_cache(maxsize=None)
def entire_series(kind: str, n: int = X_ORDER, radius: Fraction = X_RADIUS) -> SeriesBound:
    """Maclaurin series of sin/cos/sinh/cosh with a factorial tail bound."""
    coeffs = [F(0)] * (n + 1)
    odd = kind in ("sin", "sinh")
    alternating = kind in ("sin", "cos")
    d = 1 if odd else 0
    j = 0
    while d <= n:
        sign = (-1) ** j if alternating else 1
        coeffs[d] = F(sign, math.factorial(d))
        j += 1
        d += 2
    d0 = d  # first omitted degree
    q = radius**2 / ((d0 + 1) * (d0 + 2))
    first = F(1, math.factorial(d0)) * radius ** (d0 - n - 1)
    tail = _tail_geometric(first, q)
    return SeriesBound(coeffs, tail, radius)


@lru_cache(maxsize=None)
def x_identity(n: int = X_ORDER, radius: Fraction = X_RADIUS) -> SeriesBound:
    coeffs = [F(0)] * (n + 1)
    coeffs[1] = F(1)
    return SeriesBound(coeffs, F(0), radius)


# -- the paper's polynomial kernels A..G, as exact x-series -------------------


@lru_cache(maxsize=None)
def abc_series() -> dict:
    """Exact Taylor enclosures of the trig products A, B, C on (0, 1/4]."""
    s = entire_series("sin")
    c = entire_series("cos")
    x = x_identity()
    smxc = s - x * c                      # sin x - x cos x          ~ x^3/3
    xmcs = x - c * s                      # x - cos x sin x          ~ 2x^3/3
    a = c * smxc * smxc * xmcs
    b = xmcs * xmcs * smxc
    bracket = x * s - (x * x * c).scaled(2) + c * s * s
    cc = x * s * s * bracket
    return {"A": a, "B": b, "C": cc}


@lru_cache(maxsize=None)
def efg_series() -> dict:
    """Exact Taylor enclosures of the hyperbolic products E, F, G on (0, 1/4]."""
    s = entire_series("sinh")
    c = entire_series("cosh")
    x = x_identity()
    smxc = s - x * c                      # sinh x - x cosh x        ~ -x^3/3
    xmcs = x - c * s                      # x - cosh x sinh x        ~ -2x^3/3
    e = c * smxc * smxc * xmcs
    f = smxc * xmcs * xmcs
    bracket = (x * x * c).scaled(2) - x * s - c * s * s
    g = x * s * s * bracket
    return {"E": e, "F": f, "G": g}


@lru_cache(maxsize=None)
def ratio_series(family: str, k_key) -> tuple[SeriesBound, SeriesBound]:
    """(numerator, denominator)/x^9 series for C/(kA+B) or G/(kE+F)."""
    k = F(k_key)
    if family == "trig":
        t = abc_series()
        num, den = t["C"], t["A"].scaled(k) + t["B"]
    else:
        t = efg_series()
        num, den = t["G"], t["E"].scaled(k) + t["F"]
    return num.shift_down(9), den.shift_down(9)


# -- Wilker-functional series in y = x^2 --------------------------------------


@lru_cache(maxsize=None)
def weighted_power_series(terms, family: str, n: int = Y_ORDER) -> SeriesBound:
    """Series of sum_i w_i * ((sin x/x)^(a_i) (tan x/x)^(b_i) - 1) in y = x^2.

    `terms` is a tuple of (w, a, b) fraction triples; family selects trig or
    hyperbolic base ratios.  With sum w = 1 this is the Wilker functional
    minus one; with sum w = 0 it is a plain weighted combination of the
    power products.  The constant term always cancels structurally.
    """
    if family == "trig":
        s = log_ratio_series("lnsinc", n)
        t = log_ratio_series("lntanc", n)
    elif family == "hyp":
        s = log_ratio_series("lnsinhc", n)
        t = log_ratio_series("lntanhc", n)
    else:
        raise ValueError(f"unknown family {family!r}")
    terms = tuple((F(w), F(a), F(b)) for (w, a, b) in terms)
    out = None
    for w, a, b in terms:
        arg = s.scaled(a) + t.scaled(b)
        piece = arg.exp_m1().scaled(w)
        out = piece if out is None else out + piece
    return out


def log_combo_series(a, b, family: str, n: int = Y_ORDER) -> SeriesBound:
    """Series of a*ln(sin x/x) + b*ln(tan x/x) (or hyperbolic) in y = x^2."""
    if family == "trig":
        s = log_ratio_series("lnsinc", n)
        t = log_ratio_series("lntanc", n)
    else:
        s = log_ratio_series("lnsinhc", n)
        t = log_ratio_series("lntanhc", n)
    return s.scaled(F(a)) + t.scaled(F(b))


@lru_cache(maxsize=None)
def ratio_y_series(kind: str, n: int = Y_ORDER) -> SeriesBound:
    """sin x/x, tan x/x and hyperbolic twins as series in y = x^2."""
    if kind in ("sinc", "sinhc"):
        sign = -1 if kind == "sinc" else 1
        coeffs = [F(sign**m, math.factorial(2 * m + 1)) for m in range(n + 1)]
        q = Y_RADIUS / ((2 * n + 4) * (2 * n + 5))
        first = F(1, math.factorial(2 * n + 3))
        return SeriesBound(coeffs, _tail_geometric(first, q), Y_RADIUS)
    if kind in ("tanc", "tanhc"):
        ln = log_ratio_series("lntanc" if kind == "tanc" else "lntanhc", n)
        em1 = ln.exp_m1()
        coeffs = list(em1.coeffs)
        coeffs[0] += 1
        return SeriesBound(coeffs, em1.tail, em1.radius)
    raise ValueError(f"unknown ratio series {kind!r}")
