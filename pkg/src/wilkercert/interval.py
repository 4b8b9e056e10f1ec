"""Sound interval arithmetic on IEEE-754 doubles with outward rounding.

Directed rounding modes are not portably reachable from pure Python, so
soundness is obtained by post-hoc endpoint nudging: results of correctly
rounded hardware operations (+, -, *, /) are widened by one unit in the last
place, and libm elementary functions (assumed faithfully rounded, error
< 1 ulp) by two ulps.  Additions and subtractions use an error-free
transformation (TwoSum) to skip the nudge when the result is exact.

Every operation returns an interval that contains the exact image of its
inputs.  Intervals are immutable and safe for concurrent use.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DivisionByZeroInterval, DomainError

_INF = math.inf


def _dn(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


def _dn2(x: float) -> float:
    return math.nextafter(math.nextafter(x, -_INF), -_INF)


def _up2(x: float) -> float:
    return math.nextafter(math.nextafter(x, _INF), _INF)


def _two_sum(a: float, b: float) -> tuple[float, float]:
    """Knuth TwoSum: s = fl(a+b) and the exact rounding error a+b-s."""
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def _sum_dn(a: float, b: float) -> float:
    s, err = _two_sum(a, b)
    if math.isinf(s):
        return s if s < 0 else math.nextafter(_INF, 0.0)
    return _dn(s) if err < 0 else s


def _sum_up(a: float, b: float) -> float:
    s, err = _two_sum(a, b)
    if math.isinf(s):
        return s if s > 0 else -math.nextafter(_INF, 0.0)
    return _up(s) if err > 0 else s


def _prod(a: float, b: float) -> float:
    # Endpoint-product convention: 0 * inf counts as 0 for containment.
    if a == 0.0 or b == 0.0:
        return 0.0
    return a * b


class Interval:
    """Closed interval [lo, hi] of doubles; hi may be +inf (tail marker)."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float):
        lo = float(lo)
        hi = float(hi)
        if math.isnan(lo) or math.isnan(hi) or lo > hi:
            raise DomainError(f"invalid interval endpoints [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, *args):
        raise AttributeError("Interval is immutable")

    # -- construction -----------------------------------------------------

    @staticmethod
    def point(x: float) -> "Interval":
        return Interval(x, x)

    @staticmethod
    def from_fraction(q: Fraction) -> "Interval":
        """Tightest float interval containing an exact rational."""
        f = float(q)
        if math.isinf(f):
            return Interval(math.nextafter(_INF, 0.0), _INF) if f > 0 else Interval(-_INF, -math.nextafter(_INF, 0.0))
        fe = Fraction(f)
        lo = f if fe <= q else _dn(f)
        hi = f if fe >= q else _up(f)
        return Interval(lo, hi)

    @staticmethod
    def hull(*items: "Interval") -> "Interval":
        return Interval(min(i.lo for i in items), max(i.hi for i in items))

    # -- queries -----------------------------------------------------------

    def width(self) -> float:
        return self.hi - self.lo

    def mid(self) -> float:
        if math.isinf(self.hi) or math.isinf(self.lo):
            return self.lo if math.isinf(self.hi) else self.hi
        return 0.5 * (self.lo + self.hi)

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def strictly_positive(self) -> bool:
        return self.lo > 0.0

    def strictly_negative(self) -> bool:
        return self.hi < 0.0

    def __contains__(self, x: float) -> bool:
        return self.contains(x)

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Interval) and self.lo == other.lo and self.hi == other.hi

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Interval":
        if isinstance(x, Interval):
            return x
        return Interval.point(float(x))

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __add__(self, other) -> "Interval":
        o = Interval._coerce(other)
        return Interval(_sum_dn(self.lo, o.lo), _sum_up(self.hi, o.hi))

    __radd__ = __add__

    def __sub__(self, other) -> "Interval":
        o = Interval._coerce(other)
        return Interval(_sum_dn(self.lo, -o.hi), _sum_up(self.hi, -o.lo))

    def __rsub__(self, other) -> "Interval":
        return Interval._coerce(other) - self

    def __mul__(self, other) -> "Interval":
        o = Interval._coerce(other)
        ps = (
            _prod(self.lo, o.lo),
            _prod(self.lo, o.hi),
            _prod(self.hi, o.lo),
            _prod(self.hi, o.hi),
        )
        return Interval(_dn(min(ps)), _up(max(ps)))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Interval":
        o = Interval._coerce(other)
        if o.lo <= 0.0 <= o.hi:
            raise DivisionByZeroInterval(f"denominator {o} contains zero")
        qs = (self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi)
        return Interval(_dn(min(qs)), _up(max(qs)))

    def __rtruediv__(self, other) -> "Interval":
        return Interval._coerce(other) / self

    def abs(self) -> "Interval":
        if self.lo >= 0.0:
            return self
        if self.hi <= 0.0:
            return -self
        return Interval(0.0, max(-self.lo, self.hi))


# -- verified constants -----------------------------------------------------

PI = Interval(math.pi, _up(math.pi))            # float pi rounds down
PI_HALF = Interval(math.pi / 2, _up(math.pi / 2))
TWO_PI = Interval(2 * math.pi, _up(2 * math.pi))


# -- elementary functions -----------------------------------------------------

# Values exact at x = 0 (sin, sinh, tanh vanish; cos, cosh equal one), so the
# two-ulp libm nudge is skipped there.
_EXACT_AT_ZERO = {math.sin: 0.0, math.sinh: 0.0, math.tanh: 0.0, math.cos: 1.0, math.cosh: 1.0}


def _fn_dn(fn, x: float) -> float:
    if x == 0.0 and fn in _EXACT_AT_ZERO:
        return _EXACT_AT_ZERO[fn]
    return _dn2(fn(x))


def _fn_up(fn, x: float) -> float:
    if x == 0.0 and fn in _EXACT_AT_ZERO:
        return _EXACT_AT_ZERO[fn]
    return _up2(fn(x))


def _mono_inc(fn, x: Interval, lo_clamp=None, hi_clamp=None) -> Interval:
    lo = _fn_dn(fn, x.lo)
    hi = _fn_up(fn, x.hi)
    if lo_clamp is not None:
        lo = max(lo, lo_clamp)
    if hi_clamp is not None:
        hi = min(hi, hi_clamp)
    return Interval(lo, hi)


def _crit_in(x: Interval, offset: Interval) -> bool:
    """Conservatively: does offset + 2*pi*n meet x for some integer n?"""
    if x.width() >= TWO_PI.lo:
        return True
    n0 = math.floor((x.lo - offset.lo) / TWO_PI.lo)
    for n in (n0 - 1, n0, n0 + 1, n0 + 2):
        pos = offset + TWO_PI * n
        if pos.hi >= x.lo and pos.lo <= x.hi:
            return True
    return False


def iv_sin(x: Interval) -> Interval:
    if _crit_in(x, PI_HALF):
        hi = 1.0
    else:
        hi = min(1.0, max(_fn_up(math.sin, x.lo), _fn_up(math.sin, x.hi)))
    if _crit_in(x, -PI_HALF):
        lo = -1.0
    else:
        lo = max(-1.0, min(_fn_dn(math.sin, x.lo), _fn_dn(math.sin, x.hi)))
    return Interval(lo, hi)


def iv_cos(x: Interval) -> Interval:
    zero = Interval(0.0, 0.0)
    if _crit_in(x, zero):
        hi = 1.0
    else:
        hi = min(1.0, max(_fn_up(math.cos, x.lo), _fn_up(math.cos, x.hi)))
    if _crit_in(x, PI):
        lo = -1.0
    else:
        lo = max(-1.0, min(_fn_dn(math.cos, x.lo), _fn_dn(math.cos, x.hi)))
    return Interval(lo, hi)


def iv_tan(x: Interval) -> Interval:
    # Only the principal branch is supported; callers pre-split.  Evaluating
    # as sin/cos keeps the blow-up near pi/2 sound without trusting libm tan.
    if not (-PI_HALF.lo < x.lo and x.hi <= PI_HALF.lo):
        raise DomainError(f"tan requires an interval inside (-pi/2, pi/2), got {x}")
    return iv_sin(x) / iv_cos(x)


def iv_sinh(x: Interval) -> Interval:
    return _mono_inc(math.sinh, x)


def iv_cosh(x: Interval) -> Interval:
    hi = _fn_up(math.cosh, max(-x.lo, x.hi))
    if x.lo <= 0.0 <= x.hi:
        lo = 1.0
    else:
        lo = max(1.0, _fn_dn(math.cosh, min(abs(x.lo), abs(x.hi))))
    return Interval(lo, hi)


def iv_tanh(x: Interval) -> Interval:
    return _mono_inc(math.tanh, x, lo_clamp=-1.0, hi_clamp=1.0)


def _exp_sat(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return _INF


def iv_exp(x: Interval) -> Interval:
    lo = 1.0 if x.lo == 0.0 else max(0.0, _dn2(_exp_sat(x.lo)))
    hi = 1.0 if x.hi == 0.0 else _up2(_exp_sat(x.hi))
    if math.isinf(lo):
        lo = math.nextafter(_INF, 0.0)
    return Interval(lo, hi)


def iv_log(x: Interval) -> Interval:
    if x.lo <= 0.0:
        raise DomainError(f"log requires a strictly positive interval, got {x}")
    lo = 0.0 if x.lo == 1.0 else _dn2(math.log(x.lo))
    hi = 0.0 if x.hi == 1.0 else _up2(math.log(x.hi))
    return Interval(lo, hi)


def iv_sqrt(x: Interval) -> Interval:
    if x.lo < 0.0:
        raise DomainError(f"sqrt requires a nonnegative interval, got {x}")
    # math.sqrt is correctly rounded, one ulp suffices
    return Interval(max(0.0, _dn(math.sqrt(x.lo))), _up(math.sqrt(x.hi)))


_ELEM = {
    "sin": iv_sin,
    "cos": iv_cos,
    "tan": iv_tan,
    "sinh": iv_sinh,
    "cosh": iv_cosh,
    "tanh": iv_tanh,
    "exp": iv_exp,
    "log": iv_log,
}


def iv_elem(fn: str, x: Interval) -> Interval:
    """Dispatch by name; mirrors the supported elementary function set."""
    try:
        f = _ELEM[fn]
    except KeyError:
        raise DomainError(f"unsupported elementary function {fn!r}") from None
    return f(x)


def _pow_endpoint(x: float, p: float, upper: bool) -> float:
    e = iv_exp(Interval.point(p) * iv_log(Interval.point(x)))
    return e.hi if upper else e.lo


def iv_pow(a: Interval, p: float) -> Interval:
    """Sound enclosure of {x**p : x in a} for a > 0; exact at p in {0, 1}."""
    if a.lo <= 0.0:
        raise DomainError(f"pow requires a strictly positive base, got {a}")
    if p == 0.0:
        return Interval(1.0, 1.0)
    if p == 1.0:
        return a
    if a.lo == a.hi == 1.0:
        return Interval(1.0, 1.0)
    if p > 0.0:
        return Interval(_pow_endpoint(a.lo, p, False), _pow_endpoint(a.hi, p, True))
    return Interval(_pow_endpoint(a.hi, p, False), _pow_endpoint(a.lo, p, True))


def ulps_apart(a: float, b: float) -> int:
    """Number of representable doubles strictly between a and b (a <= b)."""
    n = 0
    x = a
    while x < b and n < 1000:
        x = _up(x)
        n += 1
    return n
