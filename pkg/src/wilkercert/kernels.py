"""The function zoo of the inequality families.

Normalized ratios sin x/x, tan x/x, sinh x/x, tanh x/x; the polynomial
products A, B, C (trig) and E, F, G (hyperbolic); the monotone ratios
D = C/(kA+B) and H = G/(kE+F); the two-parameter Wilker functionals

    f(x; k, p) = 2/(k+2) (sin x/x)^(kp) + k/(k+2) (tan x/x)^p - 1
    u(x; k, p) = 2/(k+2) (sinh x/x)^(kp) + k/(k+2) (tanh x/x)^p - 1

and the proof auxiliaries g, h, v, w that control their derivative signs.

Every kernel comes in up to three forms:

  * a best-effort float form (plain name) for sampling and grids,
  * a sound Interval form (`*_iv`), the only form certification consumes,
  * an mpmath form (`*_mp`) evaluated at the caller's mp.dps, used as an
    independent extended-precision oracle.

Below the series switch radius (x <= 1/4) both the float and the interval
forms evaluate exact-coefficient series (see `series`); this is what makes
tiny values like f(1e-3) = O(x^4) resolvable at all, since the direct
expressions cancel catastrophically there.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import mpmath

from .errors import DegenerateParams, DomainError, NumericalLossOfSignificance
from .interval import (
    PI_HALF,
    Interval,
    iv_cos,
    iv_exp,
    iv_log,
    iv_sin,
    iv_pow,
)
from . import series
from .series import SWITCH_RADIUS, F

PI_HALF_LO = PI_HALF.lo


def to_fraction(v) -> Fraction:
    """Exact rational from int/float/Fraction/decimal-string input."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return Fraction(v)          # floats are dyadic rationals, exact
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot interpret {v!r} as an exact rational")


class Params:
    """Family parameters (k, p) with the standing assumption k(k+2) != 0.

    Both values are kept exactly (as Fractions) so that series coefficients
    and boundary detection are free of representation noise; `k`/`p` are the
    nearest floats for plain numeric work.
    """

    __slots__ = ("k", "p", "k_exact", "p_exact")

    def __init__(self, k, p):
        ke = to_fraction(k)
        pe = to_fraction(p)
        if ke * (ke + 2) == 0:
            raise DegenerateParams(f"k(k+2) must be nonzero, got k = {ke}")
        object.__setattr__(self, "k_exact", ke)
        object.__setattr__(self, "p_exact", pe)
        object.__setattr__(self, "k", float(ke))
        object.__setattr__(self, "p", float(pe))

    def __setattr__(self, *a):
        raise AttributeError("Params is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Params)
            and self.k_exact == other.k_exact
            and self.p_exact == other.p_exact
        )

    def __hash__(self):
        return hash((self.k_exact, self.p_exact))

    def __repr__(self):
        return f"Params(k={self.k}, p={self.p})"

    @property
    def kp_exact(self) -> Fraction:
        return self.k_exact * self.p_exact

    @property
    def weights(self) -> tuple[Fraction, Fraction]:
        return F(2) / (self.k_exact + 2), self.k_exact / (self.k_exact + 2)


# KernelId-style registry filled at module bottom.
KERNELS: dict = {}


# ---------------------------------------------------------------------------
# normalized ratios
# ---------------------------------------------------------------------------

_RATIO_DOMAIN_HI = {"sinc": math.pi, "tanc": PI_HALF_LO, "sinhc": math.inf, "tanhc": math.inf}


def _check_ratio_domain(which: str, x: float):
    if which not in _RATIO_DOMAIN_HI:
        raise DomainError(f"unknown ratio kernel {which!r}")
    hi = _RATIO_DOMAIN_HI[which]
    if x < 0.0 or (not math.isinf(hi) and x > hi):
        raise DomainError(f"{which} not defined at x = {x}")


def _ratio_point(which: str, x: float) -> float:
    _check_ratio_domain(which, x)
    if x == 0.0:
        return 1.0
    if x <= SWITCH_RADIUS:
        return series.ratio_y_series(which).eval_point(x * x)
    if which == "sinc":
        return math.sin(x) / x
    if which == "tanc":
        return math.tan(x) / x
    if which == "sinhc":
        return math.sinh(x) / x if x < 700 else math.inf
    return math.tanh(x) / x


def _sinc_at(x: float) -> Interval:
    if x == 0.0:
        return Interval(1.0, 1.0)
    return iv_sin(Interval.point(x)) / Interval.point(x)


def _tanc_at(x: float) -> Interval:
    if x == 0.0:
        return Interval(1.0, 1.0)
    p = Interval.point(x)
    return iv_sin(p) / (iv_cos(p) * p)


def _mono_pair(fn, x: float) -> Interval:
    v = fn(x)
    return Interval(
        math.nextafter(math.nextafter(v, -math.inf), -math.inf),
        math.nextafter(math.nextafter(v, math.inf), math.inf),
    )


def _sinhc_at(x: float) -> Interval:
    if x == 0.0:
        return Interval(1.0, 1.0)
    if x > 690.0:
        # sinh overflows; sound lower bound sinh x > e^x / 2 - 1
        ln_lo = Interval.point(x) - iv_log(Interval.point(2.0 * x)) - Interval(1e-8, 1e-8)
        return Interval(iv_exp(ln_lo).lo, math.inf)
    return _mono_pair(math.sinh, x) / Interval.point(x)


def _tanhc_at(x: float) -> Interval:
    if x == 0.0:
        return Interval(1.0, 1.0)
    num = _mono_pair(math.tanh, x)
    return Interval(max(0.0, num.lo), min(1.0, num.hi)) / Interval.point(x)


def _ratio_interval(which: str, x: Interval) -> Interval:
    """Monotone endpoint enclosures; sinc/tanhc decrease, the others increase."""
    _check_ratio_domain(which, x.lo)
    if not math.isinf(x.hi):
        _check_ratio_domain(which, x.hi)
    elif which in ("sinc", "tanc"):
        raise DomainError(f"{which} not defined on unbounded intervals")
    at = {"sinc": _sinc_at, "tanc": _tanc_at, "sinhc": _sinhc_at, "tanhc": _tanhc_at}[which]
    lo_end = at(x.lo)
    if math.isinf(x.hi):
        hi_end = Interval(0.0, math.inf) if which == "sinhc" else Interval(0.0, lo_end.hi)
    else:
        hi_end = at(x.hi)
    if which in ("sinc", "tanhc"):        # decreasing on their domains
        return Interval(hi_end.lo, lo_end.hi)
    return Interval(lo_end.lo, hi_end.hi)  # increasing


def ratio_func(which: str, x):
    """sin x/x, tan x/x, sinh x/x or tanh x/x; accepts float or Interval."""
    if isinstance(x, Interval):
        return _ratio_interval(which, x)
    return _ratio_point(which, float(x))


def sinc(x):
    return ratio_func("sinc", x)


def tanc(x):
    return ratio_func("tanc", x)


def sinhc(x):
    return ratio_func("sinhc", x)


def tanhc(x):
    return ratio_func("tanhc", x)


def ratio_func_mp(which: str, x):
    x = mpmath.mpf(x)
    if x == 0:
        return mpmath.mpf(1)
    fn = {"sinc": mpmath.sin, "tanc": mpmath.tan, "sinhc": mpmath.sinh, "tanhc": mpmath.tanh}[which]
    return fn(x) / x


# ---------------------------------------------------------------------------
# A..G products
# ---------------------------------------------------------------------------

_ABC_DOMAIN = {"A": "trig", "B": "trig", "C": "trig", "E": "hyp", "F": "hyp", "G": "hyp"}


def _abc_direct_float(which: str, x: float) -> float:
    if which in ("A", "B", "C"):
        s, c = math.sin(x), math.cos(x)
        if which == "A":
            return c * (s - x * c) ** 2 * (x - c * s)
        if which == "B":
            return (x - c * s) ** 2 * (s - x * c)
        return x * s * s * (-2 * x * x * c + x * s + c * s * s)
    s, c = math.sinh(x), math.cosh(x)
    if which == "E":
        return c * (s - x * c) ** 2 * (x - c * s)
    if which == "F":
        return (s - x * c) * (x - c * s) ** 2
    return x * s * s * (2 * x * x * c - x * s - c * s * s)


def _abc_direct_iv(which: str, x: Interval) -> Interval:
    if which in ("A", "B", "C"):
        s, c = iv_sin(x), iv_cos(x)
        if which == "A":
            d = s - x * c
            return c * d * d * (x - c * s)
        if which == "B":
            d = x - c * s
            return d * d * (s - x * c)
        two_x2c = Interval(2.0, 2.0) * x * x * c
        return x * s * s * (x * s + c * s * s - two_x2c)
    from .interval import iv_sinh, iv_cosh

    s, c = iv_sinh(x), iv_cosh(x)
    if which == "E":
        d = s - x * c
        return c * d * d * (x - c * s)
    if which == "F":
        d = x - c * s
        return (s - x * c) * d * d
    two_x2c = Interval(2.0, 2.0) * x * x * c
    return x * s * s * (two_x2c - x * s - c * s * s)


def _abc_series(which: str):
    table = series.abc_series() if which in ("A", "B", "C") else series.efg_series()
    return table[which]


def _check_abc_domain(which: str, lo: float, hi: float):
    if which not in _ABC_DOMAIN:
        raise DomainError(f"unknown product kernel {which!r}")
    limit = PI_HALF_LO if _ABC_DOMAIN[which] == "trig" else math.inf
    if lo < 0.0 or hi > limit:
        raise DomainError(f"{which} not defined on [{lo}, {hi}]")


def abc_efg(which: str, x):
    """Literal evaluation of the defining products A, B, C, E, F, G."""
    if isinstance(x, Interval):
        _check_abc_domain(which, x.lo, x.hi)
        if x.hi <= SWITCH_RADIUS:
            return _abc_series(which).eval_interval(x)
        if x.lo >= SWITCH_RADIUS:
            return _abc_direct_iv(which, x)
        return Interval.hull(
            _abc_series(which).eval_interval(Interval(x.lo, SWITCH_RADIUS)),
            _abc_direct_iv(which, Interval(SWITCH_RADIUS, x.hi)),
        )
    x = float(x)
    _check_abc_domain(which, x, x)
    if x <= SWITCH_RADIUS:
        return _abc_series(which).eval_point(x)
    return _abc_direct_float(which, x)


def abc_efg_mp(which: str, x):
    x = mpmath.mpf(x)
    if which in ("A", "B", "C"):
        s, c = mpmath.sin(x), mpmath.cos(x)
        if which == "A":
            return c * (s - x * c) ** 2 * (x - c * s)
        if which == "B":
            return (x - c * s) ** 2 * (s - x * c)
        return x * s * s * (-2 * x * x * c + x * s + c * s * s)
    s, c = mpmath.sinh(x), mpmath.cosh(x)
    if which == "E":
        return c * (s - x * c) ** 2 * (x - c * s)
    if which == "F":
        return (s - x * c) * (x - c * s) ** 2
    return x * s * s * (2 * x * x * c - x * s - c * s * s)


# ---------------------------------------------------------------------------
# monotone ratios D = C/(kA+B), H = G/(kE+F)
# ---------------------------------------------------------------------------


def _ratio_kernel(family: str, x, k) -> "Interval | float":
    k_frac = to_fraction(k)
    num_s, den_s = series.ratio_series(family, k_frac)
    names = ("C", "A", "B") if family == "trig" else ("G", "E", "F")
    if isinstance(x, Interval):
        if x.hi <= SWITCH_RADIUS:
            return num_s.eval_interval(x) / den_s.eval_interval(x)
        if x.lo >= SWITCH_RADIUS:
            num = _abc_direct_iv(names[0], x)
            den = _abc_direct_iv(names[1], x) * float(k_frac) + _abc_direct_iv(names[2], x)
            if not (math.isfinite(den.lo) and math.isfinite(den.hi)):
                raise NumericalLossOfSignificance(f"ratio denominator overflow on {x}")
            return num / den
        return Interval.hull(
            _ratio_kernel(family, Interval(x.lo, SWITCH_RADIUS), k_frac),
            _ratio_kernel(family, Interval(SWITCH_RADIUS, x.hi), k_frac),
        )
    x = float(x)
    if x <= 0.0:
        raise DomainError(f"ratio kernel needs x > 0, got {x}")
    if x <= SWITCH_RADIUS:
        return num_s.eval_point(x) / den_s.eval_point(x)
    num = _abc_direct_float(names[0], x)
    den = float(k_frac) * _abc_direct_float(names[1], x) + _abc_direct_float(names[2], x)
    out = num / den
    if not math.isfinite(out):
        raise NumericalLossOfSignificance(f"ratio overflow at x = {x}")
    return out


def ratio_D(x, k):
    """C/(kA+B) on (0, pi/2); increasing, range (12/(5(k+2)), 1) for k >= 1."""
    if float(k) < 1.0:
        raise DomainError(f"D-ratio requires k >= 1, got k = {k}")
    if isinstance(x, Interval):
        if x.hi >= PI_HALF_LO:
            raise DomainError("D-ratio domain is (0, pi/2)")
    elif not 0.0 < float(x) < PI_HALF_LO:
        raise DomainError("D-ratio domain is (0, pi/2)")
    return _ratio_kernel("trig", x, k)


def ratio_H(x, k):
    """G/(kE+F) on (0, inf); monotone with limit 12/(5(k+2)) at 0."""
    kf = float(k)
    if not (kf >= 1.0 or kf < -2.0):
        raise DomainError(f"H-ratio requires k >= 1 or k < -2, got k = {k}")
    return _ratio_kernel("hyp", x, k)


def ratio_D_mp(x, k):
    x = mpmath.mpf(x)
    a, b, c = (abc_efg_mp(w, x) for w in ("A", "B", "C"))
    return c / (k * a + b)


def ratio_H_mp(x, k):
    x = mpmath.mpf(x)
    e, f, g = (abc_efg_mp(w, x) for w in ("E", "F", "G"))
    return g / (k * e + f)


# ---------------------------------------------------------------------------
# Wilker functionals f (trig) and u (hyperbolic)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=256)
def _wilker_terms(k_exact: Fraction, p_exact: Fraction):
    w_sin = F(2) / (k_exact + 2)
    w_tan = k_exact / (k_exact + 2)
    return ((w_sin, k_exact * p_exact, F(0)), (w_tan, F(0), p_exact))


def wilker_series(family: str, params: Params) -> series.SeriesBound:
    """Exact series of f or u in y = x^2 (starts at the y^2 = x^4 term)."""
    return series.weighted_power_series(_wilker_terms(params.k_exact, params.p_exact), family)


def _wilker_direct_float(family: str, x: float, params: Params) -> float:
    which = ("sinc", "tanc") if family == "trig" else ("sinhc", "tanhc")
    s = _ratio_point(which[0], x)
    t = _ratio_point(which[1], x)
    k, kp, p = params.k, float(params.kp_exact), params.p
    try:
        t1 = 2.0 / (k + 2.0) * s**kp
    except OverflowError:
        t1 = math.copysign(math.inf, 2.0 / (k + 2.0))
    try:
        t2 = k / (k + 2.0) * t**p
    except OverflowError:
        t2 = math.copysign(math.inf, k / (k + 2.0))
    out = t1 + t2 - 1.0
    if math.isnan(out):
        raise NumericalLossOfSignificance(f"indeterminate overflow at x = {x}")
    return out


def _wilker_direct_iv(family: str, x: Interval, params: Params) -> Interval:
    which = ("sinc", "tanc") if family == "trig" else ("sinhc", "tanhc")
    s = _ratio_interval(which[0], x)
    t = _ratio_interval(which[1], x)
    k2 = Interval.from_fraction(params.k_exact + 2)
    ws = Interval(2.0, 2.0) / k2
    wt = Interval.from_fraction(params.k_exact) / k2
    kp = Interval.from_fraction(params.kp_exact)
    p = Interval.from_fraction(params.p_exact)
    return ws * iv_pow_iv(s, kp) + wt * iv_pow_iv(t, p) - 1.0


def iv_pow_iv(base: Interval, expo: Interval) -> Interval:
    """base^expo for base > 0 with an interval exponent (exact rationals)."""
    if expo.lo == expo.hi == 0.0:
        return Interval(1.0, 1.0)
    if base.lo <= 0.0:
        raise DomainError(f"power base must be positive, got {base}")
    if base.lo == base.hi == 1.0:
        return Interval(1.0, 1.0)
    return iv_exp(expo * iv_log(base))


def _wilker_series_iv(family: str, x: Interval, params: Params) -> Interval:
    q = wilker_series(family, params).shift_down(2)
    y = x * x
    return y * y * q.eval_interval(y)


def _wilker_eval(family: str, x, params: Params):
    hi_limit = PI_HALF_LO if family == "trig" else math.inf
    if isinstance(x, Interval):
        if x.lo < 0.0 or (family == "trig" and x.hi > hi_limit):
            raise DomainError(f"window {x} outside the {family} domain")
        if x.hi <= SWITCH_RADIUS:
            return _wilker_series_iv(family, x, params)
        if x.lo >= SWITCH_RADIUS:
            return _wilker_direct_iv(family, x, params)
        return Interval.hull(
            _wilker_series_iv(family, Interval(x.lo, SWITCH_RADIUS), params),
            _wilker_direct_iv(family, Interval(SWITCH_RADIUS, x.hi), params),
        )
    x = float(x)
    if not 0.0 < x < hi_limit:
        raise DomainError(f"x = {x} outside the open {family} domain")
    if x <= SWITCH_RADIUS:
        y = x * x
        return y * y * wilker_series(family, params).shift_down(2).eval_point(y)
    return _wilker_direct_float(family, x, params)


def wilker_trig_f(x, params: Params):
    """f(x; k, p); float in, float out; Interval in, sound Interval out."""
    return _wilker_eval("trig", x, params)


def wilker_hyp_u(x, params: Params):
    """u(x; k, p), the hyperbolic twin of f."""
    return _wilker_eval("hyp", x, params)


def _wilker_mp(family: str, x, params: Params):
    x = mpmath.mpf(x)
    k = mpmath.mpf(params.k_exact.numerator) / params.k_exact.denominator
    p = mpmath.mpf(params.p_exact.numerator) / params.p_exact.denominator
    s = ratio_func_mp("sinc" if family == "trig" else "sinhc", x)
    t = ratio_func_mp("tanc" if family == "trig" else "tanhc", x)
    return 2 / (k + 2) * s ** (k * p) + k / (k + 2) * t**p - 1


def wilker_trig_f_mp(x, params: Params):
    return _wilker_mp("trig", x, params)


def wilker_hyp_u_mp(x, params: Params):
    return _wilker_mp("hyp", x, params)


# ---------------------------------------------------------------------------
# proof auxiliaries g, h, v, w (point evaluation only)
# ---------------------------------------------------------------------------


def _proof_aux_mp(which: str, x, params: Params):
    x = mpmath.mpf(x)
    k = mpmath.mpf(params.k_exact.numerator) / params.k_exact.denominator
    p = mpmath.mpf(params.p_exact.numerator) / params.p_exact.denominator
    if which == "g":
        num = mpmath.sin(x) - x * mpmath.cos(x)
        den = 2 * x - mpmath.sin(2 * x)
        return 1 - 4 * num / den * (mpmath.sin(x) / x) ** ((k - 1) * p) * mpmath.cos(x) ** (p + 1)
    if which == "h":
        a, b, c = (abc_efg_mp(w, x) for w in ("A", "B", "C"))
        return k * p * a + p * b + c
    if which == "v":
        num = mpmath.sinh(x) - x * mpmath.cosh(x)
        den = 2 * x - mpmath.sinh(2 * x)
        return 1 - 4 * num / den * (mpmath.sinh(x) / x) ** (k * p - p) * mpmath.cosh(x) ** (p + 1)
    if which == "w":
        e, f, g = (abc_efg_mp(w, x) for w in ("E", "F", "G"))
        return k * p * e + p * f + g
    raise DomainError(f"unknown proof auxiliary {which!r}")


def proof_aux(which: str, x: float, params: Params) -> float:
    """g, h, v or w at a point; switches to mpmath below the series radius.

    The ratios inside g and v cancel to third order and h, w to ninth, so a
    plain float evaluation near the origin would be pure rounding noise.
    """
    x = float(x)
    domain_hi = PI_HALF_LO if which in ("g", "h") else math.inf
    if not 0.0 < x < domain_hi:
        raise DomainError(f"{which} is defined on (0, {domain_hi}), got {x}")
    if x <= SWITCH_RADIUS:
        with mpmath.workdps(30):
            return float(_proof_aux_mp(which, x, params))
    k, p = params.k, params.p
    if which == "g":
        num = math.sin(x) - x * math.cos(x)
        den = 2 * x - math.sin(2 * x)
        return 1 - 4 * num / den * (math.sin(x) / x) ** ((k - 1) * p) * math.cos(x) ** (p + 1)
    if which == "h":
        a, b, c = (_abc_direct_float(w, x) for w in ("A", "B", "C"))
        return k * p * a + p * b + c
    if which == "v":
        num = math.sinh(x) - x * math.cosh(x)
        den = 2 * x - math.sinh(2 * x)
        return 1 - 4 * num / den * (math.sinh(x) / x) ** (k * p - p) * math.cosh(x) ** (p + 1)
    e, f, g = (_abc_direct_float(w, x) for w in ("E", "F", "G"))
    return k * p * e + p * f + g


def proof_aux_decomposed(which: str, x: float, params: Params) -> float:
    """h and w via the factored form (kA+B)(p + C/(kA+B)) for cross-checks."""
    if which == "h":
        a, b = abc_efg("A", x), abc_efg("B", x)
        return (params.k * a + b) * (params.p + ratio_D(x, params.k))
    if which == "w":
        e, f = abc_efg("E", x), abc_efg("F", x)
        return (params.k * e + f) * (params.p + ratio_H(x, params.k))
    raise DomainError(f"no decomposition for {which!r}")


# ---------------------------------------------------------------------------
# series information: x^4 coefficient and endpoint limits
# ---------------------------------------------------------------------------


def c4_exact(params: Params) -> Fraction:
    """(kp/36)(p + 12/(5(k+2))), the shared x^4 coefficient of f and u."""
    k, p = params.k_exact, params.p_exact
    return k * p / 36 * (p + F(12) / (5 * (k + 2)))


def series_info(family: str, params: Params) -> tuple[float, float]:
    """(c4, endpoint limit) for f (family='trig') or u (family='hyp')."""
    c4 = float(c4_exact(params))
    k, p = params.k, params.p
    if family == "trig":
        if p > 0:
            return c4, math.inf
        if p == 0:
            return c4, 0.0
        return c4, 2.0 / (k + 2.0) * (2.0 / math.pi) ** (k * p) - 1.0
    if family != "hyp":
        raise DomainError(f"unknown family {family!r}")
    if p == 0:
        return c4, 0.0
    if k > 0:
        return c4, math.inf
    # k < -2: the positive-weight tanh term decides
    return c4, (-1.0 if p > 0 else -math.inf)


KERNELS.update(
    {
        "sinc": sinc,
        "tanc": tanc,
        "sinhc": sinhc,
        "tanhc": tanhc,
        "A": lambda x: abc_efg("A", x),
        "B": lambda x: abc_efg("B", x),
        "C": lambda x: abc_efg("C", x),
        "E": lambda x: abc_efg("E", x),
        "F": lambda x: abc_efg("F", x),
        "G": lambda x: abc_efg("G", x),
        "D_ratio": ratio_D,
        "H_ratio": ratio_H,
        "f": wilker_trig_f,
        "u": wilker_hyp_u,
        "g": lambda x, params: proof_aux("g", x, params),
        "h": lambda x, params: proof_aux("h", x, params),
        "v": lambda x, params: proof_aux("v", x, params),
        "w": lambda x, params: proof_aux("w", x, params),
    }
)
